#include "daisy/word.hpp"

#include "daisy/error.hpp"

#include <bit>
#include <limits>

namespace daisy {

namespace {

// splitmix64 finalizer
std::uint64_t mix(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

}  // namespace

Word::Word(std::size_t width) {
  if (width == 0) throw Error(ErrorKind::InvalidArgument, "word width must be at least 1");
  if (width > std::numeric_limits<std::uint32_t>::max())
    throw Error(ErrorKind::InvalidArgument, "word width too large");
  width_ = static_cast<std::uint32_t>(width);
  blocks_.assign(blocks_for(width), 0);
}

Word Word::zeros(std::size_t width) { return Word(width); }

Word Word::ones(std::size_t width) {
  Word w(width);
  for (auto& b : w.blocks_) b = ~Block{0};
  if (const auto tail = width % kBlockBits; tail != 0) w.blocks_.back() = (Block{1} << tail) - 1;
  return w;
}

Word Word::from_blocks(std::size_t width, const Block* blocks) {
  Word w(width);
  for (std::size_t k = 0; k < w.blocks_.size(); ++k) w.blocks_[k] = blocks[k];
  return w;
}

Word Word::unit(std::size_t width, std::size_t coord) {
  Word w(width);
  w.set(coord);
  return w;
}

Word Word::parse(std::string_view text, std::size_t expected_width) {
  if (text.empty()) throw Error(ErrorKind::Format, "empty word");
  if (expected_width != 0 && text.size() != expected_width)
    throw Error(ErrorKind::Format, "word '" + std::string(text) + "' has length " + std::to_string(text.size()) +
                                       ", expected " + std::to_string(expected_width));
  Word w(text.size());
  for (std::size_t i = 0; i < text.size(); ++i) {
    switch (text[i]) {
      case '0': break;
      case '1': w.set(i); break;
      default: throw Error(ErrorKind::Format, "invalid character in word '" + std::string(text) + "'");
    }
  }
  return w;
}

bool Word::test(std::size_t coord) const {
  if (coord >= width_) throw Error(ErrorKind::InvalidArgument, "coordinate out of range");
  return (blocks_[coord / kBlockBits] >> (coord % kBlockBits)) & 1U;
}

void Word::set(std::size_t coord, bool value) {
  if (coord >= width_) throw Error(ErrorKind::InvalidArgument, "coordinate out of range");
  const Block mask = Block{1} << (coord % kBlockBits);
  if (value)
    blocks_[coord / kBlockBits] |= mask;
  else
    blocks_[coord / kBlockBits] &= ~mask;
}

void Word::flip(std::size_t coord) {
  if (coord >= width_) throw Error(ErrorKind::InvalidArgument, "coordinate out of range");
  blocks_[coord / kBlockBits] ^= Block{1} << (coord % kBlockBits);
}

std::size_t Word::weight() const noexcept {
  std::size_t total = 0;
  for (auto b : blocks_) total += static_cast<std::size_t>(std::popcount(b));
  return total;
}

bool Word::is_zero() const noexcept {
  for (auto b : blocks_)
    if (b != 0) return false;
  return true;
}

std::vector<std::size_t> Word::support() const {
  std::vector<std::size_t> out;
  for (std::size_t k = 0; k < blocks_.size(); ++k) {
    for (Block b = blocks_[k]; b != 0; b &= b - 1)
      out.push_back(k * kBlockBits + static_cast<std::size_t>(std::countr_zero(b)));
  }
  return out;
}

std::string Word::to_string() const {
  std::string s(width_, '0');
  for (auto i : support()) s[i] = '1';
  return s;
}

void Word::require_same_width(const Word& other) const {
  if (width_ != other.width_)
    throw Error(ErrorKind::InvalidArgument,
                "word width mismatch: " + std::to_string(width_) + " vs " + std::to_string(other.width_));
}

Word& Word::operator&=(const Word& other) {
  require_same_width(other);
  for (std::size_t k = 0; k < blocks_.size(); ++k) blocks_[k] &= other.blocks_[k];
  return *this;
}

Word& Word::operator|=(const Word& other) {
  require_same_width(other);
  for (std::size_t k = 0; k < blocks_.size(); ++k) blocks_[k] |= other.blocks_[k];
  return *this;
}

Word& Word::operator^=(const Word& other) {
  require_same_width(other);
  for (std::size_t k = 0; k < blocks_.size(); ++k) blocks_[k] ^= other.blocks_[k];
  return *this;
}

std::strong_ordering operator<=>(const Word& a, const Word& b) noexcept {
  if (a.width_ != b.width_) return a.width_ <=> b.width_;
  for (std::size_t k = 0; k < a.blocks_.size(); ++k) {
    const auto diff = a.blocks_[k] ^ b.blocks_[k];
    if (diff == 0) continue;
    // lowest differing bit is the leftmost differing character
    const auto bit = Word::Block{1} << std::countr_zero(diff);
    return (a.blocks_[k] & bit) ? std::strong_ordering::greater : std::strong_ordering::less;
  }
  return std::strong_ordering::equal;
}

std::size_t Word::hash() const noexcept {
  std::uint64_t h = mix(width_);
  for (auto b : blocks_) h = mix(h ^ b);
  return static_cast<std::size_t>(h);
}

std::size_t hamming(const Word& x, const Word& y) { return (x ^ y).weight(); }

bool leq(const Word& x, const Word& y) {
  if (x.width() != y.width())
    throw Error(ErrorKind::InvalidArgument,
                "word width mismatch: " + std::to_string(x.width()) + " vs " + std::to_string(y.width()));
  for (std::size_t k = 0; k < x.block_count(); ++k)
    if ((x.block(k) & ~y.block(k)) != 0) return false;
  return true;
}

Word meet(const Word& x, const Word& y) { return x & y; }
Word join(const Word& x, const Word& y) { return x | y; }
Word exclusive_or(const Word& x, const Word& y) { return x ^ y; }
Word flip_under(const Word& v, const Word& u) { return u ^ v; }

}  // namespace daisy
