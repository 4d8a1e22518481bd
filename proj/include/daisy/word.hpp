#pragma once

/// \file word.hpp
/// \brief Fixed-width binary words and the Boolean-lattice operations on B^h.
///
/// Coordinate 0 is the leftmost character of the string form, so the word
/// "10011" has coordinates 0, 3 and 4 set. Words up to 128 bits live inline;
/// wider words spill to the heap.

#include <boost/container/small_vector.hpp>

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

namespace daisy {

class Word {
public:
  using Block = std::uint64_t;
  static constexpr std::size_t kBlockBits = 64;

  /// Width-0 placeholder; only assignment and comparison are meaningful.
  Word() = default;

  /// All-zero word 0^h. Throws on h == 0.
  static Word zeros(std::size_t width);
  /// All-one word 1^h.
  static Word ones(std::size_t width);
  /// The word with exactly coordinate `coord` set (0^{i-1} 1 0^{h-i}).
  static Word unit(std::size_t width, std::size_t coord);
  /// Parses a '0'/'1' string. When `expected_width` is nonzero the string
  /// length must match it.
  static Word parse(std::string_view text, std::size_t expected_width = 0);
  /// Builds a word from packed blocks (coordinate c is bit c % 64 of block
  /// c / 64). Bits past `width` must be zero.
  static Word from_blocks(std::size_t width, const Block* blocks);
  static std::size_t blocks_for(std::size_t width) noexcept { return (width + kBlockBits - 1) / kBlockBits; }

  std::size_t width() const noexcept { return width_; }
  bool test(std::size_t coord) const;
  void set(std::size_t coord, bool value = true);
  void flip(std::size_t coord);

  /// Number of 1s.
  std::size_t weight() const noexcept;
  bool is_zero() const noexcept;
  /// Set coordinates in increasing order.
  std::vector<std::size_t> support() const;
  std::string to_string() const;

  Word& operator&=(const Word& other);
  Word& operator|=(const Word& other);
  Word& operator^=(const Word& other);

  friend Word operator&(Word a, const Word& b) { return a &= b; }
  friend Word operator|(Word a, const Word& b) { return a |= b; }
  friend Word operator^(Word a, const Word& b) { return a ^= b; }

  friend bool operator==(const Word& a, const Word& b) noexcept {
    return a.width_ == b.width_ && a.blocks_ == b.blocks_;
  }
  /// Lexicographic order of the string forms (shorter words first on width
  /// mismatch).
  friend std::strong_ordering operator<=>(const Word& a, const Word& b) noexcept;

  std::size_t hash() const noexcept;

  std::size_t block_count() const noexcept { return blocks_.size(); }
  Block block(std::size_t i) const noexcept { return blocks_[i]; }

private:
  explicit Word(std::size_t width);
  void require_same_width(const Word& other) const;

  std::uint32_t width_ = 0;
  boost::container::small_vector<Block, 2> blocks_;
};

struct WordHash {
  std::size_t operator()(const Word& w) const noexcept { return w.hash(); }
};

std::size_t hamming(const Word& x, const Word& y);
/// Coordinatewise order: x_i <= y_i for every i.
bool leq(const Word& x, const Word& y);
Word meet(const Word& x, const Word& y);
Word join(const Word& x, const Word& y);
Word exclusive_or(const Word& x, const Word& y);

/// The flip involution that complements u on the support of v. Equal to u ^ v;
/// maps v to 0^h and 0^h to v.
Word flip_under(const Word& v, const Word& u);

}  // namespace daisy

template <>
struct std::hash<daisy::Word> {
  std::size_t operator()(const daisy::Word& w) const noexcept { return w.hash(); }
};
