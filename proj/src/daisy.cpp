#include "daisy/daisy.hpp"

#include "daisy/error.hpp"
#include "text_format.hpp"

#include <algorithm>
#include <istream>
#include <numeric>
#include <ostream>
#include <random>
#include <string>
#include <unordered_map>
#include <unordered_set>

namespace daisy {

namespace {

void require_common_width(const std::vector<Word>& words) {
  for (const auto& w : words)
    if (w.width() != words.front().width())
      throw Error(ErrorKind::InvalidArgument, "generator words have different widths");
}

// Words avoiding two adjacent 1s (cyclically adjacent when `cyclic`) to which
// no further 1 can be added.
std::vector<Word> maximal_independent_words(std::size_t h, bool cyclic) {
  std::vector<Word> out;
  std::vector<char> bits(h, 0);
  auto conflicts = [&](std::size_t i) {
    // would setting bit i create two adjacent ones
    if (cyclic && h == 1) return true;
    const bool left = i > 0 ? bits[i - 1] : (cyclic ? bits[h - 1] : 0);
    const bool right = i + 1 < h ? bits[i + 1] : (cyclic ? bits[0] : 0);
    return left || right;
  };
  auto maximal = [&] {
    for (std::size_t i = 0; i < h; ++i)
      if (!bits[i] && !conflicts(i)) return false;
    return true;
  };
  auto dfs = [&](auto&& self, std::size_t i) -> void {
    if (i == h) {
      if (cyclic && h > 1 && bits[0] && bits[h - 1]) return;
      if (!maximal()) return;
      Word w = Word::zeros(h);
      for (std::size_t k = 0; k < h; ++k)
        if (bits[k]) w.set(k);
      out.push_back(std::move(w));
      return;
    }
    // a zero surrounded by zeros can never be part of a maximal word
    if (!(i >= 2 && !bits[i - 1] && !bits[i - 2])) {
      bits[i] = 0;
      self(self, i + 1);
    }
    if ((i == 0 || !bits[i - 1]) && !(cyclic && h == 1)) {
      bits[i] = 1;
      self(self, i + 1);
      bits[i] = 0;
    }
  };
  dfs(dfs, 0);
  return out;
}

}  // namespace

std::vector<Word> antichain_of(const std::vector<Word>& words) {
  if (words.empty()) throw Error(ErrorKind::InvalidArgument, "generator set is empty");
  require_common_width(words);
  std::vector<Word> unique = words;
  std::sort(unique.begin(), unique.end());
  unique.erase(std::unique(unique.begin(), unique.end()), unique.end());
  std::vector<Word> out;
  for (std::size_t i = 0; i < unique.size(); ++i) {
    bool dominated = false;
    for (std::size_t j = 0; j < unique.size() && !dominated; ++j)
      dominated = i != j && leq(unique[i], unique[j]);
    if (!dominated) out.push_back(unique[i]);
  }
  return out;
}

std::vector<Word> downward_closure(const std::vector<Word>& antichain, std::size_t cap) {
  std::unordered_set<Word, WordHash> seen;
  std::vector<Word> frontier;
  for (const auto& x : antichain)
    if (seen.insert(x).second) frontier.push_back(x);
  if (seen.size() > cap) throw Error(ErrorKind::CapExceeded, "closure exceeds cap of " + std::to_string(cap));
  while (!frontier.empty()) {
    std::vector<Word> next;
    for (const auto& w : frontier) {
      for (auto c : w.support()) {
        Word child = w;
        child.flip(c);
        if (seen.insert(child).second) {
          if (seen.size() > cap)
            throw Error(ErrorKind::CapExceeded, "closure exceeds cap of " + std::to_string(cap));
          next.push_back(std::move(child));
        }
      }
    }
    frontier = std::move(next);
  }
  std::vector<Word> out(seen.begin(), seen.end());
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Word> interval(const Word& u, const Word& v) {
  const auto free = (u ^ v).support();
  if (free.size() >= 63 || (std::size_t{1} << free.size()) > kDefaultClosureCap)
    throw Error(ErrorKind::CapExceeded, "interval too large to enumerate");
  std::vector<Word> out;
  out.reserve(std::size_t{1} << free.size());
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << free.size()); ++mask) {
    Word w = u;
    for (std::size_t k = 0; k < free.size(); ++k)
      if ((mask >> k) & 1U) w.flip(free[k]);
    out.push_back(std::move(w));
  }
  std::sort(out.begin(), out.end());
  return out;
}

GeneratorSet::GeneratorSet(std::vector<Word> words)
    : width_(0), words_(std::move(words)), antichain_(antichain_of(words_)), meet_all_(Word::ones(words_.front().width())) {
  width_ = words_.front().width();
  for (const auto& x : antichain_) meet_all_ &= x;
}

LabeledDaisyCube build(const GeneratorSet& generators, std::size_t cap) {
  auto labels = downward_closure(generators.antichain(), cap);
  std::unordered_map<Word, VertexId, WordHash> id;
  id.reserve(labels.size());
  for (VertexId v = 0; v < labels.size(); ++v) id.emplace(labels[v], v);

  std::vector<Edge> edges;
  for (VertexId v = 0; v < labels.size(); ++v) {
    for (auto c : labels[v].support()) {
      Word lower = labels[v];
      lower.flip(c);
      const auto w = id.at(lower);
      edges.emplace_back(std::min(v, w), std::max(v, w));
    }
  }
  std::sort(edges.begin(), edges.end());
  Graph g(labels.size(), std::move(edges));
  return {std::move(g), Embedding(generators.width(), std::move(labels)), generators};
}

GeneratorSet family(std::string_view name, std::size_t h, std::uint64_t seed) {
  if (h == 0) throw Error(ErrorKind::InvalidArgument, "h must be at least 1");
  if (name == "hypercube") return GeneratorSet({Word::ones(h)});
  if (name == "qminus") {
    if (h == 1) return GeneratorSet({Word::zeros(1)});
    std::vector<Word> words;
    for (std::size_t i = 0; i < h; ++i) {
      Word w = Word::ones(h);
      w.flip(i);
      words.push_back(std::move(w));
    }
    return GeneratorSet(std::move(words));
  }
  if (name == "fibonacci") return GeneratorSet(maximal_independent_words(h, false));
  if (name == "lucas") {
    auto words = maximal_independent_words(h, true);
    if (words.empty()) words.push_back(Word::zeros(h));  // h == 1: only the empty word is allowed
    return GeneratorSet(std::move(words));
  }
  if (name == "random-antichain") {
    std::mt19937_64 rng(seed);
    const std::size_t k = std::max<std::size_t>(2, h / 2);
    std::vector<Word> words;
    for (std::size_t j = 0; j < k; ++j) {
      Word w = Word::zeros(h);
      for (std::size_t i = 0; i < h; ++i)
        if (rng() >> 63) w.set(i);
      words.push_back(std::move(w));
    }
    return GeneratorSet(std::move(words));
  }
  throw Error(ErrorKind::InvalidArgument, "unknown family '" + std::string(name) + "'");
}

StrippedInstance strip(const Graph& g, const Embedding& labels, std::uint64_t seed) {
  const auto n = g.vertex_count();
  if (labels.size() != n) throw Error(ErrorKind::InvalidArgument, "labels do not match graph size");
  std::vector<VertexId> perm(n);
  std::iota(perm.begin(), perm.end(), VertexId{0});
  std::mt19937_64 rng(seed);
  if (seed != 0) std::shuffle(perm.begin(), perm.end(), rng);

  std::vector<Edge> edges;
  edges.reserve(g.edge_count());
  for (const auto& [a, b] : g.edges()) edges.emplace_back(std::min(perm[a], perm[b]), std::max(perm[a], perm[b]));
  if (seed != 0) std::shuffle(edges.begin(), edges.end(), rng);

  std::vector<Word> truth(labels.labels());
  for (VertexId v = 0; v < n; ++v) truth[perm[v]] = labels[v];
  return {Graph(n, std::move(edges)), Embedding(labels.width(), std::move(truth)), std::move(perm)};
}

GeneratorSet read_words(std::istream& in) {
  text::LineReader reader(in);
  const auto [k, h] = text::read_header(reader, "daisy-words");
  if (k == 0) reader.fail("generator set must contain at least one word");
  if (h == 0) reader.fail("word width must be at least 1");
  std::vector<Word> words;
  for (std::uint64_t i = 0; i < k; ++i) words.push_back(Word::parse(reader.require("word line"), h));
  text::expect_end(reader);
  return GeneratorSet(std::move(words));
}

void write_words(std::ostream& out, const GeneratorSet& generators) {
  out << "daisy-words 1\n" << generators.words().size() << ' ' << generators.width() << '\n';
  for (const auto& w : generators.words()) out << w.to_string() << '\n';
}

}  // namespace daisy
