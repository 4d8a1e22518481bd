#pragma once

/// \file daisy.hpp
/// \brief Construction of labeled daisy cubes Q_h(X).
///
/// Q_h(X) is the subgraph of the hypercube Q_h induced by every word that
/// lies below some generator. Only the maximal generators (the antichain)
/// matter, and the vertex set is the union of the intervals I(0^h, x).

#include "daisy/embedding.hpp"
#include "daisy/graph.hpp"
#include "daisy/word.hpp"

#include <cstdint>
#include <iosfwd>
#include <string_view>
#include <vector>

namespace daisy {

inline constexpr std::size_t kDefaultClosureCap = std::size_t{1} << 22;

/// Maximal elements of `words` under the coordinatewise order, deduplicated
/// and sorted. Throws on an empty set or mixed widths.
std::vector<Word> antichain_of(const std::vector<Word>& words);

/// Every word below some element of `antichain`, in lexicographic order.
/// Descends one bit at a time from the generators, so the cost is
/// proportional to the closure size times h. Throws Error(CapExceeded) once
/// the closure grows beyond `cap`.
std::vector<Word> downward_closure(const std::vector<Word>& antichain, std::size_t cap = kDefaultClosureCap);

/// All words on shortest u,v-paths of Q_h, in lexicographic order.
std::vector<Word> interval(const Word& u, const Word& v);

class GeneratorSet {
public:
  explicit GeneratorSet(std::vector<Word> words);

  std::size_t width() const noexcept { return width_; }
  const std::vector<Word>& words() const noexcept { return words_; }
  /// Maximal words.
  const std::vector<Word>& antichain() const noexcept { return antichain_; }
  /// Meet of the antichain; the minimal vertices are exactly the words below it.
  const Word& meet_all() const noexcept { return meet_all_; }

private:
  std::size_t width_;
  std::vector<Word> words_;
  std::vector<Word> antichain_;
  Word meet_all_;
};

struct LabeledDaisyCube {
  Graph graph;
  Embedding labels;
  GeneratorSet generators;
};

/// Builds Q_h(X). Vertex ids follow the lexicographic order of the labels
/// and the edge list is sorted.
LabeledDaisyCube build(const GeneratorSet& generators, std::size_t cap = kDefaultClosureCap);

/// Named generator families: hypercube, qminus, fibonacci, lucas,
/// random-antichain. The seed only matters for random-antichain.
GeneratorSet family(std::string_view name, std::size_t h, std::uint64_t seed = 0);

struct StrippedInstance {
  Graph graph;
  /// Labels of the renumbered vertices, withheld from the algorithms.
  Embedding truth;
  /// permutation[old id] = new id.
  std::vector<VertexId> permutation;
};

/// Renumbers vertices by a seed-determined permutation and shuffles the edge
/// list. Seed 0 is the identity and keeps the edge order.
StrippedInstance strip(const Graph& g, const Embedding& labels, std::uint64_t seed);
inline StrippedInstance strip(const LabeledDaisyCube& dc, std::uint64_t seed) {
  return strip(dc.graph, dc.labels, seed);
}

/// Reads the `daisy-words 1` text format.
GeneratorSet read_words(std::istream& in);
void write_words(std::ostream& out, const GeneratorSet& generators);

}  // namespace daisy
