#pragma once

/// \file verifier.hpp
/// \brief Brute-force oracles for embeddings of daisy cubes.
///
/// Everything here is deliberately independent of embedder.cpp: distances
/// come from fresh BFS runs and structure is checked against labels directly.
/// The all-pairs and per-vertex oracles refuse graphs larger than `cap`.

#include "daisy/daisy.hpp"
#include "daisy/embedding.hpp"
#include "daisy/graph.hpp"

#include <optional>
#include <string>
#include <vector>

namespace daisy {

inline constexpr std::size_t kDefaultOracleCap = 4096;
/// The baseline examines up to n candidates at O(n h + m) each.
inline constexpr std::size_t kDefaultBaselineCap = std::size_t{1} << 16;

class VerificationReport {
public:
  struct Check {
    std::string name;
    bool passed;
    std::string witness;  // empty on success
  };

  void pass(std::string name) { checks_.push_back({std::move(name), true, {}}); }
  void fail(std::string name, std::string witness) { checks_.push_back({std::move(name), false, std::move(witness)}); }
  void record(std::string name, const std::optional<std::string>& failure) {
    failure ? fail(std::move(name), *failure) : pass(std::move(name));
  }
  void append(const VerificationReport& other) {
    checks_.insert(checks_.end(), other.checks_.begin(), other.checks_.end());
  }

  bool passed() const noexcept;
  const std::vector<Check>& checks() const noexcept { return checks_; }
  const Check* find(std::string_view name) const;
  /// One line per check: "PASS <name>" or "FAIL <name> witness=<...>".
  std::string render() const;

private:
  std::vector<Check> checks_;
};

/// d_G(a, b) == hamming(e(a), e(b)) for every pair, by BFS from every vertex.
VerificationReport is_isometric(const Graph& g, const Embedding& e, std::size_t cap = kDefaultOracleCap);

/// Injective labels, adjacency exactly at Hamming distance 1, and a downward
/// closed label set. O(n h) with a hash index.
VerificationReport is_proper(const Graph& g, const Embedding& e);

/// Minimal vertices of a proper embedding: labels below the meet of the
/// maximal labels. Throws Error(InvalidArgument) if the label set is not
/// downward closed.
std::vector<VertexId> minimal_vertices(const Embedding& e);

/// Intersection of the graph intervals I(v0, x) over the maximal vertices x,
/// where v0 is the vertex labeled 0^h. Uses graph distances only.
std::vector<VertexId> minimal_vertices_brute(const Graph& g, const Embedding& e,
                                             std::size_t cap = kDefaultOracleCap);

struct EquivalenceResult {
  bool equivalent = false;
  /// Two coordinates of the first embedding flip the same nonempty edge set.
  bool degenerate = false;
  /// permutation[i] = coordinate of the second embedding matched to coordinate i.
  std::vector<std::size_t> permutation;
};

/// Whether e2 is e1 with its coordinates permuted. Coordinates are matched
/// through the edge sets they flip.
EquivalenceResult equivalent(const Graph& g, const Embedding& e1, const Embedding& e2);

/// Label sets equal as sets of words.
bool same_label_set(const Embedding& e1, const Embedding& e2);

struct BaselineResult {
  Embedding labels;
  VertexId root = 0;
  std::size_t candidates_examined = 0;
};

/// Naive proper embedding: embeds from each maximum-degree vertex in id order
/// until the label set is downward closed. Worst case Theta(n (n h + m)).
/// Refuses graphs with more than `cap` vertices.
BaselineResult baseline_proper(const Graph& g, std::size_t cap = kDefaultBaselineCap);

/// Generators x with u <= x.
std::vector<Word> upper_generators(const GeneratorSet& generators, const Word& u);

/// Checks the structural properties on a labeled instance: the daisy
/// structure itself, the down-degree bound per weight level, no edges between
/// private parts of two generator intervals, and for every vertex u of degree h
/// the neighbor, coordinate-cover and two-down-neighbor properties.
VerificationReport structural_audit(const LabeledDaisyCube& dc, std::size_t cap = kDefaultOracleCap);

}  // namespace daisy
