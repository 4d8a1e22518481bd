#pragma once

/// \file embedder.hpp
/// \brief Linear-time isometric and proper hypercube embeddings of daisy cubes.
///
/// embed_isometric() labels a vertex u of maximum degree h with 0^h, gives
/// its i-th neighbor the i-th unit word, and labels every farther vertex with
/// the join of the labels of two of its down-neighbors. For a daisy cube
/// every such vertex has at least two down-neighbors, so the result is an
/// isometric embedding, but u need not be a minimal vertex.
///
/// proper_embed() then locates a minimal vertex v by marking, level by
/// level, the tops of maximal cubes around u together with the vertices that
/// have no up-neighbors. The meet s of the marked labels is the label of v,
/// and XOR-ing every label with s moves v to 0^h, which makes the labeling
/// proper (its label set is downward closed).

#include "daisy/embedding.hpp"
#include "daisy/graph.hpp"
#include "daisy/word.hpp"

#include <cstdint>
#include <vector>

namespace daisy {

struct IsometricEmbedding {
  Embedding labels;
  /// The vertex labeled 0^h.
  VertexId root = 0;
  /// BFS distance from root; equals the weight of each label.
  std::vector<std::uint32_t> level;
  /// BFS parent (root is its own parent).
  std::vector<VertexId> parent;
};

/// Embeds a daisy cube rooted at max_degree_vertex(g). Widths are
/// max(1, max degree). Throws Error(NotDaisy) when a vertex at distance >= 2
/// has fewer than two down-neighbors or a label weight disagrees with its
/// BFS level, and Error(NotConnected) on disconnected input.
IsometricEmbedding embed_isometric(const Graph& g);
/// Same, rooted at `root`, which must have maximum degree for the result to
/// be meaningful.
IsometricEmbedding embed_isometric_at(const Graph& g, VertexId root);

struct MarkState {
  /// levels[i] lists the vertices of label weight i, for i = 0..h+1
  /// (levels[h+1] is always empty).
  std::vector<std::vector<VertexId>> levels;
  /// Nonzero marks equal the weight of the marked vertex.
  std::vector<std::uint32_t> q;

  std::vector<VertexId> marked() const;
};

/// Marks the tops of maximal cubes containing the root, plus the vertices
/// whose neighbors all lie one level lower. Each level reads the marks of
/// the previous level as they stood when that level finished.
MarkState mark_extremal(const Graph& g, const Embedding& beta, VertexId root);

/// Meet of 1^h with the labels of every marked vertex.
Word minimal_shift(const Embedding& beta, const MarkState& marks);

struct ProperEmbedding {
  Embedding labels;
  /// The minimal vertex, now labeled 0^h.
  VertexId minimal = 0;
  /// Its label under the isometric embedding; every label was XOR-ed with it.
  Word shift;
  /// Root of the intermediate isometric embedding.
  VertexId root = 0;
  std::vector<VertexId> marked;
};

/// Proper embedding in O(n + m). Throws Error(NotDaisy) if the shift word is
/// not a vertex label, plus everything embed_isometric() throws.
ProperEmbedding proper_embed(const Graph& g);

}  // namespace daisy
