#pragma once

/// \file graph.hpp
/// \brief Immutable undirected simple graph plus BFS machinery.

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <utility>
#include <vector>

namespace daisy {

using VertexId = std::uint32_t;
using Edge = std::pair<VertexId, VertexId>;

/// Simple undirected graph on dense ids 0..n-1. Adjacency lists keep the
/// order in which edges were supplied; that order decides which coordinate
/// each root-neighbor receives during embedding.
class Graph {
public:
  Graph() = default;
  /// Validates ids, self-loops and duplicate edges. Connectivity is not
  /// required here; see is_connected().
  Graph(std::size_t vertex_count, std::vector<Edge> edges);

  std::size_t vertex_count() const noexcept { return offsets_.empty() ? 0 : offsets_.size() - 1; }
  std::size_t edge_count() const noexcept { return edges_.size(); }
  std::span<const Edge> edges() const noexcept { return edges_; }

  std::span<const VertexId> neighbors(VertexId v) const noexcept {
    return {adjacency_.data() + offsets_[v], adjacency_.data() + offsets_[v + 1]};
  }
  std::size_t degree(VertexId v) const noexcept { return offsets_[v + 1] - offsets_[v]; }
  /// O(deg(a)) membership test.
  bool adjacent(VertexId a, VertexId b) const noexcept;

  bool is_connected() const;

private:
  std::vector<Edge> edges_;
  std::vector<std::size_t> offsets_;
  std::vector<VertexId> adjacency_;
};

struct DistanceField {
  static constexpr std::uint32_t kUnreached = UINT32_MAX;

  VertexId root = 0;
  std::vector<std::uint32_t> dist;
  /// Vertices in nondecreasing distance order.
  std::vector<VertexId> order;
};

/// Exact shortest-path distances from `root`. Throws Error(NotConnected) if
/// some vertex is unreachable.
DistanceField bfs(const Graph& g, VertexId root);

/// Neighbors of v one level closer to the root of `d`.
std::vector<VertexId> down_neighbors(const Graph& g, const DistanceField& d, VertexId v);

struct MaxDegree {
  VertexId vertex;
  std::size_t degree;
};

/// Vertex of maximum degree, smallest id among ties. Requires n >= 1.
MaxDegree max_degree_vertex(const Graph& g);

/// Reads the `daisy-graph 1` text format. Rejects disconnected graphs.
Graph read_graph(std::istream& in);
void write_graph(std::ostream& out, const Graph& g);

}  // namespace daisy
