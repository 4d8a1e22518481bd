#include "daisy/graph.hpp"

#include "daisy/error.hpp"
#include "text_format.hpp"

#include <istream>
#include <limits>
#include <ostream>
#include <string>

namespace daisy {

Graph::Graph(std::size_t vertex_count, std::vector<Edge> edges) : edges_(std::move(edges)) {
  if (vertex_count >= std::numeric_limits<VertexId>::max())
    throw Error(ErrorKind::InvalidArgument, "too many vertices");
  std::vector<std::size_t> degree(vertex_count, 0);
  for (const auto& [a, b] : edges_) {
    if (a >= vertex_count || b >= vertex_count)
      throw Error(ErrorKind::InvalidArgument,
                  "edge " + std::to_string(a) + "-" + std::to_string(b) + " references a missing vertex");
    if (a == b) throw Error(ErrorKind::InvalidArgument, "self-loop at vertex " + std::to_string(a));
    ++degree[a];
    ++degree[b];
  }
  offsets_.assign(vertex_count + 1, 0);
  for (std::size_t v = 0; v < vertex_count; ++v) offsets_[v + 1] = offsets_[v] + degree[v];
  adjacency_.resize(offsets_.back());
  std::vector<std::size_t> fill(offsets_.begin(), offsets_.end() - 1);
  for (const auto& [a, b] : edges_) {
    adjacency_[fill[a]++] = b;
    adjacency_[fill[b]++] = a;
  }

  std::vector<VertexId> stamp(vertex_count, std::numeric_limits<VertexId>::max());
  for (std::size_t v = 0; v < vertex_count; ++v) {
    for (auto w : neighbors(static_cast<VertexId>(v))) {
      if (stamp[w] == v)
        throw Error(ErrorKind::InvalidArgument,
                    "duplicate edge " + std::to_string(v) + "-" + std::to_string(w));
      stamp[w] = static_cast<VertexId>(v);
    }
  }
}

bool Graph::adjacent(VertexId a, VertexId b) const noexcept {
  for (auto w : neighbors(a))
    if (w == b) return true;
  return false;
}

bool Graph::is_connected() const {
  const auto n = vertex_count();
  if (n == 0) return true;
  std::vector<bool> seen(n, false);
  std::vector<VertexId> stack{0};
  seen[0] = true;
  std::size_t reached = 1;
  while (!stack.empty()) {
    const auto v = stack.back();
    stack.pop_back();
    for (auto w : neighbors(v)) {
      if (!seen[w]) {
        seen[w] = true;
        ++reached;
        stack.push_back(w);
      }
    }
  }
  return reached == n;
}

DistanceField bfs(const Graph& g, VertexId root) {
  const auto n = g.vertex_count();
  if (root >= n) throw Error(ErrorKind::InvalidArgument, "bfs root out of range");
  DistanceField d;
  d.root = root;
  d.dist.assign(n, DistanceField::kUnreached);
  d.order.reserve(n);
  d.dist[root] = 0;
  d.order.push_back(root);
  for (std::size_t head = 0; head < d.order.size(); ++head) {
    const auto v = d.order[head];
    for (auto w : g.neighbors(v)) {
      if (d.dist[w] == DistanceField::kUnreached) {
        d.dist[w] = d.dist[v] + 1;
        d.order.push_back(w);
      }
    }
  }
  if (d.order.size() != n)
    throw Error(ErrorKind::NotConnected, "graph is disconnected: " + std::to_string(n - d.order.size()) +
                                             " vertices unreachable from " + std::to_string(root));
  return d;
}

std::vector<VertexId> down_neighbors(const Graph& g, const DistanceField& d, VertexId v) {
  std::vector<VertexId> out;
  for (auto w : g.neighbors(v))
    if (d.dist[w] + 1 == d.dist[v]) out.push_back(w);
  return out;
}

MaxDegree max_degree_vertex(const Graph& g) {
  if (g.vertex_count() == 0) throw Error(ErrorKind::InvalidArgument, "empty graph");
  MaxDegree best{0, g.degree(0)};
  for (VertexId v = 1; v < g.vertex_count(); ++v)
    if (g.degree(v) > best.degree) best = {v, g.degree(v)};
  return best;
}

Graph read_graph(std::istream& in) {
  text::LineReader reader(in);
  const auto [n, m] = text::read_header(reader, "daisy-graph");
  if (n == 0) reader.fail("graph must have at least one vertex");
  if (n >= std::numeric_limits<VertexId>::max()) reader.fail("vertex count too large");
  std::vector<Edge> edges;
  edges.reserve(m);
  for (std::uint64_t i = 0; i < m; ++i) {
    const auto line = reader.require("edge line");
    const auto parts = text::split(line);
    if (parts.size() != 2) reader.fail("expected '<u> <v>'");
    const auto u = text::parse_uint(parts[0]);
    const auto v = text::parse_uint(parts[1]);
    if (!u || !v) reader.fail("expected two vertex ids");
    if (!(*u < *v)) reader.fail("edge endpoints must satisfy u < v");
    if (*v >= n) reader.fail("vertex id " + std::to_string(*v) + " out of range");
    edges.emplace_back(static_cast<VertexId>(*u), static_cast<VertexId>(*v));
  }
  text::expect_end(reader);
  Graph g;
  try {
    g = Graph(n, std::move(edges));
  } catch (const Error& e) {
    throw Error(ErrorKind::Format, e.what());
  }
  if (!g.is_connected()) throw Error(ErrorKind::Format, "graph is disconnected");
  return g;
}

void write_graph(std::ostream& out, const Graph& g) {
  out << "daisy-graph 1\n" << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (const auto& [a, b] : g.edges()) {
    const auto lo = std::min(a, b);
    const auto hi = std::max(a, b);
    out << lo << ' ' << hi << '\n';
  }
}

}  // namespace daisy
