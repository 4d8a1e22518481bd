#pragma once
// Brute-force oracles shared by the test binaries. Everything here works on
// plain strings and dense matrices so it shares no code with the library.

#include "daisy/daisy.hpp"
#include "daisy/graph.hpp"
#include "daisy/word.hpp"

#include <algorithm>
#include <cstdint>
#include <set>
#include <string>
#include <vector>

namespace oracle {

inline std::string bits(std::uint64_t value, std::size_t h) {
  std::string s(h, '0');
  for (std::size_t i = 0; i < h; ++i)
    if ((value >> (h - 1 - i)) & 1U) s[i] = '1';
  return s;
}

inline bool below(const std::string& a, const std::string& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] == '1' && b[i] == '0') return false;
  return true;
}

inline std::size_t distance(const std::string& a, const std::string& b) {
  std::size_t d = 0;
  for (std::size_t i = 0; i < a.size(); ++i) d += a[i] != b[i];
  return d;
}

inline std::string xor_of(const std::string& a, const std::string& b) {
  std::string s(a.size(), '0');
  for (std::size_t i = 0; i < a.size(); ++i) s[i] = a[i] != b[i] ? '1' : '0';
  return s;
}

// every word of B^h below some generator
inline std::set<std::string> closure(const std::vector<std::string>& generators, std::size_t h) {
  std::set<std::string> out;
  for (std::uint64_t x = 0; x < (std::uint64_t{1} << h); ++x) {
    const auto w = bits(x, h);
    for (const auto& g : generators)
      if (below(w, g)) {
        out.insert(w);
        break;
      }
  }
  return out;
}

// shortest-path interval in Q_h
inline std::set<std::string> interval(const std::string& u, const std::string& v) {
  std::set<std::string> out;
  const auto h = u.size();
  for (std::uint64_t x = 0; x < (std::uint64_t{1} << h); ++x) {
    const auto w = bits(x, h);
    if (distance(u, w) + distance(w, v) == distance(u, v)) out.insert(w);
  }
  return out;
}

inline bool downward_closed(const std::set<std::string>& labels) {
  for (const auto& w : labels)
    for (std::size_t i = 0; i < w.size(); ++i)
      if (w[i] == '1') {
        auto lower = w;
        lower[i] = '0';
        if (!labels.contains(lower)) return false;
      }
  return true;
}

// all-pairs distances by Floyd-Warshall; UINT32_MAX when unreachable
inline std::vector<std::vector<std::uint32_t>> all_pairs(const daisy::Graph& g) {
  constexpr std::uint32_t inf = UINT32_MAX / 2;
  const auto n = g.vertex_count();
  std::vector<std::vector<std::uint32_t>> d(n, std::vector<std::uint32_t>(n, inf));
  for (std::size_t v = 0; v < n; ++v) d[v][v] = 0;
  for (auto [a, b] : g.edges()) d[a][b] = d[b][a] = 1;
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
  return d;
}

inline std::vector<std::string> strings(const daisy::Embedding& e) {
  std::vector<std::string> out;
  for (const auto& w : e.labels()) out.push_back(w.to_string());
  return out;
}

inline std::vector<std::string> strings(const std::vector<daisy::Word>& words) {
  std::vector<std::string> out;
  for (const auto& w : words) out.push_back(w.to_string());
  return out;
}

// vertices v whose XOR relabeling puts v at 0^h and leaves a downward closed set
inline std::set<daisy::VertexId> minimal_by_shift(const daisy::Embedding& e) {
  const auto labels = strings(e);
  std::set<daisy::VertexId> out;
  for (daisy::VertexId v = 0; v < labels.size(); ++v) {
    std::set<std::string> shifted;
    for (const auto& w : labels) shifted.insert(xor_of(w, labels[v]));
    if (downward_closed(shifted)) out.insert(v);
  }
  return out;
}

// induced subgraph of Q_h on `labels`, vertices numbered in the given order
inline daisy::Graph hypercube_subgraph(const std::vector<std::string>& labels) {
  std::vector<daisy::Edge> edges;
  for (daisy::VertexId a = 0; a < labels.size(); ++a)
    for (daisy::VertexId b = a + 1; b < labels.size(); ++b)
      if (distance(labels[a], labels[b]) == 1) edges.emplace_back(a, b);
  return daisy::Graph(labels.size(), std::move(edges));
}

// renumbers g by perm[old] = new, keeping the edge order
inline daisy::Graph relabel(const daisy::Graph& g, const std::vector<daisy::VertexId>& perm) {
  std::vector<daisy::Edge> edges;
  for (auto [a, b] : g.edges()) edges.emplace_back(perm[a], perm[b]);
  return daisy::Graph(g.vertex_count(), std::move(edges));
}

// permutation that moves `first` to id 0 and shifts the ids below it up by one
inline std::vector<daisy::VertexId> move_to_front(std::size_t n, daisy::VertexId first) {
  std::vector<daisy::VertexId> perm(n);
  for (daisy::VertexId v = 0; v < n; ++v) perm[v] = v < first ? v + 1 : v;
  perm[first] = 0;
  return perm;
}

inline daisy::VertexId vertex_labeled(const daisy::Embedding& e, const std::string& label) {
  for (daisy::VertexId v = 0; v < e.size(); ++v)
    if (e[v].to_string() == label) return v;
  return UINT32_MAX;
}

inline daisy::GeneratorSet generators(const std::vector<std::string>& words) {
  std::vector<daisy::Word> out;
  for (const auto& w : words) out.push_back(daisy::Word::parse(w));
  return daisy::GeneratorSet(std::move(out));
}

}  // namespace oracle
