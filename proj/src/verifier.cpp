#include "daisy/verifier.hpp"

#include "daisy/embedder.hpp"
#include "daisy/error.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

namespace daisy {

namespace {

void require_cap(const Graph& g, std::size_t cap, const char* what) {
  if (g.vertex_count() > cap)
    throw Error(ErrorKind::CapExceeded, std::string(what) + ": " + std::to_string(g.vertex_count()) +
                                            " vertices exceeds cap of " + std::to_string(cap));
}

std::string pair_witness(VertexId a, VertexId b) { return std::to_string(a) + "," + std::to_string(b); }

// Label -> first vertex carrying it.
std::unordered_map<Word, VertexId, WordHash> first_index(const Embedding& e) {
  std::unordered_map<Word, VertexId, WordHash> out;
  out.reserve(e.size());
  for (VertexId v = 0; v < e.size(); ++v) out.emplace(e[v], v);
  return out;
}

std::optional<std::string> closure_violation(const Embedding& e,
                                             const std::unordered_map<Word, VertexId, WordHash>& index) {
  for (VertexId v = 0; v < e.size(); ++v) {
    for (auto c : e[v].support()) {
      Word lower = e[v];
      lower.flip(c);
      if (!index.contains(lower)) return "vertex " + std::to_string(v) + " label " + e[v].to_string() +
                                         " missing " + lower.to_string();
    }
  }
  return std::nullopt;
}

std::optional<std::string> size_violation(const Graph& g, const Embedding& e) {
  if (e.size() != g.vertex_count())
    return "labels=" + std::to_string(e.size()) + " vertices=" + std::to_string(g.vertex_count());
  return std::nullopt;
}

}  // namespace

bool VerificationReport::passed() const noexcept {
  return std::all_of(checks_.begin(), checks_.end(), [](const Check& c) { return c.passed; });
}

const VerificationReport::Check* VerificationReport::find(std::string_view name) const {
  for (const auto& c : checks_)
    if (c.name == name) return &c;
  return nullptr;
}

std::string VerificationReport::render() const {
  std::ostringstream out;
  for (const auto& c : checks_) {
    if (c.passed)
      out << "PASS " << c.name << '\n';
    else
      out << "FAIL " << c.name << " witness=" << c.witness << '\n';
  }
  return out.str();
}

VerificationReport is_isometric(const Graph& g, const Embedding& e, std::size_t cap) {
  require_cap(g, cap, "isometry check");
  VerificationReport report;
  if (auto bad = size_violation(g, e)) {
    report.fail("label-count", *bad);
    return report;
  }
  report.pass("label-count");

  std::optional<std::string> failure;
  const auto n = g.vertex_count();
  for (VertexId a = 0; a < n && !failure; ++a) {
    const auto d = bfs(g, a);
    for (VertexId b = a + 1; b < n; ++b) {
      const auto ham = hamming(e[a], e[b]);
      if (ham != d.dist[b]) {
        failure = pair_witness(a, b) + " distance=" + std::to_string(d.dist[b]) + " hamming=" + std::to_string(ham);
        break;
      }
    }
  }
  report.record("isometry", failure);
  return report;
}

VerificationReport is_proper(const Graph& g, const Embedding& e) {
  VerificationReport report;
  if (auto bad = size_violation(g, e)) {
    report.fail("label-count", *bad);
    return report;
  }
  report.pass("label-count");
  const auto index = first_index(e);

  std::optional<std::string> duplicate;
  for (VertexId v = 0; v < e.size() && !duplicate; ++v) {
    const auto first = index.at(e[v]);
    if (first != v) duplicate = pair_witness(first, v) + " label=" + e[v].to_string();
  }
  report.record("injective", duplicate);

  std::optional<std::string> adjacency;
  for (const auto& [a, b] : g.edges()) {
    if (hamming(e[a], e[b]) != 1) {
      adjacency = "edge " + pair_witness(a, b) + " hamming=" + std::to_string(hamming(e[a], e[b]));
      break;
    }
  }
  if (!adjacency) {
    // every edge is a Hamming-1 pair, so equal counts mean equal sets
    auto for_each_pair = [&](auto&& visit) {
      for (VertexId v = 0; v < e.size(); ++v) {
        for (std::size_t c = 0; c < e.width(); ++c) {
          Word flipped = e[v];
          flipped.flip(c);
          if (auto it = index.find(flipped); it != index.end() && it->second > v)
            if (!visit(v, it->second)) return;
        }
      }
    };
    std::size_t pairs = 0;
    for_each_pair([&](VertexId, VertexId) { return ++pairs, true; });
    if (pairs != g.edge_count()) {
      for_each_pair([&](VertexId a, VertexId b) {
        if (g.adjacent(a, b)) return true;
        adjacency = "non-edge " + pair_witness(a, b) + " hamming=1";
        return false;
      });
      if (!adjacency)
        adjacency = "hamming-1 pairs=" + std::to_string(pairs) + " edges=" + std::to_string(g.edge_count());
    }
  }
  report.record("adjacency", adjacency);
  report.record("downward-closed", closure_violation(e, index));
  return report;
}

std::vector<VertexId> minimal_vertices(const Embedding& e) {
  const auto index = e.index();
  if (auto bad = closure_violation(e, index))
    throw Error(ErrorKind::InvalidArgument, "embedding is not proper: " + *bad);
  Word meet_of_maximal = Word::ones(e.width());
  for (VertexId v = 0; v < e.size(); ++v) {
    bool maximal = true;
    for (std::size_t c = 0; c < e.width() && maximal; ++c) {
      if (e[v].test(c)) continue;
      Word higher = e[v];
      higher.set(c);
      maximal = !index.contains(higher);
    }
    if (maximal) meet_of_maximal &= e[v];
  }
  std::vector<VertexId> out;
  for (VertexId v = 0; v < e.size(); ++v)
    if (leq(e[v], meet_of_maximal)) out.push_back(v);
  return out;
}

std::vector<VertexId> minimal_vertices_brute(const Graph& g, const Embedding& e, std::size_t cap) {
  require_cap(g, cap, "minimal vertex oracle");
  if (auto bad = size_violation(g, e)) throw Error(ErrorKind::InvalidArgument, *bad);
  const auto zero = e.zero_vertex();
  if (!zero) throw Error(ErrorKind::InvalidArgument, "no vertex is labeled 0^h");
  const auto n = g.vertex_count();
  const auto from_zero = bfs(g, *zero);
  std::vector<char> in_all(n, 1);
  for (VertexId x = 0; x < n; ++x) {
    const bool maximal = std::none_of(g.neighbors(x).begin(), g.neighbors(x).end(),
                                      [&](VertexId y) { return from_zero.dist[y] > from_zero.dist[x]; });
    if (!maximal) continue;
    const auto from_x = bfs(g, x);
    for (VertexId w = 0; w < n; ++w)
      if (from_zero.dist[w] + from_x.dist[w] != from_zero.dist[x]) in_all[w] = 0;
  }
  std::vector<VertexId> out;
  for (VertexId w = 0; w < n; ++w)
    if (in_all[w]) out.push_back(w);
  return out;
}

EquivalenceResult equivalent(const Graph& g, const Embedding& e1, const Embedding& e2) {
  EquivalenceResult result;
  const auto h = e1.width();
  if (e2.width() != h || e1.size() != g.vertex_count() || e2.size() != g.vertex_count()) return result;
  if (g.vertex_count() == 0) {
    result.equivalent = true;
    return result;
  }

  auto flip_sets = [&](const Embedding& e) {
    std::vector<std::vector<std::size_t>> sets(h);
    const auto edges = g.edges();
    for (std::size_t k = 0; k < edges.size(); ++k)
      for (auto c : (e[edges[k].first] ^ e[edges[k].second]).support()) sets[c].push_back(k);
    return sets;
  };
  const auto f1 = flip_sets(e1);
  const auto f2 = flip_sets(e2);

  std::map<std::vector<std::size_t>, std::vector<std::size_t>> by_set1;
  for (std::size_t i = 0; i < h; ++i)
    if (!f1[i].empty()) by_set1[f1[i]].push_back(i);
  for (const auto& [set, coords] : by_set1) {
    if (coords.size() > 1) {
      result.degenerate = true;
      return result;
    }
  }

  std::map<std::vector<std::size_t>, std::vector<std::size_t>> by_set2;
  for (std::size_t j = 0; j < h; ++j) by_set2[f2[j]].push_back(j);

  // constant coordinates are matched by their common value
  std::vector<char> used(h, 0);
  result.permutation.assign(h, 0);
  for (std::size_t i = 0; i < h; ++i) {
    auto it = by_set2.find(f1[i]);
    if (it == by_set2.end()) return result;
    bool matched = false;
    for (auto j : it->second) {
      if (used[j]) continue;
      if (f1[i].empty() && e1[0].test(i) != e2[0].test(j)) continue;
      result.permutation[i] = j;
      used[j] = 1;
      matched = true;
      break;
    }
    if (!matched) return result;
  }

  for (VertexId v = 0; v < g.vertex_count(); ++v)
    for (std::size_t i = 0; i < h; ++i)
      if (e1[v].test(i) != e2[v].test(result.permutation[i])) return result;
  result.equivalent = true;
  return result;
}

bool same_label_set(const Embedding& e1, const Embedding& e2) {
  if (e1.width() != e2.width() || e1.size() != e2.size()) return false;
  auto a = e1.labels();
  auto b = e2.labels();
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  return a == b;
}

BaselineResult baseline_proper(const Graph& g, std::size_t cap) {
  if (g.vertex_count() > cap)
    throw Error(ErrorKind::CapExceeded, "baseline refuses " + std::to_string(g.vertex_count()) +
                                            " vertices (cap " + std::to_string(cap) + ")");
  const auto top = max_degree_vertex(g);
  BaselineResult result;
  for (VertexId u = 0; u < g.vertex_count(); ++u) {
    if (g.degree(u) != top.degree) continue;
    ++result.candidates_examined;
    IsometricEmbedding iso;
    try {
      iso = embed_isometric_at(g, u);
    } catch (const Error& e) {
      if (e.kind() == ErrorKind::NotDaisy) continue;
      throw;
    }
    std::unordered_set<Word, WordHash> labels(iso.labels.labels().begin(), iso.labels.labels().end());
    if (labels.size() != iso.labels.size()) continue;
    bool closed = true;
    for (const auto& w : iso.labels.labels()) {
      for (auto c : w.support()) {
        Word lower = w;
        lower.flip(c);
        if (!labels.contains(lower)) {
          closed = false;
          break;
        }
      }
      if (!closed) break;
    }
    if (closed) {
      result.labels = std::move(iso.labels);
      result.root = u;
      return result;
    }
  }
  throw Error(ErrorKind::NotDaisy, "no maximum-degree vertex yields a proper embedding");
}

std::vector<Word> upper_generators(const GeneratorSet& generators, const Word& u) {
  std::vector<Word> out;
  for (const auto& x : generators.antichain())
    if (leq(u, x)) out.push_back(x);
  return out;
}

VerificationReport structural_audit(const LabeledDaisyCube& dc, std::size_t cap) {
  const auto& g = dc.graph;
  const auto& e = dc.labels;
  const auto& antichain = dc.generators.antichain();
  require_cap(g, cap, "structural audit");
  VerificationReport report;
  if (auto bad = size_violation(g, e)) {
    report.fail("label-count", *bad);
    return report;
  }
  if (e.width() != dc.generators.width()) {
    report.fail("label-count", "label width differs from generator width");
    return report;
  }

  // labels are exactly the closure and edges are exactly the Hamming-1 pairs
  {
    std::optional<std::string> failure;
    auto expected = downward_closure(antichain, cap);
    auto actual = e.labels();
    std::sort(actual.begin(), actual.end());
    if (actual != expected) {
      failure = "label set differs from closure (" + std::to_string(actual.size()) + " vs " +
                std::to_string(expected.size()) + ")";
    } else {
      const auto adjacency = is_proper(g, e).find("adjacency");
      if (!adjacency->passed) failure = adjacency->witness;
    }
    report.record("daisy-structure", failure);
  }

  std::vector<std::size_t> weight(g.vertex_count());
  for (VertexId v = 0; v < g.vertex_count(); ++v) weight[v] = e[v].weight();

  {
    std::optional<std::string> failure;
    for (VertexId v = 0; v < g.vertex_count() && !failure; ++v) {
      const auto down = std::count_if(g.neighbors(v).begin(), g.neighbors(v).end(),
                                      [&](VertexId w) { return weight[w] + 1 == weight[v]; });
      if (static_cast<std::size_t>(down) > weight[v])
        failure = "vertex " + std::to_string(v) + " weight=" + std::to_string(weight[v]) +
                  " lower-neighbors=" + std::to_string(down);
    }
    report.record("level-degree-bound", failure);
  }

  {
    std::optional<std::string> failure;
    for (const auto& [a, b] : g.edges()) {
      for (std::size_t i = 0; i < antichain.size() && !failure; ++i) {
        for (std::size_t j = 0; j < antichain.size() && !failure; ++j) {
          if (i == j) continue;
          const auto& x = antichain[i];
          const auto& y = antichain[j];
          if (leq(e[a], x) && !leq(e[a], y) && leq(e[b], y) && !leq(e[b], x))
            failure = "edge " + pair_witness(a, b) + " joins private parts of " + x.to_string() + " and " +
                      y.to_string();
        }
      }
      if (failure) break;
    }
    report.record("separated-intervals", failure);
  }

  Word all = Word::zeros(dc.generators.width());
  for (const auto& x : antichain) all |= x;
  const auto h = all.weight();

  std::optional<std::string> neighbor_failure;
  std::optional<std::string> cover_failure;
  std::optional<std::string> down_failure;
  for (VertexId u = 0; u < g.vertex_count(); ++u) {
    if (g.degree(u) != h) continue;
    const auto upper = upper_generators(dc.generators, e[u]);

    if (!neighbor_failure) {
      for (auto w : g.neighbors(u)) {
        const bool inside = std::any_of(upper.begin(), upper.end(), [&](const Word& x) { return leq(e[w], x); });
        if (!inside) {
          neighbor_failure = "vertex " + std::to_string(u) + " neighbor " + std::to_string(w);
          break;
        }
      }
    }

    if (!cover_failure) {
      Word cover = Word::zeros(e.width());
      for (const auto& x : upper) cover |= x;
      if (cover.weight() != h)
        cover_failure = "vertex " + std::to_string(u) + " covers " + std::to_string(cover.weight()) + " of " +
                        std::to_string(h) + " coordinates";
    }

    if (!down_failure) {
      const auto d = bfs(g, u);
      for (VertexId v = 0; v < g.vertex_count(); ++v) {
        if (d.dist[v] < 2) continue;
        if (down_neighbors(g, d, v).size() < 2) {
          down_failure = "root " + std::to_string(u) + " vertex " + std::to_string(v);
          break;
        }
      }
    }
  }
  report.record("neighbors-in-upper-part", neighbor_failure);
  report.record("upper-part-covers-all-coordinates", cover_failure);
  report.record("two-down-neighbors", down_failure);
  return report;
}

}  // namespace daisy
