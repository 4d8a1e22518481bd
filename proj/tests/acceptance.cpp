// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include "daisy/daisy.hpp"
#include "daisy/embedder.hpp"
#include "daisy/error.hpp"
#include "daisy/verifier.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

using daisy::Graph;
using daisy::VertexId;
using daisy::Word;
using Clock = std::chrono::steady_clock;

namespace {

// tolerances
constexpr double kThreeGeneratorSeconds = 1.0;
constexpr double kMarkingSeconds = 1.0;
constexpr double kOracleSeconds = 60.0;
constexpr double kFuzzSeconds = 300.0;
constexpr std::size_t kOracleInstances = 1000;
constexpr std::size_t kFuzzInstances = 1000;
constexpr std::size_t kIsometryMaxVertices = 4096;
constexpr std::size_t kDeterminismInstances = 200;
constexpr double kLinearStepRatio = 2.5;
constexpr double kBaselineOverLinear = 2.0;
constexpr std::size_t kTimingReps = 7;
constexpr std::size_t kTimingLo = 14, kTimingHi = 20, kTimingPivot = 18;

struct Outcome {
  bool passed = true;
  std::string detail;
};

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string fixed(double x, int digits = 3) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits, x);
  return buf;
}

std::set<std::string> labels_at(const daisy::Embedding& e, const std::vector<VertexId>& vs) {
  std::set<std::string> out;
  for (auto v : vs) out.insert(e[v].to_string());
  return out;
}

VertexId vertex_labeled(const daisy::Embedding& e, const std::string& label) {
  for (VertexId v = 0; v < e.size(); ++v)
    if (e[v].to_string() == label) return v;
  throw daisy::Error(daisy::ErrorKind::InvalidArgument, "no vertex labeled " + label);
}

std::string join(const std::set<std::string>& s) {
  std::string out = "{";
  for (const auto& x : s) out += (out.size() > 1 ? "," : "") + x;
  return out + "}";
}

// random-antichain instance number i of a suite, width cycling through 1..max_h
daisy::LabeledDaisyCube random_instance(std::size_t i, std::size_t max_h) {
  return daisy::build(daisy::family("random-antichain", 1 + i % max_h, 1000 + i));
}

Outcome three_generators() {
  const auto start = Clock::now();
  const auto dc = daisy::build(daisy::GeneratorSet({Word::parse("10011"), Word::parse("01011"), Word::parse("00111")}));
  const auto got = labels_at(dc.labels, daisy::minimal_vertices(dc.labels));
  const auto t = seconds_since(start);
  const std::set<std::string> want{"00000", "00001", "00010", "00011"};
  return {got == want && t < kThreeGeneratorSeconds, "minimal=" + join(got) + " time=" + fixed(t) + "s"};
}

Outcome qminus4_marking() {
  const auto start = Clock::now();
  const auto dc = daisy::build(daisy::family("qminus", 4));
  const auto u = vertex_labeled(dc.labels, "1100");
  const auto iso = daisy::embed_isometric_at(dc.graph, u);
  const auto marks = daisy::mark_extremal(dc.graph, iso.labels, u);
  const auto marked = labels_at(iso.labels, marks.marked());
  const auto shift = daisy::minimal_shift(iso.labels, marks);
  const auto out = daisy::proper_embed(dc.graph);
  const bool proper = daisy::is_proper(dc.graph, out.labels).passed();
  const auto t = seconds_since(start);
  const bool ok = dc.graph.degree(u) == 4 && marked == std::set<std::string>{"1110", "1101", "1111"} &&
                  shift == Word::parse("1100") && proper && t < kMarkingSeconds;
  return {ok, "marked=" + join(marked) + " shift=" + shift.to_string() + " proper=" + (proper ? "yes" : "no") +
                  " time=" + fixed(t) + "s"};
}

Outcome qminus_structure() {
  Outcome o;
  for (std::size_t h = 3; h <= 10; ++h) {
    const auto dc = daisy::build(daisy::family("qminus", h));
    std::size_t top = 0;
    for (VertexId v = 0; v < dc.graph.vertex_count(); ++v) top += dc.graph.degree(v) == h;
    const auto minimal = daisy::minimal_vertices(dc.labels).size();
    const auto want = (std::size_t{1} << h) - h - 1;
    if (top != want || minimal != 1) {
      o.passed = false;
      o.detail += "h=" + std::to_string(h) + " degree-h=" + std::to_string(top) + " minimal=" +
                  std::to_string(minimal) + " ";
    }
  }
  if (o.passed) o.detail = "h=3..10 exact";
  return o;
}

Outcome oracle_equivalence() {
  const auto start = Clock::now();
  std::size_t bad = 0;
  std::string first;
  for (std::size_t i = 0; i < kOracleInstances; ++i) {
    const auto dc = random_instance(i, 8);
    auto fast = daisy::minimal_vertices(dc.labels);
    auto brute = daisy::minimal_vertices_brute(dc.graph, dc.labels);
    std::sort(fast.begin(), fast.end());
    std::sort(brute.begin(), brute.end());
    const auto expected = std::size_t{1} << dc.generators.meet_all().weight();
    if (fast != brute || fast.size() != expected) {
      if (bad++ == 0) first = " first-failure=" + std::to_string(i);
    }
  }
  const auto t = seconds_since(start);
  return {bad == 0 && t < kOracleSeconds, std::to_string(kOracleInstances - bad) + "/" +
                                              std::to_string(kOracleInstances) + " time=" + fixed(t, 1) + "s" + first};
}

Outcome fuzz() {
  const auto start = Clock::now();
  std::size_t bad = 0;
  std::string first;
  for (std::size_t i = 0; i < kFuzzInstances; ++i) {
    const auto dc = random_instance(i, 10);
    const auto s = daisy::strip(dc, 5000 + i);
    bool ok = false;
    try {
      const auto out = daisy::proper_embed(s.graph);
      const auto brute = daisy::minimal_vertices_brute(s.graph, s.truth);
      ok = daisy::is_proper(s.graph, out.labels).passed() &&
           std::find(brute.begin(), brute.end(), out.minimal) != brute.end();
    } catch (const daisy::Error& e) {
      if (first.empty()) first = std::string(" error=") + e.what();
    }
    if (!ok && bad++ == 0 && first.empty()) first = " first-failure=" + std::to_string(i);
  }
  const auto t = seconds_since(start);
  return {bad == 0 && t < kFuzzSeconds, std::to_string(kFuzzInstances - bad) + "/" + std::to_string(kFuzzInstances) +
                                            " time=" + fixed(t, 1) + "s" + first};
}

Outcome isometry() {
  std::vector<daisy::LabeledDaisyCube> suite;
  for (const char* name : {"hypercube", "qminus", "fibonacci", "lucas"})
    for (std::size_t h = 1; h <= 16; ++h) {
      const auto gen = daisy::family(name, h);
      if (daisy::downward_closure(gen.antichain()).size() > kIsometryMaxVertices) break;
      suite.push_back(daisy::build(gen));
    }
  for (std::size_t i = 0; i < 300; ++i) {
    auto dc = random_instance(i, 12);
    if (dc.graph.vertex_count() <= kIsometryMaxVertices) suite.push_back(std::move(dc));
  }
  std::size_t bad = 0, largest = 0;
  for (const auto& dc : suite) {
    largest = std::max(largest, dc.graph.vertex_count());
    const auto iso = daisy::embed_isometric(dc.graph);
    if (!daisy::is_isometric(dc.graph, iso.labels, kIsometryMaxVertices).passed()) ++bad;
  }
  return {bad == 0, std::to_string(suite.size() - bad) + "/" + std::to_string(suite.size()) +
                        " instances, largest n=" + std::to_string(largest)};
}

Outcome determinism() {
  std::size_t identical = 0, equivalent = 0;
  std::mt19937_64 rng(7);
  for (std::size_t i = 0; i < kDeterminismInstances; ++i) {
    const auto dc = random_instance(i, 10);
    const auto s = daisy::strip(dc, 9000 + i);
    const auto a = daisy::proper_embed(s.graph);
    const auto b = daisy::proper_embed(s.graph);
    identical += a.labels == b.labels && a.minimal == b.minimal;

    // same vertex ids, adjacency lists in a different order
    std::vector<daisy::Edge> edges(s.graph.edges().begin(), s.graph.edges().end());
    std::shuffle(edges.begin(), edges.end(), rng);
    for (auto& [x, y] : edges)
      if (rng() & 1) std::swap(x, y);
    const Graph shuffled(s.graph.vertex_count(), std::move(edges));
    const auto c = daisy::proper_embed(shuffled);
    equivalent += daisy::equivalent(s.graph, a.labels, c.labels).equivalent;
  }
  const auto n = kDeterminismInstances;
  return {identical == n && equivalent == n,
          "identical=" + std::to_string(identical) + "/" + std::to_string(n) +
              " equivalent-after-shuffle=" + std::to_string(equivalent) + "/" + std::to_string(n)};
}

double median(std::vector<double> xs) {
  std::sort(xs.begin(), xs.end());
  return xs[xs.size() / 2];
}

Outcome linearity() {
  std::map<std::size_t, daisy::StrippedInstance> inst;
  for (auto h = kTimingLo; h <= kTimingHi; ++h) inst.emplace(h, daisy::strip(daisy::build(daisy::family("qminus", h)), 1));

  // interleave sizes so that slow drift in machine speed hits all of them
  std::map<std::size_t, std::vector<double>> samples;
  for (std::size_t rep = 0; rep < kTimingReps; ++rep)
    for (auto& [h, s] : inst) {
      const auto start = Clock::now();
      const auto out = daisy::proper_embed(s.graph);
      samples[h].push_back(seconds_since(start));
      if (out.labels.size() != s.graph.vertex_count()) return {false, "bad output at h=" + std::to_string(h)};
    }
  std::map<std::size_t, double> t;
  for (auto& [h, xs] : samples) t[h] = median(xs);

  std::ostringstream detail;
  double worst = 0;
  for (auto h = kTimingLo + 1; h <= kTimingHi; ++h) {
    const double r = t[h] / t[h - 1];
    worst = std::max(worst, r);
    const double m_ratio = double(inst.at(h).graph.edge_count()) / double(inst.at(h - 1).graph.edge_count());
    detail << " h" << h << "=" << fixed(r, 2) << "(m x" << fixed(m_ratio, 2) << ")";
  }
  const bool linear_ok = worst <= kLinearStepRatio;
  const double linear_pivot = t[kTimingPivot] / t[kTimingPivot - 1];

  // baseline at the pivot step
  std::string baseline;
  bool baseline_ok = false;
  try {
    std::vector<double> bt;
    for (auto h : {kTimingPivot - 1, kTimingPivot}) {
      const auto start = Clock::now();
      daisy::baseline_proper(inst.at(h).graph);
      bt.push_back(seconds_since(start));
    }
    const double ratio = bt[1] / bt[0];
    baseline_ok = ratio >= kBaselineOverLinear * linear_pivot;
    baseline = " baseline-ratio=" + fixed(ratio, 2);
  } catch (const daisy::Error& e) {
    // the baseline refuses; report what it would have cost
    std::ostringstream p;
    p << " baseline refused (" << e.what() << "); projection:";
    double projected[2];
    int k = 0;
    for (auto h : {kTimingPivot - 1, kTimingPivot}) {
      const auto& s = inst.at(h);
      const auto out = daisy::proper_embed(s.graph);
      const auto minimal = daisy::minimal_vertices(out.labels);
      const std::set<VertexId> is_minimal(minimal.begin(), minimal.end());
      std::size_t rank = 0;
      for (VertexId v = 0; v < s.graph.vertex_count(); ++v) {
        if (s.graph.degree(v) != h) continue;
        ++rank;
        if (is_minimal.count(v)) break;
      }
      std::vector<double> per;
      for (std::size_t rep = 0; rep < 3; ++rep) {
        const auto start = Clock::now();
        const auto iso = daisy::embed_isometric_at(s.graph, out.root);
        daisy::is_proper(s.graph, iso.labels);
        per.push_back(seconds_since(start));
      }
      projected[k++] = double(rank) * median(per);
      p << " h" << h << " candidates=" << rank << " est=" << fixed(projected[k - 1], 0) << "s";
    }
    p << " projected-ratio=" << fixed(projected[1] / projected[0], 2) << " (not measured)";
    baseline = p.str();
  }

  return {linear_ok && baseline_ok, "linear step ratios" + detail.str() + " worst=" + fixed(worst, 2) +
                                        " linear-ratio@" + std::to_string(kTimingPivot) + "=" +
                                        fixed(linear_pivot, 2) + baseline};
}

Outcome audit() {
  std::size_t total = 0, bad = 0;
  auto run = [&](const daisy::LabeledDaisyCube& dc) {
    ++total;
    if (!daisy::structural_audit(dc).passed()) ++bad;
  };
  for (const char* name : {"hypercube", "qminus", "fibonacci", "lucas"})
    for (std::size_t h = 1; h <= 8; ++h) run(daisy::build(daisy::family(name, h)));
  for (std::size_t i = 0; i < kOracleInstances; ++i) run(random_instance(i, 8));

  const auto qm = daisy::family("qminus", 4);
  std::set<std::string> upper;
  for (const auto& x : daisy::upper_generators(qm, Word::parse("1100"))) upper.insert(x.to_string());
  const bool witness = upper == std::set<std::string>{"1110", "1101"};
  return {bad == 0 && witness, std::to_string(total - bad) + "/" + std::to_string(total) +
                                   " instances, X'(1100)=" + join(upper)};
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria{
      {"three-generator-minimal-vertices", three_generators},
      {"qminus4-marking", qminus4_marking},
      {"qminus-structure", qminus_structure},
      {"minimal-oracle-equivalence", oracle_equivalence},
      {"end-to-end-fuzz", fuzz},
      {"isometry", isometry},
      {"determinism", determinism},
      {"linearity", linearity},
      {"structural-audit", audit},
  };
  int failures = 0;
  int index = 0;
  for (const auto& [name, run] : criteria) {
    ++index;
    Outcome o;
    try {
      o = run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    failures += !o.passed;
    std::printf("%s %d %s: %s\n", o.passed ? "PASS" : "FAIL", index, name, o.detail.c_str());
    std::fflush(stdout);
  }
  return failures == 0 ? 0 : 1;
}
