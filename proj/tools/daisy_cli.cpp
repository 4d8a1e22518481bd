// daisy-cli: generate, strip, embed, verify and benchmark daisy cubes.
//
// Exit codes: 0 ok, 2 usage, 3 cap exceeded, 4 format, 5 not a daisy cube,
// 6 verification failure.

#include "daisy/daisycube.h"

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <iostream>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace {

struct GraphDeleter {
  void operator()(dc_graph* g) const { dc_graph_free(g); }
};
struct LabelsDeleter {
  void operator()(dc_labels* l) const { dc_labels_free(l); }
};
struct WordsDeleter {
  void operator()(dc_words* w) const { dc_words_free(w); }
};
struct ReportDeleter {
  void operator()(dc_report* r) const { dc_report_free(r); }
};
using GraphPtr = std::unique_ptr<dc_graph, GraphDeleter>;
using LabelsPtr = std::unique_ptr<dc_labels, LabelsDeleter>;
using WordsPtr = std::unique_ptr<dc_words, WordsDeleter>;
using ReportPtr = std::unique_ptr<dc_report, ReportDeleter>;

struct Failure {
  int code;
};

void check(dc_status status, const std::string& context) {
  if (status == DC_OK) return;
  std::cerr << "daisy-cli: " << context << ": " << dc_last_error() << '\n';
  if (status == DC_ERR_NOT_DAISY) std::cerr << "daisy-cli: input is not a daisy cube or algorithm invariant violated\n";
  throw Failure{static_cast<int>(status)};
}

[[noreturn]] void usage_error(const std::string& message) {
  std::cerr << "daisy-cli: " << message << '\n';
  throw Failure{DC_ERR_USAGE};
}

GraphPtr load_graph(const std::string& path) {
  dc_graph* g = nullptr;
  check(dc_graph_read(path.c_str(), &g), "reading graph " + path);
  return GraphPtr(g);
}

LabelsPtr load_labels(const std::string& path) {
  dc_labels* l = nullptr;
  check(dc_labels_read(path.c_str(), &l), "reading labels " + path);
  return LabelsPtr(l);
}

// Informational lines go to stdout unless a data file is being streamed there.
std::ostream& info_stream(const std::string& data_path) { return data_path == "-" ? std::cerr : std::cout; }

WordsPtr make_generators(const std::string& family, const std::string& words_file, std::size_t h,
                         std::optional<std::uint64_t> seed) {
  dc_words* w = nullptr;
  if (!words_file.empty()) {
    check(dc_words_read(words_file.c_str(), &w), "reading words " + words_file);
  } else {
    if (h == 0) usage_error("--h is required with --family");
    if (family == "random-antichain" && !seed) usage_error("--seed is required for random-antichain");
    check(dc_words_family(family.c_str(), h, seed.value_or(0), &w), "family " + family);
  }
  return WordsPtr(w);
}

std::pair<std::size_t, std::size_t> parse_h_range(const std::string& text) {
  auto to_size = [&](const std::string& s) -> std::size_t {
    if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos) usage_error("bad --h value '" + text + "'");
    return std::stoul(s);
  };
  for (const std::string sep : {"..", "-", ":"}) {
    if (auto pos = text.find(sep); pos != std::string::npos) {
      const auto lo = to_size(text.substr(0, pos));
      const auto hi = to_size(text.substr(pos + sep.size()));
      if (lo == 0 || hi < lo) usage_error("bad --h range '" + text + "'");
      return {lo, hi};
    }
  }
  const auto h = to_size(text);
  if (h == 0) usage_error("--h must be at least 1");
  return {h, h};
}

int run_gen(const std::string& family, const std::string& words_file, std::size_t h,
            std::optional<std::uint64_t> seed, const std::string& out_graph, const std::string& out_labels,
            std::size_t cap) {
  auto words = make_generators(family, words_file, h, seed);
  dc_graph* g = nullptr;
  dc_labels* l = nullptr;
  check(dc_build(words.get(), cap, &g, &l), "building daisy cube");
  GraphPtr graph(g);
  LabelsPtr labels(l);
  check(dc_graph_write(graph.get(), out_graph.c_str()), "writing graph");
  if (!out_labels.empty()) check(dc_labels_write(labels.get(), out_labels.c_str()), "writing labels");
  return 0;
}

int run_strip(const std::string& in_graph, const std::string& in_labels, std::uint64_t seed,
              const std::string& out_graph, const std::string& out_truth) {
  auto graph = load_graph(in_graph);
  auto labels = load_labels(in_labels);
  dc_graph* g = nullptr;
  dc_labels* t = nullptr;
  check(dc_strip(graph.get(), labels.get(), seed, &g, &t), "stripping");
  GraphPtr stripped(g);
  LabelsPtr truth(t);
  check(dc_graph_write(stripped.get(), out_graph.c_str()), "writing graph");
  if (!out_truth.empty()) check(dc_labels_write(truth.get(), out_truth.c_str()), "writing ground truth");
  return 0;
}

int run_embed(const std::string& in_graph, const std::string& out_labels) {
  auto graph = load_graph(in_graph);
  dc_labels* l = nullptr;
  std::size_t root = 0;
  check(dc_embed_isometric(graph.get(), &l, &root), "embedding");
  LabelsPtr labels(l);
  check(dc_labels_write(labels.get(), out_labels.c_str()), "writing labels");
  info_stream(out_labels) << "root " << root << '\n';
  return 0;
}

int run_proper(const std::string& in_graph, const std::string& out_labels) {
  auto graph = load_graph(in_graph);
  std::string shift(std::max<std::size_t>(1, dc_graph_max_degree(graph.get())) + 1, '\0');
  dc_labels* l = nullptr;
  std::size_t minimal = 0;
  check(dc_proper_embed(graph.get(), &l, &minimal, shift.data(), shift.size()), "proper embedding");
  LabelsPtr labels(l);
  check(dc_labels_write(labels.get(), out_labels.c_str()), "writing labels");
  shift.resize(shift.find('\0'));
  info_stream(out_labels) << "minimal-vertex " << minimal << "\nshift " << shift << '\n';
  return 0;
}

int run_verify(const std::string& in_graph, const std::string& in_labels, const std::string& mode_name,
               std::size_t cap) {
  dc_verify_mode mode = DC_VERIFY_PROPER;
  if (mode_name == "isometric")
    mode = DC_VERIFY_ISOMETRIC;
  else if (mode_name == "audit")
    mode = DC_VERIFY_AUDIT;
  auto graph = load_graph(in_graph);
  auto labels = load_labels(in_labels);
  dc_report* r = nullptr;
  check(dc_verify(graph.get(), labels.get(), mode, cap, &r), "verifying");
  ReportPtr report(r);
  std::cout << dc_report_text(report.get());
  return dc_report_passed(report.get()) ? 0 : DC_ERR_VERIFY;
}

int run_bench(const std::string& family, const std::string& h_range, const std::vector<std::string>& algos,
              std::size_t reps, std::uint64_t seed, std::size_t cap, std::size_t baseline_cap) {
  const auto [h_lo, h_hi] = parse_h_range(h_range);
  if (reps == 0) usage_error("--reps must be at least 1");
  for (const auto& a : algos)
    if (a != "linear" && a != "baseline") usage_error("unknown algorithm '" + a + "'");

  std::cout << "family,h,n,m,algo,ns,reps\n";
  for (auto h = h_lo; h <= h_hi; ++h) {
    auto words = make_generators(family, "", h, seed);
    dc_graph* g = nullptr;
    dc_labels* l = nullptr;
    check(dc_build(words.get(), cap, &g, &l), "building daisy cube");
    GraphPtr built(g);
    LabelsPtr built_labels(l);
    check(dc_strip(built.get(), built_labels.get(), seed, &g, &l), "stripping");
    GraphPtr graph(g);
    LabelsPtr truth(l);

    for (const auto& algo : algos) {
      std::vector<long long> samples;
      for (std::size_t r = 0; r < reps; ++r) {
        dc_labels* out = nullptr;
        const auto start = std::chrono::steady_clock::now();
        const auto status = algo == "linear" ? dc_proper_embed(graph.get(), &out, nullptr, nullptr, 0)
                                             : dc_baseline_proper(graph.get(), baseline_cap, &out, nullptr);
        const auto stop = std::chrono::steady_clock::now();
        LabelsPtr result(out);
        check(status, algo + " embedding");
        samples.push_back(std::max<long long>(
            1, std::chrono::duration_cast<std::chrono::nanoseconds>(stop - start).count()));
      }
      std::sort(samples.begin(), samples.end());
      std::cout << family << ',' << h << ',' << dc_graph_vertex_count(graph.get()) << ','
                << dc_graph_edge_count(graph.get()) << ',' << algo << ',' << samples[samples.size() / 2] << ','
                << reps << '\n';
      std::cout.flush();
    }
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Daisy cube generation, proper embedding and verification"};
  app.set_help_flag("--help", "Print this help message and exit");
  app.require_subcommand(1);

  std::string family, words_file, out_graph = "-", out_labels, in_graph, in_labels, out_truth, mode = "proper";
  std::string h_range;
  std::size_t h = 0, cap = 0, reps = 5, baseline_cap = 0;
  std::uint64_t seed_value = 0;
  std::vector<std::string> algos{"linear"};

  auto* gen = app.add_subcommand("gen", "build a labeled daisy cube");
  auto* family_opt = gen->add_option("--family", family, "hypercube, qminus, fibonacci, lucas, random-antichain")
                         ->check(CLI::IsMember({"hypercube", "qminus", "fibonacci", "lucas", "random-antichain"}));
  auto* words_opt = gen->add_option("--words", words_file, "generator words file");
  family_opt->excludes(words_opt);
  gen->add_option("--h", h, "word length");
  auto* gen_seed = gen->add_option("--seed", seed_value, "seed for random-antichain");
  gen->add_option("--out-graph", out_graph, "graph output path ('-' for stdout)");
  gen->add_option("--out-labels", out_labels, "labels output path");
  gen->add_option("--cap", cap, "maximum vertex count (default 2^22)");

  auto* strip = app.add_subcommand("strip", "renumber vertices and withhold labels");
  strip->add_option("--in-graph", in_graph)->required();
  strip->add_option("--in-labels", in_labels)->required();
  strip->add_option("--seed", seed_value, "permutation seed (0 = identity)");
  strip->add_option("--out-graph", out_graph);
  strip->add_option("--out-truth", out_truth, "ground-truth labels output path");

  auto* embed = app.add_subcommand("embed", "isometric embedding rooted at a maximum-degree vertex");
  embed->add_option("--in-graph", in_graph)->required();
  embed->add_option("--out-labels", out_labels, "labels output path (default stdout)");

  auto* proper = app.add_subcommand("proper", "proper embedding");
  proper->add_option("--in-graph", in_graph)->required();
  proper->add_option("--out-labels", out_labels, "labels output path (default stdout)");

  auto* verify = app.add_subcommand("verify", "check labels against a graph");
  verify->add_option("--in-graph", in_graph)->required();
  verify->add_option("--in-labels", in_labels)->required();
  verify->add_option("--mode", mode)->check(CLI::IsMember({"isometric", "proper", "audit"}));
  verify->add_option("--cap", cap, "vertex cap for brute-force checks (default 4096)");

  auto* bench = app.add_subcommand("bench", "time the linear and baseline algorithms, CSV on stdout");
  bench->add_option("--family", family)
      ->required()
      ->check(CLI::IsMember({"hypercube", "qminus", "fibonacci", "lucas", "random-antichain"}));
  bench->add_option("--h", h_range, "h or range lo..hi")->required();
  bench->add_option("--algo", algos, "linear and/or baseline")->delimiter(',');
  bench->add_option("--reps", reps, "repetitions; the median is reported");
  bench->add_option("--seed", seed_value, "strip and family seed")->default_val(1);
  bench->add_option("--cap", cap, "maximum vertex count (default 2^22)");
  bench->add_option("--baseline-cap", baseline_cap, "largest graph the baseline accepts (default 2^16)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return DC_ERR_USAGE;
  }

  try {
    if (*gen) {
      if (family.empty() && words_file.empty()) usage_error("gen needs --family or --words");
      std::optional<std::uint64_t> seed;
      if (*gen_seed) seed = seed_value;
      return run_gen(family, words_file, h, seed, out_graph, out_labels, cap);
    }
    if (*strip) return run_strip(in_graph, in_labels, seed_value, out_graph, out_truth);
    if ((*embed || *proper) && out_labels.empty()) out_labels = "-";
    if (*embed) return run_embed(in_graph, out_labels);
    if (*proper) return run_proper(in_graph, out_labels);
    if (*verify) return run_verify(in_graph, in_labels, mode, cap);
    if (*bench) return run_bench(family, h_range, algos, reps, seed_value, cap, baseline_cap);
  } catch (const Failure& f) {
    return f.code;
  }
  return DC_ERR_USAGE;
}
