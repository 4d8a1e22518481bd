#include "daisy/daisycube.h"

#include "daisy/daisy.hpp"
#include "daisy/embedder.hpp"
#include "daisy/error.hpp"
#include "daisy/verifier.hpp"

#include <cstring>
#include <fstream>
#include <iostream>
#include <memory>
#include <new>
#include <string>

struct dc_graph {
  daisy::Graph graph;
};

struct dc_labels {
  daisy::Embedding labels;
};

struct dc_words {
  daisy::GeneratorSet words;
};

struct dc_report {
  daisy::VerificationReport report;
  std::string text;
};

namespace {

thread_local std::string last_error;

dc_status status_of(daisy::ErrorKind kind) {
  switch (kind) {
    case daisy::ErrorKind::InvalidArgument: return DC_ERR_USAGE;
    case daisy::ErrorKind::CapExceeded: return DC_ERR_CAP;
    case daisy::ErrorKind::Format: return DC_ERR_FORMAT;
    case daisy::ErrorKind::NotConnected: return DC_ERR_FORMAT;
    case daisy::ErrorKind::NotDaisy: return DC_ERR_NOT_DAISY;
  }
  return DC_ERR_INTERNAL;
}

template <class F>
dc_status guarded(F&& body) noexcept {
  try {
    last_error.clear();
    body();
    return DC_OK;
  } catch (const daisy::Error& e) {
    last_error = e.what();
    return status_of(e.kind());
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
    return DC_ERR_CAP;
  } catch (const std::exception& e) {
    last_error = e.what();
    return DC_ERR_INTERNAL;
  }
}

dc_status usage(const char* message) {
  last_error = message;
  return DC_ERR_USAGE;
}

template <class Reader>
auto read_from(const char* path, Reader&& reader) {
  if (std::strcmp(path, "-") == 0) return reader(std::cin);
  std::ifstream in(path);
  if (!in) throw daisy::Error(daisy::ErrorKind::Format, std::string("cannot open ") + path);
  return reader(in);
}

template <class Writer>
void write_to(const char* path, Writer&& writer) {
  if (std::strcmp(path, "-") == 0) {
    writer(std::cout);
    std::cout.flush();
    return;
  }
  std::ofstream out(path);
  if (!out) throw daisy::Error(daisy::ErrorKind::Format, std::string("cannot write ") + path);
  writer(out);
  if (!out) throw daisy::Error(daisy::ErrorKind::Format, std::string("write failed: ") + path);
}

void copy_word(const daisy::Word& w, char* buffer, std::size_t size) {
  const auto s = w.to_string();
  if (size < s.size() + 1) throw daisy::Error(daisy::ErrorKind::InvalidArgument, "buffer too small");
  std::memcpy(buffer, s.c_str(), s.size() + 1);
}

}  // namespace

extern "C" {

const char* dc_last_error(void) { return last_error.c_str(); }

const char* dc_status_name(dc_status status) {
  switch (status) {
    case DC_OK: return "ok";
    case DC_ERR_USAGE: return "usage";
    case DC_ERR_CAP: return "cap exceeded";
    case DC_ERR_FORMAT: return "format";
    case DC_ERR_NOT_DAISY: return "not a daisy cube";
    case DC_ERR_VERIFY: return "verification failed";
    case DC_ERR_INTERNAL: return "internal";
  }
  return "unknown";
}

dc_status dc_graph_read(const char* path, dc_graph** out) {
  if (!path || !out) return usage("null argument");
  return guarded([&] { *out = new dc_graph{read_from(path, [](std::istream& in) { return daisy::read_graph(in); })}; });
}

dc_status dc_graph_write(const dc_graph* graph, const char* path) {
  if (!graph || !path) return usage("null argument");
  return guarded([&] { write_to(path, [&](std::ostream& out) { daisy::write_graph(out, graph->graph); }); });
}

size_t dc_graph_vertex_count(const dc_graph* graph) { return graph ? graph->graph.vertex_count() : 0; }
size_t dc_graph_edge_count(const dc_graph* graph) { return graph ? graph->graph.edge_count() : 0; }

size_t dc_graph_max_degree(const dc_graph* graph) {
  if (!graph || graph->graph.vertex_count() == 0) return 0;
  return daisy::max_degree_vertex(graph->graph).degree;
}

void dc_graph_free(dc_graph* graph) { delete graph; }

dc_status dc_labels_read(const char* path, dc_labels** out) {
  if (!path || !out) return usage("null argument");
  return guarded(
      [&] { *out = new dc_labels{read_from(path, [](std::istream& in) { return daisy::read_labels(in); })}; });
}

dc_status dc_labels_write(const dc_labels* labels, const char* path) {
  if (!labels || !path) return usage("null argument");
  return guarded([&] { write_to(path, [&](std::ostream& out) { daisy::write_labels(out, labels->labels); }); });
}

size_t dc_labels_count(const dc_labels* labels) { return labels ? labels->labels.size() : 0; }
size_t dc_labels_width(const dc_labels* labels) { return labels ? labels->labels.width() : 0; }

dc_status dc_labels_get(const dc_labels* labels, size_t vertex, char* buffer, size_t buffer_size) {
  if (!labels || !buffer) return usage("null argument");
  if (vertex >= labels->labels.size()) return usage("vertex out of range");
  return guarded([&] { copy_word(labels->labels[static_cast<daisy::VertexId>(vertex)], buffer, buffer_size); });
}

int dc_labels_same_set(const dc_labels* a, const dc_labels* b) {
  if (!a || !b) return 0;
  return daisy::same_label_set(a->labels, b->labels) ? 1 : 0;
}

void dc_labels_free(dc_labels* labels) { delete labels; }

dc_status dc_words_read(const char* path, dc_words** out) {
  if (!path || !out) return usage("null argument");
  return guarded(
      [&] { *out = new dc_words{read_from(path, [](std::istream& in) { return daisy::read_words(in); })}; });
}

dc_status dc_words_family(const char* name, size_t h, uint64_t seed, dc_words** out) {
  if (!name || !out) return usage("null argument");
  return guarded([&] { *out = new dc_words{daisy::family(name, h, seed)}; });
}

size_t dc_words_width(const dc_words* words) { return words ? words->words.width() : 0; }

void dc_words_free(dc_words* words) { delete words; }

dc_status dc_build(const dc_words* words, size_t cap, dc_graph** graph_out, dc_labels** labels_out) {
  if (!words || !graph_out || !labels_out) return usage("null argument");
  return guarded([&] {
    auto dc = daisy::build(words->words, cap == 0 ? daisy::kDefaultClosureCap : cap);
    auto graph = std::make_unique<dc_graph>(dc_graph{std::move(dc.graph)});
    *labels_out = new dc_labels{std::move(dc.labels)};
    *graph_out = graph.release();
  });
}

dc_status dc_strip(const dc_graph* graph, const dc_labels* labels, uint64_t seed, dc_graph** graph_out,
                   dc_labels** truth_out) {
  if (!graph || !labels || !graph_out || !truth_out) return usage("null argument");
  if (labels->labels.size() != graph->graph.vertex_count()) {
    last_error = "labels file has " + std::to_string(labels->labels.size()) + " entries for " +
                 std::to_string(graph->graph.vertex_count()) + " vertices";
    return DC_ERR_FORMAT;
  }
  return guarded([&] {
    auto stripped = daisy::strip(graph->graph, labels->labels, seed);
    auto g = std::make_unique<dc_graph>(dc_graph{std::move(stripped.graph)});
    *truth_out = new dc_labels{std::move(stripped.truth)};
    *graph_out = g.release();
  });
}

dc_status dc_embed_isometric(const dc_graph* graph, dc_labels** out, size_t* root) {
  if (!graph || !out) return usage("null argument");
  return guarded([&] {
    auto iso = daisy::embed_isometric(graph->graph);
    if (root) *root = iso.root;
    *out = new dc_labels{std::move(iso.labels)};
  });
}

dc_status dc_proper_embed(const dc_graph* graph, dc_labels** out, size_t* minimal_vertex, char* shift,
                          size_t shift_size) {
  if (!graph || !out) return usage("null argument");
  return guarded([&] {
    auto proper = daisy::proper_embed(graph->graph);
    if (shift) copy_word(proper.shift, shift, shift_size);
    if (minimal_vertex) *minimal_vertex = proper.minimal;
    *out = new dc_labels{std::move(proper.labels)};
  });
}

dc_status dc_baseline_proper(const dc_graph* graph, size_t cap, dc_labels** out, size_t* candidates_examined) {
  if (!graph || !out) return usage("null argument");
  return guarded([&] {
    auto result = daisy::baseline_proper(graph->graph, cap == 0 ? daisy::kDefaultBaselineCap : cap);
    if (candidates_examined) *candidates_examined = result.candidates_examined;
    *out = new dc_labels{std::move(result.labels)};
  });
}

dc_status dc_verify(const dc_graph* graph, const dc_labels* labels, dc_verify_mode mode, size_t cap,
                    dc_report** out) {
  if (!graph || !labels || !out) return usage("null argument");
  const auto& g = graph->graph;
  const auto& e = labels->labels;
  if (e.size() != g.vertex_count()) {
    last_error = "labels file has " + std::to_string(e.size()) + " entries for " +
                 std::to_string(g.vertex_count()) + " vertices";
    return DC_ERR_FORMAT;
  }
  const auto limit = cap == 0 ? daisy::kDefaultOracleCap : cap;
  return guarded([&] {
    auto result = std::make_unique<dc_report>();
    switch (mode) {
      case DC_VERIFY_ISOMETRIC: result->report = daisy::is_isometric(g, e, limit); break;
      case DC_VERIFY_PROPER: result->report = daisy::is_proper(g, e); break;
      case DC_VERIFY_AUDIT: {
        if (g.vertex_count() > limit)
          throw daisy::Error(daisy::ErrorKind::CapExceeded, "structural audit exceeds cap");
        // generators are recovered as the maximal labels
        daisy::LabeledDaisyCube dc{g, e, daisy::GeneratorSet(e.labels())};
        result->report = daisy::structural_audit(dc, limit);
        break;
      }
      default: throw daisy::Error(daisy::ErrorKind::InvalidArgument, "unknown verify mode");
    }
    result->text = result->report.render();
    *out = result.release();
  });
}

int dc_report_passed(const dc_report* report) { return report && report->report.passed() ? 1 : 0; }
const char* dc_report_text(const dc_report* report) { return report ? report->text.c_str() : ""; }
void dc_report_free(dc_report* report) { delete report; }

}  // extern "C"
