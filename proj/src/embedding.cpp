#include "daisy/embedding.hpp"

#include "daisy/error.hpp"
#include "text_format.hpp"

#include <istream>
#include <ostream>

namespace daisy {

Embedding::Embedding(std::size_t width, std::vector<Word> labels) : width_(width), labels_(std::move(labels)) {
  if (width == 0) throw Error(ErrorKind::InvalidArgument, "embedding width must be at least 1");
  for (const auto& w : labels_)
    if (w.width() != width)
      throw Error(ErrorKind::InvalidArgument, "label '" + w.to_string() + "' does not have width " +
                                                  std::to_string(width));
}

std::optional<VertexId> Embedding::zero_vertex() const {
  for (VertexId v = 0; v < labels_.size(); ++v)
    if (labels_[v].is_zero()) return v;
  return std::nullopt;
}

std::unordered_map<Word, VertexId, WordHash> Embedding::index() const {
  std::unordered_map<Word, VertexId, WordHash> out;
  out.reserve(labels_.size());
  for (VertexId v = 0; v < labels_.size(); ++v) {
    auto [it, inserted] = out.emplace(labels_[v], v);
    if (!inserted)
      throw Error(ErrorKind::InvalidArgument, "vertices " + std::to_string(it->second) + " and " +
                                                  std::to_string(v) + " share label " + labels_[v].to_string());
  }
  return out;
}

Embedding read_labels(std::istream& in) {
  text::LineReader reader(in);
  const auto [n, h] = text::read_header(reader, "daisy-labels");
  if (h == 0) reader.fail("label width must be at least 1");
  std::vector<Word> labels;
  labels.reserve(n);
  for (std::uint64_t i = 0; i < n; ++i) {
    const auto line = reader.require("label line");
    labels.push_back(Word::parse(line, h));
  }
  text::expect_end(reader);
  return Embedding(h, std::move(labels));
}

void write_labels(std::ostream& out, const Embedding& e) {
  out << "daisy-labels 1\n" << e.size() << ' ' << e.width() << '\n';
  for (const auto& w : e.labels()) out << w.to_string() << '\n';
}

}  // namespace daisy
