#pragma once

/// \file embedding.hpp
/// \brief A width-h labeling of graph vertices by words.

#include "daisy/graph.hpp"
#include "daisy/word.hpp"

#include <iosfwd>
#include <optional>
#include <unordered_map>
#include <vector>

namespace daisy {

class Embedding {
public:
  Embedding() = default;
  /// All labels must have width `width`.
  Embedding(std::size_t width, std::vector<Word> labels);

  std::size_t width() const noexcept { return width_; }
  std::size_t size() const noexcept { return labels_.size(); }
  const Word& operator[](VertexId v) const { return labels_[v]; }
  const std::vector<Word>& labels() const noexcept { return labels_; }

  /// The vertex labeled 0^h, if any.
  std::optional<VertexId> zero_vertex() const;
  /// Word -> vertex index. Throws Error(InvalidArgument) on duplicate labels.
  std::unordered_map<Word, VertexId, WordHash> index() const;

  friend bool operator==(const Embedding&, const Embedding&) = default;

private:
  std::size_t width_ = 0;
  std::vector<Word> labels_;
};

/// Reads the `daisy-labels 1` text format.
Embedding read_labels(std::istream& in);
void write_labels(std::ostream& out, const Embedding& e);

}  // namespace daisy
