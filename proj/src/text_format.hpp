#pragma once

// Line-oriented helpers shared by the graph, labels and words file readers.

#include "daisy/error.hpp"

#include <charconv>
#include <istream>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace daisy::text {

class LineReader {
public:
  explicit LineReader(std::istream& in) : in_(in) {}

  /// Next line that is neither blank nor a '#' comment, with trailing
  /// whitespace stripped.
  std::optional<std::string> next() {
    std::string line;
    while (std::getline(in_, line)) {
      ++line_number_;
      while (!line.empty() && (line.back() == '\r' || line.back() == ' ' || line.back() == '\t')) line.pop_back();
      if (line.empty() || line.front() == '#') continue;
      return line;
    }
    return std::nullopt;
  }

  std::string require(const char* what) {
    auto line = next();
    if (!line) fail(std::string("unexpected end of input, expected ") + what);
    return *line;
  }

  [[noreturn]] void fail(const std::string& message) const {
    throw Error(ErrorKind::Format, "line " + std::to_string(line_number_) + ": " + message);
  }

  std::size_t line_number() const { return line_number_; }

private:
  std::istream& in_;
  std::size_t line_number_ = 0;
};

inline std::vector<std::string_view> split(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    const auto start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t') ++i;
    if (i > start) out.push_back(line.substr(start, i - start));
  }
  return out;
}

inline std::optional<std::uint64_t> parse_uint(std::string_view token) {
  std::uint64_t value = 0;
  const auto* end = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(token.data(), end, value);
  if (ec != std::errc{} || ptr != end) return std::nullopt;
  return value;
}

/// Reads "<tag> <version>" and then "<a> <b>".
inline std::pair<std::uint64_t, std::uint64_t> read_header(LineReader& reader, std::string_view tag) {
  const auto magic = reader.require("header");
  const auto parts = split(magic);
  if (parts.size() != 2 || parts[0] != tag) reader.fail("expected header '" + std::string(tag) + " 1'");
  if (parts[1] != "1") reader.fail("unsupported " + std::string(tag) + " version '" + std::string(parts[1]) + "'");
  const auto counts = reader.require("size line");
  const auto fields = split(counts);
  if (fields.size() != 2) reader.fail("expected two integers");
  const auto a = parse_uint(fields[0]);
  const auto b = parse_uint(fields[1]);
  if (!a || !b) reader.fail("expected two nonnegative integers");
  return {*a, *b};
}

inline void expect_end(LineReader& reader) {
  if (reader.next()) reader.fail("trailing data after last record");
}

}  // namespace daisy::text
