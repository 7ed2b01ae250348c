#pragma once

// Text formats for graphs.
//
// Line-oriented DSL:
//   # comment
//   vertex <label>
//   edge <src> <dst> [<multiplicity>]     multiplicity >= 1, default 1
//   edge-label <name> <src> <dst>
//
// Structured alternative (JSON):
//   {"vertices": ["a", "b"], "adjacency": [[0, 1], [0, 0]]}

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include "lpalie/graph.hpp"

namespace lpalie {

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& message);
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

Graph parse_graph(std::string_view text);
Graph parse_structured_graph(std::string_view text);
/// Structured form when the first non-blank character is '{', DSL otherwise.
Graph read_graph(std::string_view text);

/// Canonical DSL text. parse_graph(serialize_graph(g)) reproduces g exactly,
/// labels and order included.
std::string serialize_graph(const Graph& g);

}  // namespace lpalie
