#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <variant>

#include "ramsey/graph.hpp"

namespace ramsey {

/// Malformed or inconsistent `cg` text. `line()` is 1-based; 0 means the
/// problem was detected after the last line (e.g. a missing pair).
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what);
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

using AnyGraph = std::variant<ColoredGraph, StarColoredGraph>;

/// Reads the line-oriented `cg` format:
///
///   cg <N>                 or   cg <N> star <k>
///   <u> <v> <R|B>          one line per colored pair, u < v
///
/// Every base pair must appear exactly once; a star header requires exactly
/// k lines of the form `<u> <N> <R|B>`.
AnyGraph parse_graph(std::istream& in);
AnyGraph parse_graph(const std::string& text);

/// Canonical text: header, then pairs in lexicographic (u, v) order.
std::string serialize(const ColoredGraph& g);
std::string serialize(const StarColoredGraph& g);
std::string serialize(const AnyGraph& g);

}  // namespace ramsey
