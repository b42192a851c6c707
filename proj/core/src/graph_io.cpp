#include "ramsey/graph_io.hpp"

#include <charconv>
#include <istream>
#include <sstream>
#include <string_view>
#include <vector>

namespace ramsey {

ParseError::ParseError(std::size_t line, const std::string& what)
    : std::runtime_error(line == 0 ? "end of input: " + what : "line " + std::to_string(line) + ": " + what),
      line_(line) {}

namespace {

std::vector<std::string_view> split_fields(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    if (s[i] == ' ') {
      ++i;
      continue;
    }
    std::size_t j = s.find(' ', i);
    if (j == std::string_view::npos) j = s.size();
    out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

bool to_int(std::string_view s, int& out) {
  if (s.empty()) return false;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  return ec == std::errc{} && p == s.data() + s.size();
}

}  // namespace

AnyGraph parse_graph(std::istream& in) {
  std::string line;
  std::size_t lineno = 0;
  if (!std::getline(in, line)) throw ParseError(1, "missing header");
  ++lineno;

  const auto header = split_fields(line);
  int order = 0;
  int k = -1;
  if (header.size() == 2 && header[0] == "cg" && to_int(header[1], order)) {
  } else if (header.size() == 4 && header[0] == "cg" && header[2] == "star" && to_int(header[1], order) &&
             to_int(header[3], k)) {
    if (k < 0 || k > order) throw ParseError(lineno, "star edge count " + std::to_string(k) + " not in [0, N]");
  } else {
    throw ParseError(lineno, "expected header 'cg <N>' or 'cg <N> star <k>'");
  }
  if (order < 1 || order >= kMaxVertices) {
    throw ParseError(lineno, "order " + std::to_string(order) + " outside [1, " + std::to_string(kMaxVertices - 1) + "]");
  }

  const bool has_star = k >= 0;
  const int total = has_star ? order + 1 : order;
  Coloring c(total);
  int star_lines = 0;

  while (std::getline(in, line)) {
    ++lineno;
    const auto f = split_fields(line);
    int u = 0;
    int v = 0;
    if (f.size() != 3 || !to_int(f[0], u) || !to_int(f[1], v) || (f[2] != "R" && f[2] != "B")) {
      throw ParseError(lineno, "expected '<u> <v> <R|B>', got '" + line + "'");
    }
    if (u < 0 || u >= v) throw ParseError(lineno, "pair must satisfy 0 <= u < v");
    if (v >= total) throw ParseError(lineno, "vertex " + std::to_string(v) + " out of range");
    if (c.color(u, v)) {
      throw ParseError(lineno, "duplicate pair (" + std::to_string(u) + ", " + std::to_string(v) + ")");
    }
    if (v == order) {
      if (++star_lines > k) throw ParseError(lineno, "more star edges than the header's " + std::to_string(k));
    }
    c.set(u, v, f[2] == "R" ? Color::Red : Color::Blue);
  }

  for (int u = 0; u < order; ++u) {
    for (int v = u + 1; v < order; ++v) {
      if (!c.color(u, v)) {
        throw ParseError(0, "missing color for pair (" + std::to_string(u) + ", " + std::to_string(v) + ")");
      }
    }
  }
  if (!has_star) return ColoredGraph::from_coloring(std::move(c));
  if (star_lines != k) {
    throw ParseError(0, "header declares " + std::to_string(k) + " star edges, found " + std::to_string(star_lines));
  }
  StarColoredGraph g(ColoredGraph::from_coloring(c.induced(VertexSet::range(0, order))));
  for (int u = 0; u < order; ++u) g.set_star_edge(u, c.color(u, order));
  return g;
}

AnyGraph parse_graph(const std::string& text) {
  std::istringstream in(text);
  return parse_graph(in);
}

namespace {

std::string serialize_coloring(const Coloring& c, const std::string& header) {
  std::string out = header;
  out += '\n';
  for (int u = 0; u < c.order(); ++u) {
    for (int v = u + 1; v < c.order(); ++v) {
      if (auto col = c.color(u, v)) {
        out += std::to_string(u);
        out += ' ';
        out += std::to_string(v);
        out += ' ';
        out += to_char(*col);
        out += '\n';
      }
    }
  }
  return out;
}

}  // namespace

std::string serialize(const ColoredGraph& g) {
  return serialize_coloring(g.view(), "cg " + std::to_string(g.order()));
}

std::string serialize(const StarColoredGraph& g) {
  return serialize_coloring(g.view(),
                            "cg " + std::to_string(g.base_order()) + " star " + std::to_string(g.star_degree()));
}

std::string serialize(const AnyGraph& g) {
  return std::visit([](const auto& x) { return serialize(x); }, g);
}

}  // namespace ramsey
