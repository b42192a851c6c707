#include "ramsey/graph.hpp"

#include <stdexcept>
#include <string>

namespace ramsey {

std::string_view to_string(Color c) { return c == Color::Red ? "Red" : "Blue"; }

Coloring::Coloring(int order) : order_(order) {
  if (order < 0 || order > kMaxVertices) {
    throw std::invalid_argument("coloring order " + std::to_string(order) + " outside [0, " +
                                std::to_string(kMaxVertices) + "]");
  }
  for (auto& a : adj_) a.assign(static_cast<std::size_t>(order), VertexSet{});
}

std::size_t Coloring::edge_count(Color c) const {
  std::size_t twice = 0;
  for (const auto& s : adj_[index_of(c)]) twice += static_cast<std::size_t>(s.size());
  return twice / 2;
}

Coloring Coloring::induced(const VertexSet& keep) const {
  const std::vector<int> vs = keep.to_vector();
  Coloring out(static_cast<int>(vs.size()));
  for (std::size_t i = 0; i < vs.size(); ++i) {
    for (std::size_t j = i + 1; j < vs.size(); ++j) {
      if (auto c = color(vs[i], vs[j])) out.set(static_cast<int>(i), static_cast<int>(j), *c);
    }
  }
  return out;
}

namespace {

void check_pair(int order, int u, int v) {
  if (u < 0 || u >= order || v < 0 || v >= order) {
    throw std::out_of_range("vertex pair (" + std::to_string(u) + ", " + std::to_string(v) +
                            ") out of range for order " + std::to_string(order));
  }
  if (u == v) throw std::invalid_argument("self pair (" + std::to_string(u) + ", " + std::to_string(v) + ")");
}

}  // namespace

ColoredGraph::ColoredGraph(int order, Color fill) {
  // The star vertex of a StarColoredGraph needs one spare slot.
  if (order < 1 || order >= kMaxVertices) {
    throw std::invalid_argument("graph order " + std::to_string(order) + " outside [1, " +
                                std::to_string(kMaxVertices - 1) + "]");
  }
  view_ = Coloring(order);
  for (int u = 0; u < order; ++u) {
    for (int v = u + 1; v < order; ++v) view_.set(u, v, fill);
  }
}

ColoredGraph ColoredGraph::from_coloring(Coloring c) {
  if (c.order() < 1 || c.order() >= kMaxVertices) {
    throw std::invalid_argument("graph order " + std::to_string(c.order()) + " outside [1, " +
                                std::to_string(kMaxVertices - 1) + "]");
  }
  for (int u = 0; u < c.order(); ++u) {
    for (int v = u + 1; v < c.order(); ++v) {
      if (!c.color(u, v)) {
        throw std::invalid_argument("pair (" + std::to_string(u) + ", " + std::to_string(v) + ") is uncolored");
      }
    }
  }
  ColoredGraph g;
  g.view_ = std::move(c);
  return g;
}

Color ColoredGraph::color_of(int u, int v) const {
  check_pair(order(), u, v);
  return *view_.color(u, v);
}

void ColoredGraph::set_color(int u, int v, Color c) {
  check_pair(order(), u, v);
  view_.set(u, v, c);
}

StarColoredGraph::StarColoredGraph(ColoredGraph base)
    : base_(std::move(base)), star_(static_cast<std::size_t>(base_.order())), view_(base_.order() + 1) {
  const int n = base_.order();
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) view_.set(u, v, *base_.view().color(u, v));
  }
}

void StarColoredGraph::set_star_edge(int v, std::optional<Color> c) {
  if (v < 0 || v >= base_order()) {
    throw std::out_of_range("star edge endpoint " + std::to_string(v) + " out of range");
  }
  auto& slot = star_[static_cast<std::size_t>(v)];
  star_degree_ += static_cast<int>(c.has_value()) - static_cast<int>(slot.has_value());
  slot = c;
  if (c) {
    view_.set(v, star_vertex(), *c);
  } else {
    view_.clear(v, star_vertex());
  }
}

std::optional<Color> StarColoredGraph::color_of(int u, int v) const {
  check_pair(order(), u, v);
  return view_.color(u, v);
}

std::vector<int> degree_profile(const ColoredGraph& g, Color c) {
  std::vector<int> out(static_cast<std::size_t>(g.order()));
  for (int v = 0; v < g.order(); ++v) out[static_cast<std::size_t>(v)] = g.degree(v, c);
  return out;
}

}  // namespace ramsey
