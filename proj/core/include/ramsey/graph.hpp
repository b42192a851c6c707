#pragma once

#include <array>
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "ramsey/vertex_set.hpp"

namespace ramsey {

enum class Color : unsigned char { Red = 0, Blue = 1 };

inline constexpr std::array<Color, 2> kColors = {Color::Red, Color::Blue};

constexpr Color complement(Color c) { return c == Color::Red ? Color::Blue : Color::Red; }
constexpr int index_of(Color c) { return static_cast<int>(c); }
constexpr char to_char(Color c) { return c == Color::Red ? 'R' : 'B'; }
std::string_view to_string(Color c);

using Edge = std::pair<int, int>;

/// A red/blue coloring of some of the pairs of an order-N vertex set.
///
/// Pairs may be uncolored (absent). This is the representation every
/// detector and search routine works on; ColoredGraph and StarColoredGraph
/// are the validated, user-facing wrappers around it.
class Coloring {
 public:
  Coloring() = default;
  explicit Coloring(int order);

  int order() const { return order_; }
  VertexSet vertices() const { return VertexSet::range(0, order_); }

  std::optional<Color> color(int u, int v) const {
    if (adj_[0][u].contains(v)) return Color::Red;
    if (adj_[1][u].contains(v)) return Color::Blue;
    return std::nullopt;
  }
  bool has(int u, int v, Color c) const { return adj_[index_of(c)][u].contains(v); }

  void set(int u, int v, Color c) {
    adj_[index_of(c)][u].insert(v);
    adj_[index_of(c)][v].insert(u);
    adj_[index_of(complement(c))][u].erase(v);
    adj_[index_of(complement(c))][v].erase(u);
  }
  void clear(int u, int v) {
    for (auto& a : adj_) {
      a[u].erase(v);
      a[v].erase(u);
    }
  }

  const VertexSet& neighbors(int v, Color c) const { return adj_[index_of(c)][v]; }
  int degree(int v, Color c) const { return adj_[index_of(c)][v].size(); }
  std::size_t edge_count(Color c) const;

  /// Coloring restricted to `keep`, relabelled 0..|keep|-1 in ascending order.
  Coloring induced(const VertexSet& keep) const;

  friend bool operator==(const Coloring&, const Coloring&) = default;

 private:
  int order_ = 0;
  std::array<std::vector<VertexSet>, 2> adj_;
};

/// Complete graph K_N with every pair colored red or blue.
class ColoredGraph {
 public:
  /// K_order with every edge colored `fill`. Throws std::invalid_argument
  /// when order is outside [1, kMaxVertices - 1].
  ColoredGraph(int order, Color fill);

  /// Adopts a coloring; throws std::invalid_argument if any pair is uncolored.
  static ColoredGraph from_coloring(Coloring c);

  int order() const { return view_.order(); }

  /// Throws std::out_of_range for bad vertices and std::invalid_argument
  /// when u == v.
  Color color_of(int u, int v) const;

  void set_color(int u, int v, Color c);

  const Coloring& view() const { return view_; }
  const VertexSet& neighbors(int v, Color c) const { return view_.neighbors(v, c); }
  int degree(int v, Color c) const { return view_.degree(v, c); }
  std::size_t edge_count(Color c) const { return view_.edge_count(c); }

  friend bool operator==(const ColoredGraph&, const ColoredGraph&) = default;

 private:
  ColoredGraph() = default;
  Coloring view_;
};

/// K_N plus a star vertex w (index N) joined by colored edges to some of
/// the base vertices.
class StarColoredGraph {
 public:
  explicit StarColoredGraph(ColoredGraph base);

  const ColoredGraph& base() const { return base_; }
  int base_order() const { return base_.order(); }
  int star_vertex() const { return base_.order(); }
  int order() const { return base_.order() + 1; }

  /// Number of star edges (k).
  int star_degree() const { return star_degree_; }

  std::optional<Color> star_edge(int v) const { return star_[static_cast<std::size_t>(v)]; }
  void set_star_edge(int v, std::optional<Color> c);

  /// `absent` only for a star-vertex pair that is not a star edge.
  std::optional<Color> color_of(int u, int v) const;

  /// Base plus star vertex as one coloring of order N + 1.
  const Coloring& view() const { return view_; }

  friend bool operator==(const StarColoredGraph&, const StarColoredGraph&) = default;

 private:
  ColoredGraph base_;
  std::vector<std::optional<Color>> star_;
  int star_degree_ = 0;
  Coloring view_;
};

/// Per-vertex degree in the color class `c`.
std::vector<int> degree_profile(const ColoredGraph& g, Color c);

}  // namespace ramsey
