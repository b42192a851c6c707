#include "ramsey/witness.hpp"

#include <algorithm>
#include <set>

namespace ramsey {

std::string_view to_string(Witness::Kind k) {
  switch (k) {
    case Witness::Kind::Fan: return "Fan";
    case Witness::Kind::Clique: return "Clique";
    case Witness::Kind::Matching: return "Matching";
    case Witness::Kind::OddCycle: return "OddCycle";
    case Witness::Kind::Star: return "Star";
  }
  return "?";
}

namespace {

Edge ordered(int a, int b) { return a < b ? Edge{a, b} : Edge{b, a}; }

}  // namespace

Witness Witness::fan(Color c, int center, const std::vector<Edge>& matching) {
  Witness w{Kind::Fan, c, center, {}, {}};
  for (auto [a, b] : matching) {
    w.vertices.push_back(a);
    w.vertices.push_back(b);
  }
  for (int v : w.vertices) w.edges.push_back(ordered(center, v));
  for (auto [a, b] : matching) w.edges.push_back(ordered(a, b));
  return w;
}

Witness Witness::clique(Color c, std::vector<int> vertices) {
  std::sort(vertices.begin(), vertices.end());
  Witness w{Kind::Clique, c, std::nullopt, std::move(vertices), {}};
  for (std::size_t i = 0; i < w.vertices.size(); ++i) {
    for (std::size_t j = i + 1; j < w.vertices.size(); ++j) w.edges.emplace_back(w.vertices[i], w.vertices[j]);
  }
  return w;
}

Witness Witness::matching(Color c, std::vector<Edge> edges) {
  Witness w{Kind::Matching, c, std::nullopt, {}, {}};
  for (auto& e : edges) {
    e = ordered(e.first, e.second);
    w.vertices.push_back(e.first);
    w.vertices.push_back(e.second);
  }
  w.edges = std::move(edges);
  return w;
}

Witness Witness::odd_cycle(Color c, std::vector<int> cycle) {
  Witness w{Kind::OddCycle, c, std::nullopt, std::move(cycle), {}};
  const std::size_t t = w.vertices.size();
  for (std::size_t i = 0; i < t; ++i) w.edges.push_back(ordered(w.vertices[i], w.vertices[(i + 1) % t]));
  return w;
}

Witness Witness::star(Color c, int center, std::vector<int> leaves) {
  Witness w{Kind::Star, c, center, std::move(leaves), {}};
  for (int v : w.vertices) w.edges.push_back(ordered(center, v));
  return w;
}

bool validate_witness(const Coloring& host, const Witness& w) {
  const int n = host.order();
  auto in_range = [n](int v) { return v >= 0 && v < n; };

  std::set<int> seen;
  for (int v : w.vertices) {
    if (!in_range(v) || !seen.insert(v).second) return false;
  }
  if (w.center && (!in_range(*w.center) || seen.count(*w.center) != 0)) return false;

  // Rebuild the expected edge list from the vertex layout; the stored edges
  // must match it exactly.
  std::vector<Edge> expected;
  switch (w.kind) {
    case Witness::Kind::Fan: {
      if (!w.center || w.vertices.empty() || w.vertices.size() % 2 != 0) return false;
      std::vector<Edge> pairs;
      for (std::size_t i = 0; i < w.vertices.size(); i += 2) pairs.emplace_back(w.vertices[i], w.vertices[i + 1]);
      expected = Witness::fan(w.color, *w.center, pairs).edges;
      break;
    }
    case Witness::Kind::Clique:
      if (w.center || w.vertices.empty()) return false;
      expected = Witness::clique(w.color, w.vertices).edges;
      break;
    case Witness::Kind::Matching: {
      if (w.center || w.edges.empty()) return false;
      expected = Witness::matching(w.color, w.edges).edges;
      std::vector<int> endpoints;
      for (auto [a, b] : w.edges) {
        endpoints.push_back(a);
        endpoints.push_back(b);
      }
      if (endpoints != w.vertices) return false;
      break;
    }
    case Witness::Kind::OddCycle:
      if (w.center || w.vertices.size() < 3 || w.vertices.size() % 2 == 0) return false;
      expected = Witness::odd_cycle(w.color, w.vertices).edges;
      break;
    case Witness::Kind::Star:
      if (!w.center) return false;
      expected = Witness::star(w.color, *w.center, w.vertices).edges;
      break;
  }
  if (expected != w.edges) return false;

  for (auto [a, b] : w.edges) {
    if (!in_range(a) || !in_range(b) || a == b || !host.has(a, b, w.color)) return false;
  }
  return true;
}

}  // namespace ramsey
