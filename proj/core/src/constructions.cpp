#include "ramsey/constructions.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <stdexcept>
#include <string>

#include "ramsey/detectors.hpp"

namespace ramsey {

namespace {

void require_n(int n) {
  if (n < 2) throw std::invalid_argument("fan parameter n must be >= 2, got " + std::to_string(n));
}

bool in_block(int n, int block, int v) {
  auto [lo, hi] = block_range(n, block);
  return v >= lo && v < hi;
}

std::string pair_str(const Edge& e) {
  return "(" + std::to_string(e.first) + ", " + std::to_string(e.second) + ")";
}

}  // namespace

void validate(const G2Spec& spec) {
  const int n = spec.n;
  require_n(n);
  for (int i = 0; i < 3; ++i) {
    const auto& links = spec.links[static_cast<std::size_t>(i)];
    const std::string name = "I" + std::to_string(i + 1);
    const int k = static_cast<int>(links.size());
    if (k < 1 || k > 2 * n) {
      throw std::invalid_argument(name + " has " + std::to_string(k) + " edges, expected 1.." + std::to_string(2 * n));
    }
    VertexSet used;
    for (const auto& e : links) {
      if (!in_block(n, i, e.first) || !in_block(n, (i + 1) % 3, e.second)) {
        throw std::invalid_argument(name + " edge " + pair_str(e) + " does not run from block A" +
                                    std::to_string(i + 1) + " to A" + std::to_string((i + 1) % 3 + 1));
      }
      if (used.contains(e.first) || used.contains(e.second)) {
        throw std::invalid_argument(name + " edge " + pair_str(e) + " shares an endpoint with another " + name +
                                    " edge");
      }
      used.insert(e.first);
      used.insert(e.second);
    }
  }

  // A triangle of I edges needs one edge from each I_i: a -> b -> c -> a.
  std::vector<int> next1(static_cast<std::size_t>(6 * n), -1);
  std::vector<int> next2(static_cast<std::size_t>(6 * n), -1);
  for (const auto& [b, c] : spec.links[1]) next1[static_cast<std::size_t>(b)] = c;
  for (const auto& [c, a] : spec.links[2]) next2[static_cast<std::size_t>(c)] = a;
  for (const auto& [a, b] : spec.links[0]) {
    const int c = next1[static_cast<std::size_t>(b)];
    if (c != -1 && next2[static_cast<std::size_t>(c)] == a) {
      throw std::invalid_argument("I edges form a red triangle {" + std::to_string(a) + ", " + std::to_string(b) +
                                  ", " + std::to_string(c) + "}");
    }
  }
}

ColoredGraph build_g1(int n) {
  require_n(n);
  ColoredGraph g(6 * n, Color::Blue);
  for (int i = 0; i < 3; ++i) {
    auto [lo, hi] = block_range(n, i);
    for (int u = lo; u < hi; ++u) {
      for (int v = u + 1; v < hi; ++v) g.set_color(u, v, Color::Red);
    }
  }
  return g;
}

ColoredGraph build_g2(const G2Spec& spec) {
  validate(spec);
  ColoredGraph g = build_g1(spec.n);
  for (const auto& links : spec.links) {
    for (const auto& [a, b] : links) g.set_color(a, b, Color::Red);
  }
  return g;
}

G2Spec sample_g2_spec(int n, std::uint64_t seed) {
  require_n(n);
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> k_dist(1, 2 * n);
  std::vector<int> left(static_cast<std::size_t>(2 * n));
  std::vector<int> right(static_cast<std::size_t>(2 * n));
  while (true) {
    G2Spec spec{n, {}};
    for (int i = 0; i < 3; ++i) {
      const int k = k_dist(rng);
      std::iota(left.begin(), left.end(), block_range(n, i).first);
      std::iota(right.begin(), right.end(), block_range(n, (i + 1) % 3).first);
      std::shuffle(left.begin(), left.end(), rng);
      std::shuffle(right.begin(), right.end(), rng);
      auto& links = spec.links[static_cast<std::size_t>(i)];
      for (int j = 0; j < k; ++j) links.emplace_back(left[static_cast<std::size_t>(j)], right[static_cast<std::size_t>(j)]);
      std::sort(links.begin(), links.end());
    }
    try {
      validate(spec);
      return spec;
    } catch (const std::invalid_argument&) {
      // Red triangle among the I edges; draw again.
    }
  }
}

LowerBoundGraph build_lower_bound(int n) {
  require_n(n);
  StarColoredGraph g(build_g1(n));
  for (int v = 0; v < 4 * n; ++v) g.set_star_edge(v, Color::Blue);
  g.set_star_edge(block_range(n, 2).first, Color::Red);
  return {std::move(g), n < 4};
}

ColoredGraph build_matching_critical(int m, int r) {
  if (m < 1) throw std::invalid_argument("matching size m must be >= 1");
  if (r < 2) throw std::invalid_argument("clique size r must be >= 2");
  const int order = r + 2 * m - 3;
  ColoredGraph g(order, Color::Blue);
  for (int u = 0; u < 2 * m - 1; ++u) {
    for (int v = u + 1; v < 2 * m - 1; ++v) g.set_color(u, v, Color::Red);
  }
  if (!is_free(g, {Target::matching(m), Target::clique(r)}).free) {
    throw std::logic_error("matching-critical coloring is not (mK2, K_r)-free");
  }
  return g;
}

ColoredGraph build_fan_k3_critical(int n) {
  require_n(n);
  ColoredGraph g(4 * n, Color::Blue);
  for (int b = 0; b < 2; ++b) {
    for (int u = 2 * n * b; u < 2 * n * (b + 1); ++u) {
      for (int v = u + 1; v < 2 * n * (b + 1); ++v) g.set_color(u, v, Color::Red);
    }
  }
  return g;
}

}  // namespace ramsey

namespace ramsey {

std::string_view to_string(FamilyClass c) {
  switch (c) {
    case FamilyClass::G1: return "G1";
    case FamilyClass::G2: return "G2";
    case FamilyClass::RelaxedG2: return "RelaxedG2";
    case FamilyClass::Outside: return "Outside";
  }
  return "?";
}

FamilyMembership classify_family(const ColoredGraph& g, int n) {
  require_n(n);
  if (g.order() != 6 * n) {
    throw std::invalid_argument("family classification needs order " + std::to_string(6 * n) + ", got " +
                                std::to_string(g.order()));
  }
  FamilyMembership out;
  const Coloring& c = g.view();
  out.blocks = partition_into_cliques(c, Color::Red, 2 * n, c.vertices());
  if (!out.blocks) return out;
  const auto& blocks = *out.blocks;

  for (int i = 0; i < 3; ++i) {
    const VertexSet& a = blocks[static_cast<std::size_t>(i)];
    const VertexSet& b = blocks[static_cast<std::size_t>((i + 1) % 3)];
    int count = 0;
    for (int v = a.first(); v >= 0; v = a.next(v)) {
      const int deg = (c.neighbors(v, Color::Red) & b).size();
      if (deg > 1) return out;  // not a matching
      count += deg;
    }
    for (int v = b.first(); v >= 0; v = b.next(v)) {
      if ((c.neighbors(v, Color::Red) & a).size() > 1) return out;
    }
    out.link_counts[static_cast<std::size_t>(i)] = count;
  }

  for (int v = blocks[0].first(); v >= 0; v = blocks[0].next(v)) {
    const VertexSet reds = c.neighbors(v, Color::Red);
    const VertexSet in1 = reds & blocks[1];
    const VertexSet in2 = reds & blocks[2];
    if (!in1.empty() && !in2.empty() && c.has(in1.first(), in2.first(), Color::Red)) return out;
  }

  const auto& k = out.link_counts;
  const int nonzero = (k[0] > 0) + (k[1] > 0) + (k[2] > 0);
  out.family = nonzero == 0 ? FamilyClass::G1 : nonzero == 3 ? FamilyClass::G2 : FamilyClass::RelaxedG2;
  return out;
}

}  // namespace ramsey
