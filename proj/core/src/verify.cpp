#include "ramsey/verify.hpp"

#include <algorithm>
#include <stdexcept>

#include "ramsey/detectors.hpp"
#include "ramsey/report_json.hpp"

namespace ramsey {

namespace {

TargetPair fan_k4(int n) { return {Target::fan(n), Target::clique(4)}; }

void require_order(int order, int n, const char* what) {
  if (n < 1) throw std::invalid_argument(std::string(what) + ": n must be >= 1");
  if (order != 6 * n) {
    throw std::invalid_argument(std::string(what) + ": expected order " + std::to_string(6 * n) + ", got " +
                                std::to_string(order));
  }
}

// Marks the report inapplicable when the coloring is not free; returns
// whether it is free.
bool gate_on_freeness(LemmaReport& r, const Coloring& g, int n) {
  auto free = is_free(g, fan_k4(n));
  r.details["free"] = free.free;
  if (!free.free) {
    r.applicable = false;
    r.details["violation"] = to_json(*free.witness);
  }
  return free.free;
}

void fail(LemmaReport& r, Witness w) {
  r.holds = false;
  r.counterexample = std::move(w);
}

Json blocks_json(const std::vector<VertexSet>& blocks) {
  Json out = Json::array();
  for (const auto& b : blocks) out.push_back(b.to_vector());
  return out;
}

}  // namespace

LemmaReport check_p1(const ColoredGraph& g, int n) {
  require_order(g.order(), n, "check_p1");
  LemmaReport r{"p1", true, std::nullopt, std::nullopt, Json::object()};
  if (!gate_on_freeness(r, g.view(), n)) return r;

  const auto red = degree_profile(g, Color::Red);
  const auto blue = degree_profile(g, Color::Blue);
  const int lo = 2 * n - 1;
  const int hi = 2 * n + 1;
  bool consistent = true;
  std::optional<int> bad;
  for (int v = 0; v < g.order(); ++v) {
    const int dr = red[static_cast<std::size_t>(v)];
    const int db = blue[static_cast<std::size_t>(v)];
    const bool red_ok = dr >= lo && dr <= hi;
    const bool blue_ok = db >= 4 * n - 2 && db <= 4 * n;
    consistent = consistent && dr + db == g.order() - 1 && red_ok == blue_ok;
    if (!red_ok && !bad) bad = v;
  }
  r.details["red_min"] = *std::min_element(red.begin(), red.end());
  r.details["red_max"] = *std::max_element(red.begin(), red.end());
  r.details["blue_min"] = *std::min_element(blue.begin(), blue.end());
  r.details["blue_max"] = *std::max_element(blue.begin(), blue.end());
  r.details["red_bounds"] = {lo, hi};
  r.details["blue_bounds"] = {4 * n - 2, 4 * n};
  r.details["blue_consistent"] = consistent;
  if (bad) {
    r.details["vertex"] = *bad;
    fail(r, Witness::star(Color::Red, *bad, g.neighbors(*bad, Color::Red).to_vector()));
  } else {
    r.holds = true;
  }
  return r;
}

LemmaReport check_k3_c5_c7(const ColoredGraph& g, int n, const std::optional<VertexSet>& k) {
  require_order(g.order(), n, "check_k3_c5_c7");
  LemmaReport r{"k3_c5_c7", true, std::nullopt, std::nullopt, Json::object()};
  const Coloring& c = g.view();

  VertexSet clique;
  if (k) {
    clique = *k;
    const auto vs = clique.to_vector();
    if (static_cast<int>(vs.size()) != 2 * n || vs.back() >= g.order() ||
        !validate_witness(c, Witness::clique(Color::Red, vs))) {
      throw std::invalid_argument("check_k3_c5_c7: K is not a red clique of size " + std::to_string(2 * n));
    }
  } else {
    auto found = lex_least_clique(c, Color::Red, 2 * n, c.vertices());
    if (!found) {
      r.applicable = false;
      r.details["reason"] = "no red K_2n";
      return r;
    }
    for (int v : *found) clique.insert(v);
  }
  r.details["K"] = clique.to_vector();
  r.details["free"] = is_free(c, fan_k4(n)).free;

  const VertexSet rest = c.vertices() - clique;
  const bool blue_triangle = find_clique(c, Color::Blue, 3, rest).has_value();
  r.details["no_blue_triangle"] = !blue_triangle;

  const auto bip = is_bipartite(c, Color::Blue, rest);
  r.details["bipartite"] = bip.bipartite;
  if (bip.bipartite) {
    r.details["shortest_odd_cycle"] = nullptr;
    r.details["attributed_to"] = nullptr;
    r.holds = true;
    return r;
  }
  auto cycle = shortest_odd_cycle(c, Color::Blue, rest);
  const int t = static_cast<int>(cycle->vertices.size());
  r.details["shortest_odd_cycle"] = t;
  r.details["attributed_to"] = t == 3 ? "k3" : t == 5 ? "c5" : t == 7 ? "c7" : "c5c7";
  fail(r, std::move(*cycle));
  return r;
}

LemmaReport check_l2(const ColoredGraph& g, int n) {
  require_order(g.order(), n, "check_l2");
  LemmaReport r{"l2", true, std::nullopt, std::nullopt, Json::object()};
  if (!gate_on_freeness(r, g.view(), n)) return r;
  const Coloring& c = g.view();

  auto k = lex_least_clique(c, Color::Red, 2 * n, c.vertices());
  if (!k) {
    // A free K_{6n} without a red K_{2n} would contradict l4.
    r.applicable = false;
    r.details["omega_below_2n"] = true;
    r.details["contradicts_l4"] = true;
    return r;
  }
  r.details["K"] = *k;
  if (auto blocks = partition_into_cliques(c, Color::Red, 2 * n, c.vertices())) {
    r.details["blocks"] = blocks_json(*blocks);
    r.holds = true;
  } else {
    fail(r, Witness::clique(Color::Red, *k));
  }
  return r;
}

LemmaReport check_l4(const ColoredGraph& g, int n) {
  require_order(g.order(), n, "check_l4");
  LemmaReport r{"l4", true, std::nullopt, std::nullopt, Json::object()};
  if (!gate_on_freeness(r, g.view(), n)) return r;
  auto best = maximum_clique(g.view(), Color::Red, g.view().vertices());
  const int omega = static_cast<int>(best.size());
  r.details["omega"] = omega;
  r.details["expected"] = 2 * n;
  if (omega == 2 * n) {
    r.holds = true;
  } else {
    fail(r, Witness::clique(Color::Red, std::move(best)));
  }
  return r;
}

LemmaReport check_star_cases(const StarColoredGraph& g, int n) {
  require_order(g.base_order(), n, "check_star_cases");
  const Coloring& base = g.base().view();
  auto blocks = partition_into_cliques(base, Color::Red, 2 * n, base.vertices());
  if (!blocks) throw std::invalid_argument("check_star_cases: base has no red 3K_2n partition");

  LemmaReport r{"star_cases", true, std::nullopt, std::nullopt, Json::object()};
  r.details["blocks"] = blocks_json(*blocks);
  const bool base_free = is_free(base, fan_k4(n)).free;
  if (!base_free) {
    r.applicable = false;
    r.details["free"] = false;
    r.details["reason"] = "base not free";
    return r;
  }
  if (!gate_on_freeness(r, g.view(), n)) return r;

  const int w = g.star_vertex();
  const int degree = g.star_degree();
  Json per_block = Json::array();
  bool every_block_blue = true;
  std::optional<std::size_t> red_violation;
  for (std::size_t b = 0; b < blocks->size(); ++b) {
    const VertexSet& blk = (*blocks)[b];
    const int reds = (g.view().neighbors(w, Color::Red) & blk).size();
    const int blues = (g.view().neighbors(w, Color::Blue) & blk).size();
    per_block.push_back({{"red", reds}, {"blue", blues}});
    every_block_blue = every_block_blue && blues >= 1;
    if (reds > 1 && !red_violation) red_violation = b;
  }
  const int bound = every_block_blue ? 2 * n + 4 : 4 * n + 1;
  r.details["star_degree"] = degree;
  r.details["per_block"] = per_block;
  r.details["case"] = every_block_blue ? 1 : 2;
  r.details["bound"] = bound;

  if (red_violation) {
    const VertexSet leaves = g.view().neighbors(w, Color::Red) & (*blocks)[*red_violation];
    fail(r, Witness::star(Color::Red, w, leaves.to_vector()));
  } else if (degree > bound) {
    std::vector<int> leaves;
    for (int v = 0; v < g.base_order(); ++v) {
      if (g.star_edge(v) == Color::Blue) leaves.push_back(v);
    }
    fail(r, Witness::star(Color::Blue, w, std::move(leaves)));
  } else {
    r.holds = true;
  }
  return r;
}

std::vector<LemmaReport> check_all(const ColoredGraph& g, int n) {
  std::vector<LemmaReport> out;
  out.push_back(check_p1(g, n));
  const Coloring& c = g.view();
  if (auto blocks = partition_into_cliques(c, Color::Red, 2 * n, c.vertices())) {
    for (const auto& b : *blocks) out.push_back(check_k3_c5_c7(g, n, b));
  } else {
    out.push_back(check_k3_c5_c7(g, n));
  }
  out.push_back(check_l2(g, n));
  out.push_back(check_l4(g, n));
  return out;
}

std::vector<LemmaReport> check_all(const StarColoredGraph& g, int n) {
  std::vector<LemmaReport> out;
  out.push_back(check_star_cases(g, n));
  auto rest = check_all(g.base(), n);
  out.insert(out.end(), std::make_move_iterator(rest.begin()), std::make_move_iterator(rest.end()));
  return out;
}

}  // namespace ramsey
