#include <doctest.h>

#include <random>
#include <stdexcept>
#include <vector>

#include "oracle.hpp"
#include "ramsey/constructions.hpp"
#include "ramsey/detectors.hpp"
#include "ramsey/star_search.hpp"

using namespace ramsey;

namespace {

StarSearchOptions options(unsigned threads = 1, bool structural = true) {
  StarSearchOptions o;
  o.budget = Budget::unlimited();
  o.threads = threads;
  o.structural_prunes = structural;
  return o;
}

const TargetPair kFanK4_4{Target::fan(4), Target::clique(4)};

/// Largest free star degree over all 3^N star assignments, by the oracle.
int brute_max_extension(const ColoredGraph& base, const TargetPair& t) {
  const int n = base.order();
  oracle::Matrix m = oracle::from(StarColoredGraph(base).view());
  int best = -1;
  std::uint64_t total = 1;
  for (int i = 0; i < n; ++i) total *= 3;
  for (std::uint64_t code = 0; code < total; ++code) {
    std::uint64_t x = code;
    int degree = 0;
    for (int v = 0; v < n; ++v) {
      const int c = static_cast<int>(x % 3) - 1;  // -1 absent, 0 red, 1 blue
      x /= 3;
      m.m[v][n] = m.m[n][v] = c;
      degree += c >= 0;
    }
    if (degree > best && oracle::is_free(m, t)) best = degree;
  }
  return best;
}

}  // namespace

TEST_CASE("G1(4) admits a free extension of degree 17 equal to the lower-bound graph") {
  const auto base = build_g1(4);
  const auto o = search_star_free(base, 17, kFanK4_4, options());
  CHECK(o.status == SearchStatus::WitnessFound);
  REQUIRE(o.witness);
  CHECK(*o.witness == build_lower_bound(4).graph);
  CHECK(is_free(*o.witness, kFanK4_4).free);
  CHECK(o.stats.symmetry == "red-blocks");
}

TEST_CASE("G1(4) admits no free extension of degree 18") {
  const auto o = search_star_free(build_g1(4), 18, kFanK4_4, options());
  CHECK(o.status == SearchStatus::Exhausted);
  CHECK_FALSE(o.witness);
}

TEST_CASE("degree 0 extension always exists") {
  const auto o = search_star_free(build_g1(4), 0, kFanK4_4, options());
  CHECK(o.status == SearchStatus::WitnessFound);
  REQUIRE(o.witness);
  CHECK(o.witness->star_degree() == 0);
  for (int k = 1; k <= 17; k += 4) {
    const auto ok = search_star_free(build_g1(4), k, kFanK4_4, options());
    REQUIRE(ok.witness);
    CHECK(ok.witness->star_degree() == k);
  }
}

TEST_CASE("argument checks") {
  CHECK_THROWS_AS(search_star_free(build_g1(2), 13, {Target::fan(2), Target::clique(4)}), std::invalid_argument);
  CHECK_THROWS_AS(search_star_free(build_g1(2), -1, {Target::fan(2), Target::clique(4)}), std::invalid_argument);
  // G1(2) holds a red F_1 (a triangle), so it is not a free base for fan:1.
  CHECK_THROWS_AS(search_star_free(build_g1(2), 1, {Target::fan(1), Target::clique(4)}), std::invalid_argument);
  CHECK_THROWS_AS(max_star_extension(build_g1(2), {Target::fan(1), Target::clique(4)}), std::invalid_argument);
}

TEST_CASE("maximum extension of G1(4) is 17") {
  const auto r = max_star_extension(build_g1(4), kFanK4_4, options());
  CHECK(r.status == SearchStatus::Exhausted);
  CHECK(r.max_k == 17);
  CHECK(r.witness.star_degree() == 17);
  CHECK(is_free(r.witness, kFanK4_4).free);
}

TEST_CASE("maximum extension of the (F_2, K_3) critical coloring is 5") {
  const TargetPair t{Target::fan(2), Target::clique(3)};
  const auto base = build_fan_k3_critical(2);
  const auto r = max_star_extension(base, t, options());
  CHECK(r.status == SearchStatus::Exhausted);
  CHECK(r.max_k == 5);
  CHECK(brute_max_extension(base, t) == 5);
}

TEST_CASE("trivial K_1 base") {
  const ColoredGraph k1(1, Color::Red);
  // A single red star edge closes neither a red F_2 nor a blue K_2.
  const TargetPair loose{Target::fan(2), Target::clique(2)};
  const auto r = max_star_extension(k1, loose, options());
  CHECK(r.status == SearchStatus::Exhausted);
  CHECK(r.max_k == 1);
  CHECK(r.max_k == brute_max_extension(k1, loose));
  CHECK(r.witness.star_edge(0) == Color::Red);
  // Any star edge is a red or a blue K_2 here.
  const auto none = max_star_extension(k1, {Target::matching(1), Target::clique(2)}, options());
  CHECK(none.max_k == 0);
  CHECK(none.witness.star_degree() == 0);
}

TEST_CASE("maximum extension relation with the fixed-degree search") {
  const std::vector<std::pair<ColoredGraph, TargetPair>> cases = {
      {build_g1(2), {Target::fan(2), Target::clique(4)}},
      {build_fan_k3_critical(2), {Target::fan(2), Target::clique(3)}},
      {build_matching_critical(3, 4), {Target::matching(3), Target::clique(4)}},
      {build_g2(sample_g2_spec(2, 4)), {Target::fan(2), Target::clique(4)}}};
  for (const auto& [base, t] : cases) {
    const auto r = max_star_extension(base, t, options());
    REQUIRE(r.status == SearchStatus::Exhausted);
    CHECK(search_star_free(base, r.max_k, t, options()).status == SearchStatus::WitnessFound);
    if (r.max_k < base.order()) {
      CHECK(search_star_free(base, r.max_k + 1, t, options()).status == SearchStatus::Exhausted);
    }
  }
}

TEST_CASE("maximum extension matches brute force on random small bases") {
  std::mt19937_64 rng(61);
  const std::vector<TargetPair> pairs = {{Target::fan(1), Target::clique(3)},   {Target::fan(2), Target::clique(3)},
                                         {Target::fan(2), Target::clique(4)},   {Target::matching(2), Target::clique(3)},
                                         {Target::matching(3), Target::clique(3)}, {Target::fan(1), Target::clique(4)}};
  int checked = 0;
  for (int trial = 0; trial < 400 && checked < 60; ++trial) {
    const auto& t = pairs[rng() % pairs.size()];
    const int n = 3 + static_cast<int>(rng() % 5);
    const auto base = oracle::random_coloring(n, rng);
    if (!oracle::is_free(oracle::from(base.view()), t)) continue;
    ++checked;
    const int expected = brute_max_extension(base, t);
    CHECK(max_star_extension(base, t, options()).max_k == expected);
    CHECK(max_star_extension(base, t, options(1, false)).max_k == expected);
  }
  CHECK(checked >= 30);
}

TEST_CASE("structural prunes do not change the answer") {
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    const auto base = build_g2(sample_g2_spec(2, seed));
    const TargetPair t{Target::fan(2), Target::clique(4)};
    const auto with = max_star_extension(base, t, options(1, true));
    const auto without = max_star_extension(base, t, options(1, false));
    CHECK(with.max_k == without.max_k);
    CHECK(with.stats.symmetry == "red-blocks");
    CHECK(without.stats.symmetry == "none");
  }
}

TEST_CASE("red blocks are detected only for fan targets with a clique partition") {
  CHECK(detect_red_blocks(build_g1(4), kFanK4_4)->size() == 3);
  CHECK_FALSE(detect_red_blocks(build_g1(4), {Target::matching(4), Target::clique(4)}));
  CHECK_FALSE(detect_red_blocks(ColoredGraph(10, Color::Blue), {Target::fan(2), Target::clique(4)}));
}

TEST_CASE("single-worker star search is deterministic") {
  const auto a = max_star_extension(build_g1(3), {Target::fan(3), Target::clique(4)}, options());
  const auto b = max_star_extension(build_g1(3), {Target::fan(3), Target::clique(4)}, options());
  CHECK(a.max_k == b.max_k);
  CHECK(a.witness == b.witness);
  CHECK(a.stats.nodes == b.stats.nodes);
}

TEST_CASE("star search status does not depend on the worker count") {
  const TargetPair t{Target::fan(3), Target::clique(4)};
  const auto base = build_g1(3);
  const auto one = max_star_extension(base, t, options(1));
  for (unsigned w : {2u, 8u}) {
    const auto many = max_star_extension(base, t, options(w));
    CHECK(many.status == one.status);
    CHECK(many.max_k == one.max_k);
    CHECK(search_star_free(base, one.max_k + 1, t, options(w)).status == SearchStatus::Exhausted);
    CHECK(search_star_free(base, one.max_k, t, options(w)).status == SearchStatus::WitnessFound);
  }
}

TEST_CASE("star search budget abort keeps a lower bound") {
  StarSearchOptions o = options();
  o.budget.max_nodes = 2'000;
  const auto r = max_star_extension(build_g1(4), kFanK4_4, o);
  CHECK(r.status == SearchStatus::Aborted);
  CHECK(r.max_k <= 17);
  CHECK(is_free(r.witness, kFanK4_4).free);
  CHECK(search_star_free(build_g1(4), 18, kFanK4_4, o).status == SearchStatus::Aborted);
}
