// Acceptance suite: one PASS/FAIL line per criterion, exit status = number
// of failed criteria.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "cli_runner.hpp"
#include "detector_check.hpp"
#include "oracle.hpp"
#include "ramsey/constructions.hpp"
#include "ramsey/detectors.hpp"
#include "ramsey/search.hpp"
#include "ramsey/star_search.hpp"
#include "ramsey/verify.hpp"

using namespace ramsey;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

/// Collects failures for one criterion; `detail` ends up on the summary line.
struct Outcome {
  bool ok = true;
  std::ostringstream detail;
  std::vector<std::string> failures;

  void require(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      failures.push_back(what);
    }
  }
};

SearchOptions unlimited(unsigned threads = 1, SymmetryScheme s = SymmetryScheme::FirstVertexSorted) {
  SearchOptions o;
  o.budget = Budget::unlimited();
  o.threads = threads;
  o.symmetry = s;
  return o;
}

StarSearchOptions star_options(unsigned threads) {
  StarSearchOptions o;
  o.budget = Budget::unlimited();
  o.budget.max_seconds = 30 * 60;
  o.threads = threads;
  return o;
}

const TargetPair kFanK4_4{Target::fan(4), Target::clique(4)};

struct RamseyCase {
  std::string name;
  TargetPair targets;
  int claimed;
  double limit_seconds;
};

std::vector<RamseyCase> ramsey_cases() {
  std::vector<RamseyCase> out = {{"(2K2,K4)=6", {Target::matching(2), Target::clique(4)}, 6, 10},
                                 {"(3K2,K4)=8", {Target::matching(3), Target::clique(4)}, 8, 300}};
  for (int r = 2; r <= 4; ++r) {
    out.push_back({"(K2,K" + std::to_string(r) + ")=" + std::to_string(r), {Target::matching(1), Target::clique(r)}, r, 1});
  }
  return out;
}

void criterion_1(Outcome& o) {
  const auto dir = cli::scratch("acceptance_lb");
  double worst = 0;
  for (int n = 4; n <= 8; ++n) {
    const auto t0 = Clock::now();
    const auto file = dir / ("lb" + std::to_string(n) + ".cg");
    const auto c = cli::run("construct lower-bound --n " + std::to_string(n) + " -o " + cli::quoted(file));
    const auto k = cli::run("check " + cli::quoted(file) + " --red fan:" + std::to_string(n) + " --blue clique:4");
    const double dt = seconds_since(t0);
    worst = std::max(worst, dt);
    const std::string tag = "n=" + std::to_string(n);
    o.require(c.exit_code == 0, tag + " construct exit " + std::to_string(c.exit_code));
    o.require(k.exit_code == 0 && k.json()["free"] == true, tag + " check not free");
    o.require(c.json()["star_degree"] == 4 * n + 1, tag + " star degree");
    o.require(dt < 5.0, tag + " took " + std::to_string(dt) + " s");
  }
  o.detail << "n=4..8 free with star degree 4n+1; slowest " << worst << " s";
}

void criterion_2(Outcome& o) {
  const auto base = build_g1(4);
  const auto t0 = Clock::now();
  const auto a = max_star_extension(base, kFanK4_4, star_options(1));
  const double dt = seconds_since(t0);
  const auto b = max_star_extension(base, kFanK4_4, star_options(1));
  o.require(a.status == SearchStatus::Exhausted, "status " + std::string(to_string(a.status)));
  o.require(a.max_k == 17, "max_k " + std::to_string(a.max_k));
  o.require(is_free(a.witness, kFanK4_4).free, "witness not free");
  o.require(a.max_k == b.max_k && a.witness == b.witness && a.stats.nodes == b.stats.nodes, "not deterministic");
  o.require(dt <= 1800, "over budget");
  o.detail << "max_k=" << a.max_k << " " << to_string(a.status) << ", " << a.stats.nodes << " nodes, " << dt
           << " s, repeat identical";
}

void criterion_3(Outcome& o) {
  for (const auto& c : ramsey_cases()) {
    const auto t0 = Clock::now();
    const auto r = verify_ramsey_number(c.targets, c.claimed, unlimited());
    const double dt = seconds_since(t0);
    o.require(r.verified(), c.name + " not verified");
    o.require(dt <= c.limit_seconds, c.name + " took " + std::to_string(dt) + " s");
    o.detail << c.name << " verified " << dt << " s; ";
  }
  const TargetPair f2k3{Target::fan(2), Target::clique(3)};
  const auto t0 = Clock::now();
  const auto w = build_fan_k3_critical(2);
  const bool lower = w.order() == 8 && is_free(w, f2k3).free;
  const double lower_dt = seconds_since(t0);
  o.require(lower, "(F2,K3) order-8 witness not free");
  o.require(lower_dt < 1.0, "(F2,K3) lower side slow");
  const auto r = verify_ramsey_number(f2k3, 9, unlimited());
  o.require(!r.refuted(), "(F2,K3)=9 refuted");
  o.require(r.lower.verdict == Verdict::Verified, "(F2,K3) search lower side " + std::string(to_string(r.lower.verdict)));
  o.detail << "(F2,K3)=9 lower witness free, upper side " << to_string(r.upper.verdict) << " ("
           << r.upper.outcome.stats.nodes << " nodes)";
}

void criterion_4(Outcome& o) {
  double worst_g1 = 0;
  for (int n = 4; n <= 10; ++n) {
    const auto t0 = Clock::now();
    const bool free = is_free(build_g1(n), {Target::fan(n), Target::clique(4)}).free;
    const double dt = seconds_since(t0);
    worst_g1 = std::max(worst_g1, dt);
    o.require(free, "G1(" + std::to_string(n) + ") not free");
    o.require(dt < 1.0, "G1(" + std::to_string(n) + ") slow");
  }
  int g2 = 0;
  for (int n = 4; n <= 8; ++n) {
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
      const auto spec = sample_g2_spec(n, seed);
      o.require(is_free(build_g2(spec), {Target::fan(n), Target::clique(4)}).free,
                "G2 n=" + std::to_string(n) + " seed " + std::to_string(seed) + " not free");
      ++g2;
    }
  }
  std::mt19937_64 rng(4);
  int rejected = 0;
  const int invalid = 500;
  for (int i = 0; i < invalid; ++i) {
    const int n = 2 + static_cast<int>(rng() % 7);
    auto spec = sample_g2_spec(n, rng());
    const auto [a, b] = spec.links[0][rng() % spec.links[0].size()];
    const int c = block_range(n, 2).first + static_cast<int>(rng() % (2 * n));
    spec.links[1] = {{b, c}};
    spec.links[2] = {{c, a}};
    try {
      build_g2(spec);
    } catch (const std::invalid_argument&) {
      ++rejected;
    }
  }
  o.require(rejected == invalid, "accepted " + std::to_string(invalid - rejected) + " invalid specs");
  o.detail << "G1(4..10) free, slowest " << worst_g1 << " s; " << g2 << " G2 specs free; " << rejected << "/" << invalid
           << " red-triangle specs rejected";
}

void criterion_5(Outcome& o) {
  double worst = 0;
  int reports = 0;
  for (int n = 4; n <= 8; ++n) {
    const auto t0 = Clock::now();
    std::vector<ColoredGraph> graphs{build_g1(n)};
    for (std::uint64_t seed = 0; seed < 20; ++seed) graphs.push_back(build_g2(sample_g2_spec(n, seed)));
    for (const auto& g : graphs) {
      for (const auto& r : check_all(g, n)) {
        ++reports;
        o.require(r.applicable && r.holds == true, r.lemma + " failed at n=" + std::to_string(n));
      }
    }
    const double dt = seconds_since(t0);
    worst = std::max(worst, dt);
    o.require(dt < 10.0, "n=" + std::to_string(n) + " took " + std::to_string(dt) + " s");
  }
  o.detail << reports << " reports hold on G1 and 20 G2 samples per n=4..8; slowest n " << worst << " s";
}

void criterion_6(Outcome& o) {
  std::size_t disagreements = 0;
  std::size_t colorings = 0;
  auto record = [&](const Coloring& g, std::uint32_t subset, const std::string& tag) {
    const auto d = oracle::detector_disagreements(g, subset);
    disagreements += d.size();
    if (!d.empty()) o.require(false, tag + ": " + d.front());
  };
  for (int n = 1; n <= 5; ++n) {
    const std::uint64_t total = std::uint64_t{1} << (n * (n - 1) / 2);
    for (std::uint64_t code = 0; code < total; ++code) {
      const auto g = oracle::coloring_from_code(n, code);
      ++colorings;
      for (std::uint32_t subset = 1; subset < (1u << n); ++subset) {
        record(g.view(), subset, "N=" + std::to_string(n) + " code " + std::to_string(code));
      }
    }
  }
  for (int n = 6; n <= 12; ++n) {
    std::mt19937_64 rng(1000 + static_cast<std::uint64_t>(n));
    for (int i = 0; i < 1000; ++i) {
      const auto g = oracle::random_coloring(n, rng);
      ++colorings;
      const std::uint32_t all = (1u << n) - 1;
      record(g.view(), all, "N=" + std::to_string(n) + " sample " + std::to_string(i));
      record(g.view(), static_cast<std::uint32_t>(rng()) & all, "N=" + std::to_string(n) + " sample subset");
    }
  }
  o.detail << colorings << " colorings (exhaustive N<=5, 1000 seeded per N=6..12), " << disagreements
           << " disagreements";
}

void criterion_7(Outcome& o) {
  int compared = 0;
  for (int a = 1; a <= 3; ++a) {
    for (int r = 2; r <= 3; ++r) {
      for (const TargetPair& t : {TargetPair{Target::fan(a), Target::clique(r)},
                                  TargetPair{Target::matching(a), Target::clique(r)}}) {
        for (int n = 1; n <= 6; ++n) {
          const auto plain = search_free_coloring(n, t, unlimited(1, SymmetryScheme::None)).status;
          for (auto s : {SymmetryScheme::FirstVertexSorted, SymmetryScheme::FirstVertexMaxDegree}) {
            ++compared;
            o.require(search_free_coloring(n, t, unlimited(1, s)).status == plain,
                      to_string(t.red) + "/" + to_string(t.blue) + " order " + std::to_string(n) + " " +
                          std::string(to_string(s)));
          }
        }
      }
    }
  }
  o.detail << compared << " symmetric runs agree with the unreduced search";
}

void criterion_8(Outcome& o) {
  const auto one = max_star_extension(build_g1(4), kFanK4_4, star_options(1));
  int runs = 0;
  for (unsigned w : {2u, 8u}) {
    const auto many = max_star_extension(build_g1(4), kFanK4_4, star_options(w));
    ++runs;
    o.require(many.status == one.status && many.max_k == one.max_k, "star extension differs at " + std::to_string(w));
  }
  auto cases = ramsey_cases();
  cases.push_back({"(F2,K3)=9", {Target::fan(2), Target::clique(3)}, 9, 0});
  for (const auto& c : cases) {
    const auto base = verify_ramsey_number(c.targets, c.claimed, unlimited(1));
    for (unsigned w : {2u, 8u}) {
      const auto r = verify_ramsey_number(c.targets, c.claimed, unlimited(w));
      ++runs;
      o.require(r.lower.outcome.status == base.lower.outcome.status &&
                    r.upper.outcome.status == base.upper.outcome.status,
                c.name + " differs at " + std::to_string(w) + " workers");
    }
  }
  o.detail << runs << " multi-worker runs (2 and 8) match the single-worker status";
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<void(Outcome&)>>> criteria = {
      {"lower-bound reproduction", criterion_1},
      {"star-extension maximum", criterion_2},
      {"exhaustive small Ramsey numbers", criterion_3},
      {"construction family freeness", criterion_4},
      {"proposition suite on constructions", criterion_5},
      {"detector oracle equivalence", criterion_6},
      {"symmetry-breaking soundness", criterion_7},
      {"parallel consistency", criterion_8}};
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    const auto t0 = Clock::now();
    try {
      criteria[i].second(o);
    } catch (const std::exception& e) {
      o.require(false, std::string("exception: ") + e.what());
    }
    failed += !o.ok;
    std::cout << (o.ok ? "PASS" : "FAIL") << " " << i + 1 << " " << criteria[i].first << " [" << seconds_since(t0)
              << " s]: " << o.detail.str() << "\n";
    for (std::size_t k = 0; k < o.failures.size() && k < 10; ++k) std::cout << "  - " << o.failures[k] << "\n";
    std::cout.flush();
  }
  return failed;
}
