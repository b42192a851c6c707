#include "ramsey/uniqueness.hpp"

#include <fstream>
#include <stdexcept>
#include <string>

#include "ramsey/constructions.hpp"
#include "ramsey/graph_io.hpp"

namespace ramsey {

UniquenessReport uniqueness_scan(int n, const SearchOptions& opts,
                                 const std::optional<std::filesystem::path>& dump_dir, std::size_t max_dumps) {
  if (n < 2) throw std::invalid_argument("uniqueness scan needs n >= 2");
  std::vector<FixedEdge> fixed;
  for (int b = 0; b < 3; ++b) {
    auto [lo, hi] = block_range(n, b);
    for (int u = lo; u < hi; ++u) {
      for (int v = u + 1; v < hi; ++v) fixed.push_back({{u, v}, Color::Red});
    }
  }
  if (dump_dir) std::filesystem::create_directories(*dump_dir);

  UniquenessReport report;
  report.n = n;
  const TargetPair t{Target::fan(n), Target::clique(4)};
  auto outcome = enumerate_free_colorings(6 * n, t, fixed, opts, [&](const ColoredGraph& g) {
    ++report.colorings;
    const auto m = classify_family(g, n);
    switch (m.family) {
      case FamilyClass::G1: ++report.g1; return true;
      case FamilyClass::G2: ++report.g2; return true;
      case FamilyClass::RelaxedG2: ++report.relaxed_g2; break;
      case FamilyClass::Outside: ++report.outside; break;
    }
    if (dump_dir && report.dumped.size() < max_dumps) {
      auto path = *dump_dir / ("counterexample_" + std::to_string(report.dumped.size()) + ".cg");
      std::ofstream(path) << serialize(g);
      report.dumped.push_back(path);
    }
    return true;
  });
  report.status = outcome.status;
  report.stats = std::move(outcome.stats);
  return report;
}

}  // namespace ramsey
