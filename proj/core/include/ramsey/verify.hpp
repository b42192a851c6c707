#pragma once

#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "ramsey/graph.hpp"
#include "ramsey/witness.hpp"

namespace ramsey {

/// Outcome of checking one stated claim on one coloring.
///
/// `holds` is empty whenever `applicable` is false; when it is false a
/// counterexample witness is attached.
struct LemmaReport {
  std::string lemma;
  bool applicable = false;
  std::optional<bool> holds;
  std::optional<Witness> counterexample;
  nlohmann::ordered_json details = nlohmann::ordered_json::object();
};

/// Red degree bounds 2n-1 <= d_R(v) <= 2n+1 (and the blue bounds
/// 4n-2 <= d_B(v) <= 4n) on an (F_n, K_4)-free K_{6n}. Applicable only to
/// free colorings. Throws std::invalid_argument when order != 6n.
LemmaReport check_p1(const ColoredGraph& g, int n);

/// With K a red K_{2n}: the blue graph on V \ K is bipartite (so it has no
/// blue C_3, C_5 or C_7). K defaults to the lexicographically least red
/// K_{2n}. Throws std::invalid_argument when a supplied K is not a red
/// clique of size 2n.
LemmaReport check_k3_c5_c7(const ColoredGraph& g, int n, const std::optional<VertexSet>& k = std::nullopt);

/// A red K_{2n} in a free K_{6n} extends to three disjoint red K_{2n}.
/// Applicable when the coloring is free and has a red K_{2n}.
LemmaReport check_l2(const ColoredGraph& g, int n);

/// omega(G^R) = 2n on a free K_{6n}.
LemmaReport check_l4(const ColoredGraph& g, int n);

/// Degree pattern of the star vertex over a red 3K_{2n} base: at most one
/// red star edge per block; d(w) <= 2n+4 when every block sees a blue star
/// edge, else d(w) <= 4n+1. Throws std::invalid_argument when the base has
/// no red 3K_{2n} partition or order != 6n.
LemmaReport check_star_cases(const StarColoredGraph& g, int n);

/// Every applicable check for a coloring of K_{6n}: p1, k3/c5/c7 once per
/// red block (or once with the auto-discovered K), l2 and l4.
std::vector<LemmaReport> check_all(const ColoredGraph& g, int n);
/// Star-case check followed by check_all on the base.
std::vector<LemmaReport> check_all(const StarColoredGraph& g, int n);

}  // namespace ramsey
