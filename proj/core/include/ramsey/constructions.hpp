#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "ramsey/graph.hpp"

namespace ramsey {

/// Cross-block red edges of a G2 coloring of K_{6n}.
///
/// Blocks are contiguous: A_1 = [0, 2n), A_2 = [2n, 4n), A_3 = [4n, 6n).
/// `links[i]` holds pairs (a, b) with a in A_{i+1} and b in A_{i+2 mod 3}
/// (so links[2] runs from A_3 back to A_1).
struct G2Spec {
  int n = 2;
  std::array<std::vector<Edge>, 3> links;

  friend bool operator==(const G2Spec&, const G2Spec&) = default;
};

/// Index range [first, last) of block `i` (0-based) of a 3 x 2n layout.
constexpr std::pair<int, int> block_range(int n, int i) { return {2 * n * i, 2 * n * (i + 1)}; }

/// Throws std::invalid_argument describing the first violated rule:
/// n >= 2, 1 <= |I_i| <= 2n, endpoints in the right blocks, each I_i
/// independent, and no triangle formed by I edges.
void validate(const G2Spec& spec);

/// Red 3K_{2n} on the blocks, every cross-block pair blue.
ColoredGraph build_g1(int n);

/// build_g1(n) with every I edge recolored red; validates `spec` first.
ColoredGraph build_g2(const G2Spec& spec);

/// Rejection sampler: k_i uniform in [1, 2n], random disjoint endpoints,
/// redraw on a red triangle. Deterministic for a given seed.
G2Spec sample_g2_spec(int n, std::uint64_t seed);

struct LowerBoundGraph {
  StarColoredGraph graph;
  /// n < 4: the construction is still built but the star-critical value it
  /// witnesses is only claimed for n >= 4.
  bool outside_claimed_range = false;
};

/// G1(n) plus a star vertex with 4n + 1 edges: blue to all of A_1 and A_2,
/// red to the lowest-index vertex of A_3. Throws for n < 2.
LowerBoundGraph build_lower_bound(int n);

/// Critical coloring for (mK_2, K_r): order r + 2m - 3, red K_{2m-1} on the
/// first 2m - 1 vertices and everything else blue.
ColoredGraph build_matching_critical(int m, int r);

/// Where a coloring of K_{6n} sits relative to the G1/G2 family.
enum class FamilyClass {
  G1,         ///< red graph is exactly 3K_{2n}
  G2,         ///< 3K_{2n} plus cross matchings, each of size >= 1, no red triangle
  RelaxedG2,  ///< as G2 but at least one (not all) of the three matchings empty
  Outside     ///< no red 3K_{2n}, or cross red edges not of the above shape
};

std::string_view to_string(FamilyClass c);

struct FamilyMembership {
  FamilyClass family = FamilyClass::Outside;
  /// The red 3K_{2n} partition, when one exists.
  std::optional<std::vector<VertexSet>> blocks;
  /// Cross red edge counts between blocks (0,1), (1,2), (2,0).
  std::array<int, 3> link_counts{};
};

/// Throws std::invalid_argument when the order is not 6n.
FamilyMembership classify_family(const ColoredGraph& g, int n);

/// Critical coloring for (F_n, K_3): order 4n, red 2K_{2n}, blue K_{2n,2n}.
ColoredGraph build_fan_k3_critical(int n);

}  // namespace ramsey
