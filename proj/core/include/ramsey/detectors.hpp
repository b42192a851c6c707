#pragma once

#include <array>
#include <optional>
#include <vector>

#include "ramsey/graph.hpp"
#include "ramsey/targets.hpp"
#include "ramsey/witness.hpp"

namespace ramsey {

// Exact detectors for monochromatic structures in a (possibly partial)
// coloring. Uncolored pairs are non-adjacent in both colors, which is how a
// star vertex participates only through its star edges. All functions are
// pure and deterministic.

/// Some K_r in G^c[within], or none. Branch and bound over vertices ordered
/// by descending c-degree (ties by index) with a greedy-coloring bound.
std::optional<Witness> find_clique(const Coloring& g, Color c, int r);
std::optional<Witness> find_clique(const Coloring& g, Color c, int r, const VertexSet& within);

/// Vertices of one maximum clique of G^c[within], ascending.
std::vector<int> maximum_clique(const Coloring& g, Color c, const VertexSet& within);

/// omega(G^c); 0 for an empty vertex set.
int clique_number(const Coloring& g, Color c);

/// Lexicographically least K_size (as a sorted vertex list) in G^c[within].
std::optional<std::vector<int>> lex_least_clique(const Coloring& g, Color c, int size, const VertexSet& within);

/// Partition of `within` into `size`-cliques of G^c, or none. Exact: every
/// clique through the smallest uncovered vertex is tried in turn.
std::optional<std::vector<VertexSet>> partition_into_cliques(const Coloring& g, Color c, int size,
                                                             const VertexSet& within);

/// m pairwise-disjoint c-colored edges, via maximum matching.
std::optional<Witness> find_matching(const Coloring& g, Color c, int m);
std::optional<Witness> find_matching(const Coloring& g, Color c, int m, const VertexSet& within);

/// Fan F_n: the first center (ascending) whose c-neighborhood carries an
/// n-edge c-matching.
std::optional<Witness> find_fan(const Coloring& g, Color c, int n);

/// Dispatch on the target kind.
std::optional<Witness> find_target(const Coloring& g, Color c, const Target& t);

struct BipartiteResult {
  bool bipartite = true;
  /// 2-coloring certificate when bipartite (parts[0] holds each BFS root).
  std::array<VertexSet, 2> parts;
  /// Odd cycle when not bipartite (not necessarily shortest).
  std::optional<Witness> odd_cycle;
};

BipartiteResult is_bipartite(const Coloring& g, Color c, const VertexSet& within);

/// A shortest odd cycle of G^c[within]; none iff bipartite. Its length is
/// `vertices.size()`.
std::optional<Witness> shortest_odd_cycle(const Coloring& g, Color c, const VertexSet& within);

struct FreeResult {
  bool free = true;
  std::optional<Witness> witness;
};

/// (G, H)-freeness: no red `t.red` and no blue `t.blue`. On failure the
/// witness is the red structure if one exists, else the blue one.
FreeResult is_free(const Coloring& g, const TargetPair& t);
FreeResult is_free(const ColoredGraph& g, const TargetPair& t);
FreeResult is_free(const StarColoredGraph& g, const TargetPair& t);

}  // namespace ramsey
