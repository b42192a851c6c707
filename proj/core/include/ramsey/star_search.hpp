#pragma once

#include <optional>
#include <vector>

#include "ramsey/graph.hpp"
#include "ramsey/parallel.hpp"
#include "ramsey/search.hpp"
#include "ramsey/targets.hpp"

namespace ramsey {

struct StarSearchOptions {
  Budget budget = Budget::from_environment();
  unsigned threads = 1;
  /// Use the red-block structure of the base when it has one (see
  /// detect_red_blocks).
  bool structural_prunes = true;
};

struct StarOutcome {
  SearchStatus status = SearchStatus::Aborted;
  std::optional<StarColoredGraph> witness;
  SearchStats stats;
};

/// Searches star extensions of the fixed `base` with exactly k star edges
/// (each base vertex: blue, red or absent, tried in that order) for one
/// that stays free. Throws std::invalid_argument when k is outside
/// [0, order] or the base itself is not free.
StarOutcome search_star_free(const ColoredGraph& base, int k, const TargetPair& t, const StarSearchOptions& opts = {});

struct ExtensionResult {
  /// Exhausted: max_k is proven optimal. Aborted: max_k is only a lower bound.
  SearchStatus status = SearchStatus::Aborted;
  int max_k = 0;
  StarColoredGraph witness;
  SearchStats stats;
};

/// Largest k for which a free star extension of `base` exists, by branch
/// and bound over star-edge assignments.
ExtensionResult max_star_extension(const ColoredGraph& base, const TargetPair& t, const StarSearchOptions& opts = {});

/// Red cliques of size >= 2n partitioning the base, when the red target is
/// Fan(n) and such a partition into equal blocks exists. A star vertex with
/// two red edges into one such block closes a red F_n, so the search may
/// cut those branches without calling a detector.
std::optional<std::vector<VertexSet>> detect_red_blocks(const ColoredGraph& base, const TargetPair& t);

}  // namespace ramsey
