#pragma once

#include <limits>
#include <vector>

#include "ramsey/graph.hpp"

namespace ramsey {

/// Maximum matching of the `c`-colored graph induced on `within`
/// (Edmonds' blossom algorithm, O(V^3)).
///
/// Stops early once `stop_at` edges are matched, so callers asking "is the
/// matching number at least m" pay only for what they need. Output edges
/// are (low, high) pairs sorted by low endpoint.
std::vector<Edge> maximum_matching(const Coloring& g, Color c, const VertexSet& within,
                                   int stop_at = std::numeric_limits<int>::max());

/// Matching number of G^c[within].
int matching_number(const Coloring& g, Color c, const VertexSet& within);

}  // namespace ramsey
