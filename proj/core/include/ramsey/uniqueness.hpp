#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <vector>

#include "ramsey/search.hpp"

namespace ramsey {

struct UniquenessReport {
  int n = 0;
  SearchStatus status = SearchStatus::Aborted;
  std::uint64_t colorings = 0;
  std::uint64_t g1 = 0;
  std::uint64_t g2 = 0;
  /// Colorings of the G2 shape where some (not all) k_i = 0. They fall
  /// outside a literal reading of 1 <= k_i.
  std::uint64_t relaxed_g2 = 0;
  std::uint64_t outside = 0;
  std::vector<std::filesystem::path> dumped;
  SearchStats stats;

  std::uint64_t literal_non_members() const { return relaxed_g2 + outside; }
};

/// Enumerates every (F_n, K_4)-free coloring of K_{6n} whose red graph
/// contains 3K_{2n} on the fixed blocks [0,2n), [2n,4n), [4n,6n) and
/// classifies each against the G1/G2 family. Colorings that are not G1 or
/// G2 are written to `dump_dir` (at most `max_dumps` files) when given.
UniquenessReport uniqueness_scan(int n, const SearchOptions& opts,
                                 const std::optional<std::filesystem::path>& dump_dir = std::nullopt,
                                 std::size_t max_dumps = 16);

}  // namespace ramsey
