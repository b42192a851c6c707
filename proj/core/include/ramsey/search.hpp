#pragma once

#include <cstdint>
#include <filesystem>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ramsey/graph.hpp"
#include "ramsey/parallel.hpp"
#include "ramsey/targets.hpp"

namespace ramsey {

enum class SearchStatus { WitnessFound, Exhausted, Aborted };

/// Isomorph rejection used by the edge-coloring search.
///
///  - None: plain enumeration.
///  - FirstVertexSorted: vertex 0's edges (0,1), (0,2), ... are colored
///    red...red blue...blue.
///  - FirstVertexMaxDegree: additionally, no vertex may end up with a larger
///    red degree than vertex 0.
enum class SymmetryScheme { None, FirstVertexSorted, FirstVertexMaxDegree };

std::string_view to_string(SearchStatus s);
std::string_view to_string(SymmetryScheme s);
/// "none", "v0-sorted" or "v0-maxdeg"; throws std::invalid_argument.
SymmetryScheme parse_symmetry(std::string_view s);

struct SearchStats {
  std::uint64_t nodes = 0;
  std::uint64_t prunes = 0;
  std::uint64_t symmetry_prunes = 0;
  double elapsed_seconds = 0.0;
  std::string symmetry = "none";
  unsigned workers = 1;
  std::size_t tasks = 0;
};

struct SearchOptions {
  Budget budget = Budget::from_environment();
  SymmetryScheme symmetry = SymmetryScheme::FirstVertexSorted;
  unsigned threads = 1;
  /// Written when the run is aborted: unexplored prefixes of the frontier.
  std::optional<std::filesystem::path> checkpoint_out;
  /// Resume from a checkpoint instead of the root; the header must match.
  std::optional<std::filesystem::path> resume_from;
};

struct SearchOutcome {
  SearchStatus status = SearchStatus::Aborted;
  std::optional<ColoredGraph> witness;
  SearchStats stats;
};

/// Backtracking search for a coloring of K_order with no red `t.red` and no
/// blue `t.blue`. Edges are colored in lexicographic (u, v) order, red
/// first; a branch is cut as soon as the new edge completes a target.
/// WitnessFound witnesses are re-checked with is_free before returning.
SearchOutcome search_free_coloring(int order, const TargetPair& t, const SearchOptions& opts = {});

/// A pre-colored pair for enumerate_free_colorings.
struct FixedEdge {
  Edge edge;
  Color color;
};

/// Visits every free coloring of K_order extending `fixed` (no symmetry
/// reduction). `visit` returns false to stop early; it may be called from
/// several workers, but never concurrently. Status is Exhausted when the
/// whole space was visited, WitnessFound when `visit` stopped the run.
SearchOutcome enumerate_free_colorings(int order, const TargetPair& t, const std::vector<FixedEdge>& fixed,
                                       const SearchOptions& opts,
                                       const std::function<bool(const ColoredGraph&)>& visit);

/// Whether the c-colored pair (u, v), already present in `g`, completes a
/// c-colored copy of `t`. Assumes `g` without (u, v) had none, so only
/// structures through (u, v) are examined.
bool edge_completes_target(const Coloring& g, int u, int v, Color c, const Target& t);

/// Checkpoint header of a search problem; mismatches make resume fail.
struct CheckpointHeader {
  int order = 0;
  TargetPair targets;
  SymmetryScheme symmetry = SymmetryScheme::None;

  friend bool operator==(const CheckpointHeader&, const CheckpointHeader&) = default;
};

void write_checkpoint(const std::filesystem::path& path, const CheckpointHeader& header,
                      const std::vector<std::string>& prefixes);
/// Throws std::runtime_error on a malformed file.
std::pair<CheckpointHeader, std::vector<std::string>> read_checkpoint(const std::filesystem::path& path);

enum class Verdict { Verified, Refuted, Inconclusive };
std::string_view to_string(Verdict v);

struct RamseySide {
  int order = 0;
  /// WitnessFound for the lower side, Exhausted for the upper side.
  SearchStatus expected = SearchStatus::WitnessFound;
  SearchOutcome outcome;
  Verdict verdict = Verdict::Inconclusive;
};

struct RamseyReport {
  TargetPair targets;
  int claimed = 0;
  RamseySide lower;  // K_{r-1}: a free coloring must exist
  RamseySide upper;  // K_r: no free coloring may exist
  bool verified() const { return lower.verdict == Verdict::Verified && upper.verdict == Verdict::Verified; }
  bool refuted() const { return lower.verdict == Verdict::Refuted || upper.verdict == Verdict::Refuted; }
};

/// r(G, H) = claimed_r by searching at orders claimed_r - 1 and claimed_r.
/// Budget exhaustion on either side is reported as Inconclusive.
RamseyReport verify_ramsey_number(const TargetPair& t, int claimed_r, const SearchOptions& opts = {});

}  // namespace ramsey
