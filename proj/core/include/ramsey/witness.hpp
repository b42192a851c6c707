#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "ramsey/graph.hpp"

namespace ramsey {

/// A monochromatic substructure located in some host coloring.
///
/// Layout per kind:
///  - Fan:      center set; vertices = a1 b1 a2 b2 ... (the matched pairs);
///              edges = center-leaf edges followed by the n pair edges.
///  - Clique:   vertices ascending; edges = all pairs.
///  - Matching: edges pairwise disjoint; vertices = their endpoints.
///  - OddCycle: vertices in cycle order; edges = consecutive pairs, closed.
///  - Star:     center set; vertices = leaves; edges = center-leaf pairs.
struct Witness {
  enum class Kind { Fan, Clique, Matching, OddCycle, Star };

  Kind kind = Kind::Clique;
  Color color = Color::Red;
  std::optional<int> center;
  std::vector<int> vertices;
  std::vector<Edge> edges;

  static Witness fan(Color c, int center, const std::vector<Edge>& matching);
  static Witness clique(Color c, std::vector<int> vertices);
  static Witness matching(Color c, std::vector<Edge> edges);
  static Witness odd_cycle(Color c, std::vector<int> cycle);
  static Witness star(Color c, int center, std::vector<int> leaves);

  friend bool operator==(const Witness&, const Witness&) = default;
};

std::string_view to_string(Witness::Kind k);

/// Re-checks the witness against `host` edge by edge, independently of the
/// detector that produced it: layout as documented on Witness, distinct
/// vertices, and every listed edge present in the claimed color.
bool validate_witness(const Coloring& host, const Witness& w);

}  // namespace ramsey
