#pragma once

#include <string>
#include <string_view>

namespace ramsey {

/// A monochromatic structure to avoid.
///
///  - Fan(n): n triangles sharing a center (F_1 = K_3), n >= 1.
///  - Matching(m): m pairwise disjoint edges, m >= 1.
///  - Clique(r): complete graph K_r, r >= 2.
struct Target {
  enum class Kind { Fan, Matching, Clique };

  Kind kind = Kind::Clique;
  int size = 2;

  static Target fan(int n);
  static Target matching(int m);
  static Target clique(int r);

  /// Vertex count of the structure (2n+1, 2m or r).
  int vertex_count() const;

  friend bool operator==(const Target&, const Target&) = default;
};

/// The avoidance pair (G, H): no red G and no blue H.
struct TargetPair {
  Target red;
  Target blue;

  friend bool operator==(const TargetPair&, const TargetPair&) = default;
};

/// `fan:<n>`, `matching:<m>` or `clique:<r>`; throws std::invalid_argument.
Target parse_target(std::string_view text);
std::string to_string(const Target& t);
std::string_view to_string(Target::Kind k);

}  // namespace ramsey
