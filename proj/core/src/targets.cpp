#include "ramsey/targets.hpp"

#include <charconv>
#include <stdexcept>

namespace ramsey {

Target Target::fan(int n) {
  if (n < 1) throw std::invalid_argument("fan parameter must be >= 1");
  return {Kind::Fan, n};
}

Target Target::matching(int m) {
  if (m < 1) throw std::invalid_argument("matching size must be >= 1");
  return {Kind::Matching, m};
}

Target Target::clique(int r) {
  if (r < 2) throw std::invalid_argument("clique size must be >= 2");
  return {Kind::Clique, r};
}

int Target::vertex_count() const {
  switch (kind) {
    case Kind::Fan: return 2 * size + 1;
    case Kind::Matching: return 2 * size;
    case Kind::Clique: return size;
  }
  return size;
}

std::string_view to_string(Target::Kind k) {
  switch (k) {
    case Target::Kind::Fan: return "fan";
    case Target::Kind::Matching: return "matching";
    case Target::Kind::Clique: return "clique";
  }
  return "?";
}

std::string to_string(const Target& t) {
  return std::string(to_string(t.kind)) + ":" + std::to_string(t.size);
}

Target parse_target(std::string_view text) {
  const auto colon = text.find(':');
  if (colon == std::string_view::npos) {
    throw std::invalid_argument("target '" + std::string(text) + "' is not of the form <kind>:<size>");
  }
  const auto kind = text.substr(0, colon);
  const auto num = text.substr(colon + 1);
  int size = 0;
  auto [p, ec] = std::from_chars(num.data(), num.data() + num.size(), size);
  if (num.empty() || ec != std::errc{} || p != num.data() + num.size()) {
    throw std::invalid_argument("target '" + std::string(text) + "' has a non-integer size");
  }
  if (kind == "fan") return Target::fan(size);
  if (kind == "matching") return Target::matching(size);
  if (kind == "clique") return Target::clique(size);
  throw std::invalid_argument("unknown target kind '" + std::string(kind) + "'");
}

}  // namespace ramsey
