#pragma once

#include <nlohmann/json.hpp>

#include "ramsey/constructions.hpp"
#include "ramsey/search.hpp"
#include "ramsey/star_search.hpp"
#include "ramsey/uniqueness.hpp"
#include "ramsey/verify.hpp"
#include "ramsey/witness.hpp"

namespace ramsey {

// JSON shapes for every report the library produces. Key order is fixed
// (ordered_json) so that output is stable across runs.

using Json = nlohmann::ordered_json;

Json to_json(const Witness& w);
Json to_json(const LemmaReport& r);
Json to_json(const SearchStats& s);
Json to_json(const SearchOutcome& o, int order, const TargetPair& t);
Json to_json(const StarOutcome& o, int k, const TargetPair& t);
Json to_json(const ExtensionResult& r, const TargetPair& t);
Json to_json(const RamseyReport& r);
Json to_json(const UniquenessReport& r);
Json to_json(const G2Spec& spec);

/// {"n": 4, "I1": [[a, b], ...], "I2": [...], "I3": [...]}; throws
/// std::invalid_argument on a shape error (validation is separate).
G2Spec g2_spec_from_json(const nlohmann::json& j);

}  // namespace ramsey
