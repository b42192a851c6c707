#include "ramsey/report_json.hpp"

#include <stdexcept>
#include <string>

#include "ramsey/graph_io.hpp"

namespace ramsey {

namespace {

Json targets_json(const TargetPair& t) { return {{"red", to_string(t.red)}, {"blue", to_string(t.blue)}}; }

Json edges_json(const std::vector<Edge>& edges) {
  Json out = Json::array();
  for (const auto& [u, v] : edges) out.push_back({u, v});
  return out;
}

std::vector<Edge> edges_from_json(const nlohmann::json& j, const char* key) {
  if (!j.contains(key) || !j.at(key).is_array()) {
    throw std::invalid_argument(std::string("G2 spec: missing array \"") + key + "\"");
  }
  std::vector<Edge> out;
  for (const auto& e : j.at(key)) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() || !e[1].is_number_integer()) {
      throw std::invalid_argument(std::string("G2 spec: entries of \"") + key + "\" must be [a, b] integer pairs");
    }
    out.emplace_back(e[0].get<int>(), e[1].get<int>());
  }
  return out;
}

}  // namespace

Json to_json(const Witness& w) {
  Json j;
  j["kind"] = to_string(w.kind);
  j["color"] = to_string(w.color);
  j["center"] = w.center ? Json(*w.center) : Json(nullptr);
  j["vertices"] = w.vertices;
  j["edges"] = edges_json(w.edges);
  return j;
}

Json to_json(const LemmaReport& r) {
  Json j;
  j["lemma"] = r.lemma;
  j["applicable"] = r.applicable;
  j["holds"] = r.holds ? Json(*r.holds) : Json(nullptr);
  j["counterexample"] = r.counterexample ? to_json(*r.counterexample) : Json(nullptr);
  j["details"] = r.details;
  return j;
}

Json to_json(const SearchStats& s) {
  Json j;
  j["nodes"] = s.nodes;
  j["prunes"] = s.prunes;
  j["symmetry_prunes"] = s.symmetry_prunes;
  j["elapsed_seconds"] = s.elapsed_seconds;
  j["symmetry"] = s.symmetry;
  j["workers"] = s.workers;
  j["tasks"] = s.tasks;
  return j;
}

Json to_json(const SearchOutcome& o, int order, const TargetPair& t) {
  Json j;
  j["order"] = order;
  j["targets"] = targets_json(t);
  j["status"] = to_string(o.status);
  j["witness"] = o.witness ? Json(serialize(*o.witness)) : Json(nullptr);
  j["stats"] = to_json(o.stats);
  return j;
}

Json to_json(const StarOutcome& o, int k, const TargetPair& t) {
  Json j;
  j["k"] = k;
  j["targets"] = targets_json(t);
  j["status"] = to_string(o.status);
  j["witness"] = o.witness ? Json(serialize(*o.witness)) : Json(nullptr);
  j["stats"] = to_json(o.stats);
  return j;
}

Json to_json(const ExtensionResult& r, const TargetPair& t) {
  Json j;
  j["targets"] = targets_json(t);
  j["status"] = to_string(r.status);
  j["max_k"] = r.max_k;
  j["optimal"] = r.status == SearchStatus::Exhausted;
  j["witness"] = serialize(r.witness);
  j["stats"] = to_json(r.stats);
  return j;
}

namespace {

Json side_json(const RamseySide& s, const TargetPair& t) {
  Json j;
  j["order"] = s.order;
  j["expected"] = to_string(s.expected);
  j["verdict"] = to_string(s.verdict);
  j["outcome"] = to_json(s.outcome, s.order, t);
  return j;
}

}  // namespace

Json to_json(const RamseyReport& r) {
  Json j;
  j["targets"] = targets_json(r.targets);
  j["claimed"] = r.claimed;
  j["verdict"] = r.verified() ? "verified" : r.refuted() ? "refuted" : "inconclusive";
  j["lower"] = side_json(r.lower, r.targets);
  j["upper"] = side_json(r.upper, r.targets);
  return j;
}

Json to_json(const UniquenessReport& r) {
  Json j;
  j["n"] = r.n;
  j["status"] = to_string(r.status);
  j["colorings"] = r.colorings;
  j["g1"] = r.g1;
  j["g2"] = r.g2;
  j["relaxed_g2"] = r.relaxed_g2;
  j["outside"] = r.outside;
  j["literal_non_members"] = r.literal_non_members();
  Json dumped = Json::array();
  for (const auto& p : r.dumped) dumped.push_back(p.string());
  j["dumped"] = dumped;
  j["stats"] = to_json(r.stats);
  return j;
}

Json to_json(const G2Spec& spec) {
  Json j;
  j["n"] = spec.n;
  j["I1"] = edges_json(spec.links[0]);
  j["I2"] = edges_json(spec.links[1]);
  j["I3"] = edges_json(spec.links[2]);
  return j;
}

G2Spec g2_spec_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw std::invalid_argument("G2 spec: expected a JSON object");
  if (!j.contains("n") || !j.at("n").is_number_integer()) {
    throw std::invalid_argument("G2 spec: missing integer \"n\"");
  }
  G2Spec spec;
  spec.n = j.at("n").get<int>();
  spec.links[0] = edges_from_json(j, "I1");
  spec.links[1] = edges_from_json(j, "I2");
  spec.links[2] = edges_from_json(j, "I3");
  return spec;
}

}  // namespace ramsey
