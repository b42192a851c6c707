// `ramsey`: construct, check, search and verify red/blue colorings.
//
// Exit codes: 0 ok, 1 structure found / claim refuted, 2 usage or parse
// error, 3 budget abort. JSON goes to stdout, a one-line summary to stderr.

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "ramsey/constructions.hpp"
#include "ramsey/detectors.hpp"
#include "ramsey/graph_io.hpp"
#include "ramsey/report_json.hpp"
#include "ramsey/search.hpp"
#include "ramsey/star_search.hpp"
#include "ramsey/uniqueness.hpp"
#include "ramsey/verify.hpp"

namespace {

using namespace ramsey;

constexpr int kOk = 0;
constexpr int kFound = 1;
constexpr int kUsage = 2;
constexpr int kAborted = 3;

/// Argument errors detected after CLI11 parsing.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct SharedFlags {
  unsigned threads = 1;
  std::optional<std::uint64_t> budget_nodes;
  std::optional<double> budget_secs;
  std::optional<std::string> checkpoint;
  std::optional<std::string> resume;
  bool no_symmetry = false;
  std::string symmetry = "v0-sorted";

  void attach(CLI::App* cmd, bool with_search_flags) {
    cmd->add_option("--threads", threads, "Worker threads")->check(CLI::Range(1u, 256u));
    cmd->add_option("--budget-nodes", budget_nodes, "Node budget (default 1e8)");
    cmd->add_option("--budget-secs", budget_secs, "Time budget in seconds (default RAMSEY_BUDGET_SECS or 600)");
    if (!with_search_flags) return;
    cmd->add_option("--checkpoint", checkpoint, "Write unexplored prefixes here on abort");
    cmd->add_option("--resume", resume, "Resume from a checkpoint file");
    auto* none = cmd->add_flag("--no-symmetry", no_symmetry, "Disable symmetry breaking");
    cmd->add_option("--symmetry", symmetry, "none | v0-sorted | v0-maxdeg")
        ->check(CLI::IsMember({"none", "v0-sorted", "v0-maxdeg"}))
        ->excludes(none);
  }

  Budget budget() const {
    Budget b = Budget::from_environment();
    if (budget_nodes) b.max_nodes = *budget_nodes;
    if (budget_secs) b.max_seconds = *budget_secs;
    return b;
  }

  SearchOptions search_options() const {
    SearchOptions o;
    o.budget = budget();
    o.threads = threads;
    o.symmetry = no_symmetry ? SymmetryScheme::None : parse_symmetry(symmetry);
    if (checkpoint) o.checkpoint_out = *checkpoint;
    if (resume) o.resume_from = *resume;
    return o;
  }

  StarSearchOptions star_options() const {
    StarSearchOptions o;
    o.budget = budget();
    o.threads = threads;
    return o;
  }
};

void emit(const Json& j) { std::cout << j.dump(2) << '\n'; }

TargetPair targets_from(const std::string& red, const std::string& blue) {
  try {
    return {parse_target(red), parse_target(blue)};
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

AnyGraph load_graph(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open " + path);
  try {
    return parse_graph(in);
  } catch (const ParseError& e) {
    const std::string where = e.line() == 0 ? path + ": end of input" : path + ":" + std::to_string(e.line());
    throw UsageError(where + ": " + e.what());
  }
}

ColoredGraph load_base(const std::string& path) {
  auto g = load_graph(path);
  if (!std::holds_alternative<ColoredGraph>(g)) throw UsageError(path + ": expected a coloring without a star vertex");
  return std::get<ColoredGraph>(std::move(g));
}

int status_exit(SearchStatus s) { return s == SearchStatus::Aborted ? kAborted : kOk; }

std::string stats_line(const SearchStats& s) {
  std::ostringstream out;
  out << s.nodes << " nodes, " << s.elapsed_seconds << " s, symmetry " << s.symmetry << ", " << s.workers
      << " worker(s)";
  return out.str();
}

// ---- construct ----------------------------------------------------------

struct ConstructArgs {
  std::string kind;
  int n = 0;
  int m = 0;
  int r = 0;
  std::optional<std::string> spec;
  std::uint64_t seed = 1;
  std::optional<std::string> out;
};

int run_construct(const ConstructArgs& a) {
  auto need = [](int v, const char* flag) {
    if (v <= 0) throw UsageError(std::string("construct: ") + flag + " is required and must be positive");
  };
  std::string text;
  Json info;
  info["kind"] = a.kind;
  try {
    if (a.kind == "g1") {
      need(a.n, "--n");
      if (a.n < 1 || 6 * a.n > 127) throw UsageError("construct g1: --n out of range");
      text = serialize(build_g1(a.n));
    } else if (a.kind == "g2") {
      need(a.n, "--n");
      G2Spec spec;
      if (a.spec) {
        std::ifstream in(*a.spec);
        if (!in) throw UsageError("cannot open " + *a.spec);
        nlohmann::json j;
        try {
          in >> j;
        } catch (const nlohmann::json::exception& e) {
          throw UsageError(*a.spec + ": " + e.what());
        }
        spec = g2_spec_from_json(j);
        if (spec.n != a.n) throw UsageError("construct g2: spec n differs from --n");
      } else {
        spec = sample_g2_spec(a.n, a.seed);
      }
      text = serialize(build_g2(spec));
      info["spec"] = to_json(spec);
    } else if (a.kind == "lower-bound") {
      need(a.n, "--n");
      auto lb = build_lower_bound(a.n);
      if (lb.outside_claimed_range) {
        std::cerr << "note: n < 4 is outside the range where 4n+2 is claimed\n";
      }
      info["outside_claimed_range"] = lb.outside_claimed_range;
      text = serialize(lb.graph);
    } else if (a.kind == "matching-critical") {
      need(a.m, "--m");
      need(a.r, "--r");
      text = serialize(build_matching_critical(a.m, a.r));
    } else if (a.kind == "fan-k3-critical") {
      need(a.n, "--n");
      text = serialize(build_fan_k3_critical(a.n));
    } else {
      throw UsageError("construct: unknown kind " + a.kind);
    }
  } catch (const std::invalid_argument& e) {
    throw UsageError(std::string("construct ") + a.kind + ": " + e.what());
  } catch (const std::logic_error& e) {
    throw UsageError(std::string("construct ") + a.kind + ": " + e.what());
  }

  const AnyGraph g = parse_graph(text);
  const Coloring& view = std::visit([](const auto& x) -> const Coloring& { return x.view(); }, g);
  const int order = std::visit([](const auto& x) { return x.order(); }, g);
  info["order"] = order;
  if (const auto* s = std::get_if<StarColoredGraph>(&g)) info["star_degree"] = s->star_degree();
  info["red_edges"] = view.edge_count(Color::Red);
  info["blue_edges"] = view.edge_count(Color::Blue);

  if (a.out) {
    std::ofstream f(*a.out);
    if (!f) throw UsageError("cannot write " + *a.out);
    f << text;
    info["output"] = *a.out;
    emit(info);
  } else {
    std::cout << text;
  }
  std::cerr << a.kind << ": order " << order << ", " << info["red_edges"] << " red, " << info["blue_edges"]
            << " blue\n";
  return kOk;
}

// ---- check --------------------------------------------------------------

int run_check(const std::string& file, const TargetPair& t) {
  const AnyGraph g = load_graph(file);
  const FreeResult r = std::visit([&](const auto& x) { return is_free(x, t); }, g);
  Json j;
  j["free"] = r.free;
  if (!r.free) j["witness"] = to_json(*r.witness);
  emit(j);
  std::cerr << file << ": " << (r.free ? "free" : "not free") << " for red " << to_string(t.red) << ", blue "
            << to_string(t.blue) << '\n';
  return r.free ? kOk : kFound;
}

// ---- search / extend / verify-ramsey ------------------------------------

int run_search(int order, const TargetPair& t, const SharedFlags& f) {
  if (order < 1 || order > 127) throw UsageError("search: --order must be in [1, 127]");
  const auto o = search_free_coloring(order, t, f.search_options());
  emit(to_json(o, order, t));
  std::cerr << "search order " << order << ": " << to_string(o.status) << " (" << stats_line(o.stats) << ")\n";
  return status_exit(o.status);
}

int run_extend(const std::string& file, const TargetPair& t, bool max, std::optional<int> k, bool structural,
               const SharedFlags& f) {
  const ColoredGraph base = load_base(file);
  if (!is_free(base, t).free) throw UsageError(file + ": base coloring is not free for the given targets");
  auto opts = f.star_options();
  opts.structural_prunes = structural;
  if (max) {
    const auto r = max_star_extension(base, t, opts);
    emit(to_json(r, t));
    std::cerr << "max star extension: " << r.max_k << (r.status == SearchStatus::Exhausted ? "" : " (lower bound)")
              << " (" << stats_line(r.stats) << ")\n";
    return status_exit(r.status);
  }
  if (*k < 0 || *k > base.order()) throw UsageError("extend: --k outside [0, order]");
  const auto o = search_star_free(base, *k, t, opts);
  emit(to_json(o, *k, t));
  std::cerr << "star extension k=" << *k << ": " << to_string(o.status) << " (" << stats_line(o.stats) << ")\n";
  return status_exit(o.status);
}

int run_verify_ramsey(const TargetPair& t, int claimed, const SharedFlags& f) {
  if (claimed < 2 || claimed > 127) throw UsageError("verify-ramsey: --claimed must be in [2, 127]");
  const auto r = verify_ramsey_number(t, claimed, f.search_options());
  emit(to_json(r));
  std::cerr << "r(" << to_string(t.red) << ", " << to_string(t.blue) << ") = " << claimed << ": lower "
            << to_string(r.lower.verdict) << ", upper " << to_string(r.upper.verdict) << '\n';
  if (r.refuted()) return kFound;
  return r.verified() ? kOk : kAborted;
}

// ---- verify-lemmas ------------------------------------------------------

int run_verify_lemmas(const std::string& file, int n) {
  const AnyGraph g = load_graph(file);
  std::vector<LemmaReport> reports;
  try {
    reports = std::visit([&](const auto& x) { return check_all(x, n); }, g);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  Json out = Json::array();
  int failed = 0;
  int applicable = 0;
  for (const auto& r : reports) {
    out.push_back(to_json(r));
    applicable += r.applicable;
    failed += r.holds == false;
  }
  emit(out);
  std::cerr << file << ": " << reports.size() << " reports, " << applicable << " applicable, " << failed
            << " failed\n";
  return failed == 0 ? kOk : kFound;
}

// ---- scan-uniqueness ----------------------------------------------------

int run_scan(int n, const std::optional<std::string>& dump_dir, std::size_t max_dumps, const SharedFlags& f) {
  if (n < 1 || 6 * n > 127) throw UsageError("scan-uniqueness: --n out of range");
  std::optional<std::filesystem::path> dir;
  if (dump_dir) {
    dir = *dump_dir;
    std::filesystem::create_directories(*dir);
  }
  auto opts = f.search_options();
  const auto r = uniqueness_scan(n, opts, dir, max_dumps);
  emit(to_json(r));
  std::cerr << "uniqueness n=" << n << ": " << to_string(r.status) << ", " << r.colorings << " colorings (G1 " << r.g1
            << ", G2 " << r.g2 << ", relaxed G2 " << r.relaxed_g2 << ", outside " << r.outside << ")\n";
  if (r.status == SearchStatus::Aborted) return kAborted;
  return r.literal_non_members() == 0 ? kOk : kFound;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Red/blue colorings of complete graphs: constructions, checks and exhaustive search"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "ramsey 0.1.0");

  ConstructArgs construct;
  auto* c_construct = app.add_subcommand("construct", "Build a named coloring");
  c_construct->add_option("kind", construct.kind, "g1 | g2 | lower-bound | matching-critical | fan-k3-critical")
      ->required()
      ->check(CLI::IsMember({"g1", "g2", "lower-bound", "matching-critical", "fan-k3-critical"}));
  c_construct->add_option("--n", construct.n, "Fan parameter");
  c_construct->add_option("--m", construct.m, "Matching size");
  c_construct->add_option("--r", construct.r, "Clique size");
  c_construct->add_option("--spec", construct.spec, "G2 spec JSON file");
  c_construct->add_option("--seed", construct.seed, "Seed for a sampled G2 spec");
  c_construct->add_option("-o,--output", construct.out, "Output file (default stdout)");

  std::string file;
  std::string red;
  std::string blue;
  auto add_targets = [&](CLI::App* cmd) {
    cmd->add_option("--red", red, "Red target: fan:<n> | matching:<m> | clique:<r>")->required();
    cmd->add_option("--blue", blue, "Blue target: fan:<n> | matching:<m> | clique:<r>")->required();
  };

  auto* c_check = app.add_subcommand("check", "Test a coloring for freeness");
  c_check->add_option("file", file, "Coloring file")->required();
  add_targets(c_check);

  SharedFlags flags;
  int order = 0;
  auto* c_search = app.add_subcommand("search", "Search for a free coloring of K_order");
  c_search->add_option("--order", order, "Order of the complete graph")->required();
  add_targets(c_search);
  flags.attach(c_search, true);

  bool ext_max = false;
  std::optional<int> ext_k;
  bool no_structural = false;
  auto* c_extend = app.add_subcommand("extend", "Star extensions of a fixed base coloring");
  c_extend->add_option("file", file, "Base coloring file")->required();
  add_targets(c_extend);
  auto* o_max = c_extend->add_flag("--max", ext_max, "Maximum free star degree");
  auto* o_k = c_extend->add_option("--k", ext_k, "Search for a free extension with exactly k star edges");
  o_max->excludes(o_k);
  c_extend->add_flag("--no-structural-prunes", no_structural, "Disable the red-block prune");
  flags.attach(c_extend, false);

  int claimed = 0;
  auto* c_ramsey = app.add_subcommand("verify-ramsey", "Check r(red, blue) = claimed by exhaustion");
  add_targets(c_ramsey);
  c_ramsey->add_option("--claimed", claimed, "Claimed Ramsey number")->required();
  flags.attach(c_ramsey, true);

  int lemma_n = 0;
  auto* c_lemmas = app.add_subcommand("verify-lemmas", "Run every structural check on a K_{6n} coloring");
  c_lemmas->add_option("file", file, "Coloring file")->required();
  c_lemmas->add_option("--n", lemma_n, "Fan parameter")->required();

  int scan_n = 0;
  std::optional<std::string> dump_dir;
  std::size_t max_dumps = 16;
  auto* c_scan = app.add_subcommand("scan-uniqueness", "Classify all free K_{6n} colorings with red 3K_2n");
  c_scan->add_option("--n", scan_n, "Fan parameter")->required();
  c_scan->add_option("--dump-dir", dump_dir, "Directory for counterexample files");
  c_scan->add_option("--max-dumps", max_dumps, "Maximum number of dumped files");
  flags.attach(c_scan, true);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (c_construct->parsed()) return run_construct(construct);
    if (c_check->parsed()) return run_check(file, targets_from(red, blue));
    if (c_search->parsed()) return run_search(order, targets_from(red, blue), flags);
    if (c_extend->parsed()) {
      if (!ext_max && !ext_k) throw UsageError("extend: one of --max or --k is required");
      return run_extend(file, targets_from(red, blue), ext_max, ext_k, !no_structural, flags);
    }
    if (c_ramsey->parsed()) return run_verify_ramsey(targets_from(red, blue), claimed, flags);
    if (c_lemmas->parsed()) return run_verify_lemmas(file, lemma_n);
    if (c_scan->parsed()) return run_scan(scan_n, dump_dir, max_dumps, flags);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::runtime_error& e) {
    // Checkpoint read failures and similar input problems.
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}
