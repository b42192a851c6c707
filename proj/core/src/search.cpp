#include "ramsey/search.hpp"

#include <fstream>
#include <mutex>
#include <sstream>
#include <stdexcept>

#include "ramsey/detectors.hpp"
#include "ramsey/matching.hpp"

namespace ramsey {

std::string_view to_string(SearchStatus s) {
  switch (s) {
    case SearchStatus::WitnessFound: return "WitnessFound";
    case SearchStatus::Exhausted: return "Exhausted";
    case SearchStatus::Aborted: return "Aborted";
  }
  return "?";
}

std::string_view to_string(SymmetryScheme s) {
  switch (s) {
    case SymmetryScheme::None: return "none";
    case SymmetryScheme::FirstVertexSorted: return "v0-sorted";
    case SymmetryScheme::FirstVertexMaxDegree: return "v0-maxdeg";
  }
  return "?";
}

SymmetryScheme parse_symmetry(std::string_view s) {
  if (s == "none") return SymmetryScheme::None;
  if (s == "v0-sorted") return SymmetryScheme::FirstVertexSorted;
  if (s == "v0-maxdeg") return SymmetryScheme::FirstVertexMaxDegree;
  throw std::invalid_argument("unknown symmetry scheme '" + std::string(s) + "'");
}

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::Verified: return "Verified";
    case Verdict::Refuted: return "Refuted";
    case Verdict::Inconclusive: return "Inconclusive";
  }
  return "?";
}

namespace {

bool has_clique_in(const Coloring& g, Color c, VertexSet cand, int k) {
  if (k <= 0) return true;
  if (cand.size() < k) return false;
  if (k == 1) return true;
  for (int v = cand.first(); v >= 0; v = cand.next(v)) {
    cand.erase(v);
    if (cand.size() < k - 1) return false;
    if (has_clique_in(g, c, cand & g.neighbors(v, c), k - 1)) return true;
  }
  return false;
}

}  // namespace

bool edge_completes_target(const Coloring& g, int u, int v, Color c, const Target& t) {
  switch (t.kind) {
    case Target::Kind::Clique:
      return has_clique_in(g, c, g.neighbors(u, c) & g.neighbors(v, c), t.size - 2);
    case Target::Kind::Matching:
      return static_cast<int>(maximum_matching(g, c, g.vertices(), t.size).size()) >= t.size;
    case Target::Kind::Fan: {
      // A new fan uses (u, v) either as a spoke (center u or v) or as a
      // matched pair under a common neighbor.
      const int need = 2 * t.size;
      auto fan_at = [&](int x) {
        const VertexSet& nb = g.neighbors(x, c);
        return nb.size() >= need && static_cast<int>(maximum_matching(g, c, nb, t.size).size()) >= t.size;
      };
      if (fan_at(u) || fan_at(v)) return true;
      const VertexSet common = g.neighbors(u, c) & g.neighbors(v, c);
      for (int x = common.first(); x >= 0; x = common.next(x)) {
        if (fan_at(x)) return true;
      }
      return false;
    }
  }
  return false;
}

// --- checkpoint files ------------------------------------------------------

void write_checkpoint(const std::filesystem::path& path, const CheckpointHeader& header,
                      const std::vector<std::string>& prefixes) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write checkpoint " + path.string());
  out << "ramsey-checkpoint 1\n"
      << "order " << header.order << '\n'
      << "red " << to_string(header.targets.red) << '\n'
      << "blue " << to_string(header.targets.blue) << '\n'
      << "symmetry " << to_string(header.symmetry) << '\n'
      << "prefixes " << prefixes.size() << '\n';
  for (const auto& p : prefixes) out << p << '\n';
  if (!out) throw std::runtime_error("failed writing checkpoint " + path.string());
}

std::pair<CheckpointHeader, std::vector<std::string>> read_checkpoint(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read checkpoint " + path.string());
  auto expect = [&](std::string_view key) {
    std::string line;
    if (!std::getline(in, line) || line.rfind(std::string(key) + " ", 0) != 0) {
      throw std::runtime_error("checkpoint " + path.string() + ": expected '" + std::string(key) + " ...'");
    }
    return line.substr(key.size() + 1);
  };
  CheckpointHeader h;
  std::size_t count = 0;
  try {
    if (expect("ramsey-checkpoint") != "1") throw std::runtime_error("unsupported version");
    h.order = std::stoi(expect("order"));
    h.targets.red = parse_target(expect("red"));
    h.targets.blue = parse_target(expect("blue"));
    h.symmetry = parse_symmetry(expect("symmetry"));
    count = std::stoul(expect("prefixes"));
  } catch (const std::invalid_argument& e) {
    throw std::runtime_error("checkpoint " + path.string() + ": " + e.what());
  }
  std::vector<std::string> prefixes;
  std::string line;
  while (std::getline(in, line)) {
    if (line.find_first_not_of("RB") != std::string::npos) {
      throw std::runtime_error("checkpoint " + path.string() + ": bad prefix '" + line + "'");
    }
    prefixes.push_back(line);
  }
  if (prefixes.size() != count) {
    throw std::runtime_error("checkpoint " + path.string() + ": header announces " + std::to_string(count) +
                             " prefixes, found " + std::to_string(prefixes.size()));
  }
  return {h, prefixes};
}

// --- the search engine -----------------------------------------------------

namespace {

using LeafFn = std::function<bool(const Coloring&)>;

class EdgeSearch {
 public:
  enum class Step { Ok, SymmetryCut, TargetCut };

  EdgeSearch(int order, const TargetPair& t, SymmetryScheme sym, const std::vector<FixedEdge>& fixed)
      : order_(order), targets_(t), symmetry_(fixed.empty() ? sym : SymmetryScheme::None), root_(order) {
    for (const auto& f : fixed) {
      auto [u, v] = f.edge;
      if (u < 0 || v < 0 || u >= order || v >= order || u == v) {
        throw std::invalid_argument("fixed edge (" + std::to_string(u) + ", " + std::to_string(v) + ") invalid");
      }
      if (root_.color(u, v)) {
        throw std::invalid_argument("fixed edge (" + std::to_string(u) + ", " + std::to_string(v) + ") repeated");
      }
      root_.set(u, v, f.color);
    }
    for (int u = 0; u < order; ++u) {
      for (int v = u + 1; v < order; ++v) {
        if (!root_.color(u, v)) edges_.emplace_back(u, v);
      }
    }
  }

  SymmetryScheme symmetry() const { return symmetry_; }
  const Coloring& root() const { return root_; }
  std::size_t depth() const { return edges_.size(); }

  /// Colors edge `idx` of `cur` with `c` unless a symmetry rule or a
  /// completed target forbids it; `cur` is unchanged on a cut.
  Step try_color(Coloring& cur, std::size_t idx, Color c) const {
    const auto [u, v] = edges_[idx];
    if (symmetry_ != SymmetryScheme::None && c == Color::Red && u == 0 && v >= 2 &&
        cur.has(0, v - 1, Color::Blue)) {
      return Step::SymmetryCut;
    }
    cur.set(u, v, c);
    if (symmetry_ == SymmetryScheme::FirstVertexMaxDegree && c == Color::Red && u >= 1) {
      const int cap = cur.degree(0, Color::Red);
      if (cur.degree(u, Color::Red) > cap || cur.degree(v, Color::Red) > cap) {
        cur.clear(u, v);
        return Step::SymmetryCut;
      }
    }
    if (edge_completes_target(cur, u, v, c, c == Color::Red ? targets_.red : targets_.blue)) {
      cur.clear(u, v);
      return Step::TargetCut;
    }
    return Step::Ok;
  }

  void undo(Coloring& cur, std::size_t idx) const { cur.clear(edges_[idx].first, edges_[idx].second); }

  struct Worker {
    explicit Worker(SearchControl& control) : meter(control) {}
    NodeMeter meter;
    std::uint64_t prunes = 0;
    std::uint64_t symmetry_prunes = 0;
  };

  /// Expands one node; false when the run must stop.
  bool step(Worker& w, Coloring& cur, std::size_t idx, Color c, const std::function<bool()>& below) const {
    const Step s = try_color(cur, idx, c);
    if (s == Step::SymmetryCut) {
      ++w.symmetry_prunes;
      return true;
    }
    if (!w.meter.tick()) {
      if (s == Step::Ok) undo(cur, idx);
      return false;
    }
    if (s == Step::TargetCut) {
      ++w.prunes;
      return true;
    }
    const bool go_on = below();
    undo(cur, idx);
    return go_on;
  }

  bool dfs(Worker& w, Coloring& cur, std::size_t idx, const LeafFn& leaf) const {
    if (idx == edges_.size()) return leaf(cur);
    for (Color c : kColors) {
      if (!step(w, cur, idx, c, [&] { return dfs(w, cur, idx + 1, leaf); })) return false;
    }
    return true;
  }

  /// Replays a prefix onto `cur`; false if any step is cut.
  bool replay(Coloring& cur, const std::string& prefix) const {
    if (prefix.size() > edges_.size()) return false;
    for (std::size_t i = 0; i < prefix.size(); ++i) {
      if (try_color(cur, i, prefix[i] == 'R' ? Color::Red : Color::Blue) != Step::Ok) return false;
    }
    return true;
  }

  /// Level-by-level expansion from `start` until at least `want` prefixes
  /// exist or the tree bottoms out. Order matches depth-first order. On an
  /// abort the returned frontier still covers every unexplored subtree.
  std::vector<std::string> expand(Worker& w, std::vector<std::string> level, std::size_t want) const {
    std::size_t depth = level.empty() ? 0 : level.front().size();
    bool same_depth = true;
    for (const auto& p : level) same_depth = same_depth && p.size() == depth;
    if (!same_depth) return level;

    while (!level.empty() && level.size() < want && depth < edges_.size()) {
      std::vector<std::string> next;
      for (std::size_t i = 0; i < level.size(); ++i) {
        Coloring cur = root_;
        if (!replay(cur, level[i])) throw std::logic_error("frontier prefix no longer valid");
        bool stop = false;
        for (Color c : kColors) {
          if (!step(w, cur, depth, c, [&] {
                next.push_back(level[i] + to_char(c));
                return true;
              })) {
            stop = true;
            break;
          }
        }
        if (stop) {
          // Re-queue this prefix whole (its children may be half pushed).
          while (!next.empty() && next.back().size() == depth + 1 &&
                 next.back().compare(0, depth, level[i]) == 0) {
            next.pop_back();
          }
          next.push_back(level[i]);
          next.insert(next.end(), level.begin() + static_cast<std::ptrdiff_t>(i) + 1, level.end());
          return next;
        }
      }
      level = std::move(next);
      ++depth;
    }
    return level;
  }

 private:
  int order_;
  TargetPair targets_;
  SymmetryScheme symmetry_;
  Coloring root_;
  std::vector<Edge> edges_;
};

struct RunResult {
  SearchStatus status = SearchStatus::Exhausted;
  SearchStats stats;
  std::vector<std::string> unexplored;
};

// Shared driver for search and enumeration: builds (or loads) a frontier and
// runs the subtrees on a work-stealing pool. `leaf` returns false to stop.
RunResult run_search(const EdgeSearch& search, const TargetPair& t, int order, const SearchOptions& opts,
                     const std::function<bool(const Coloring&)>& leaf) {
  SearchControl control(opts.budget);
  const unsigned workers = std::max(1u, opts.threads);
  RunResult result;
  result.stats.symmetry = std::string(to_string(search.symmetry()));
  result.stats.workers = workers;

  std::vector<std::string> frontier;
  std::uint64_t prunes = 0;
  std::uint64_t sym_prunes = 0;
  const CheckpointHeader header{order, t, search.symmetry()};

  if (is_free(search.root(), t).free) {
    if (opts.resume_from) {
      auto [h, prefixes] = read_checkpoint(*opts.resume_from);
      if (!(h == header)) throw std::runtime_error("checkpoint header does not match this search");
      for (const auto& p : prefixes) {
        Coloring cur = search.root();
        if (!search.replay(cur, p)) throw std::runtime_error("checkpoint prefix '" + p + "' is not a valid prefix");
      }
      frontier = std::move(prefixes);
    } else {
      EdgeSearch::Worker w(control);
      frontier = search.expand(w, {std::string{}}, 64u * workers);
      w.meter.flush();
      prunes += w.prunes;
      sym_prunes += w.symmetry_prunes;
    }
  }
  result.stats.tasks = frontier.size();

  std::vector<char> done(frontier.size(), 0);
  std::mutex leaf_mutex;
  bool leaf_stopped = false;
  std::mutex stats_mutex;

  if (!control.stopped()) {
    TaskPool pool(frontier.size(), workers);
    run_workers(workers, [&](unsigned id) {
      EdgeSearch::Worker w(control);
      LeafFn guarded_leaf = [&](const Coloring& c) {
        std::lock_guard lock(leaf_mutex);
        if (leaf_stopped) return false;
        if (!leaf(c)) {
          leaf_stopped = true;
          control.request_stop();
          return false;
        }
        return true;
      };
      while (!control.stopped()) {
        const auto task = pool.acquire(id);
        if (!task) break;
        Coloring cur = search.root();
        const std::string& prefix = frontier[*task];
        if (!search.replay(cur, prefix)) throw std::logic_error("frontier prefix rejected on replay");
        if (search.dfs(w, cur, prefix.size(), guarded_leaf)) done[*task] = 1;
      }
      w.meter.flush();
      std::lock_guard lock(stats_mutex);
      prunes += w.prunes;
      sym_prunes += w.symmetry_prunes;
    });
  }

  result.stats.nodes = control.nodes();
  result.stats.prunes = prunes;
  result.stats.symmetry_prunes = sym_prunes;
  result.stats.elapsed_seconds = control.elapsed_seconds();
  if (leaf_stopped) {
    result.status = SearchStatus::WitnessFound;
  } else if (control.aborted()) {
    result.status = SearchStatus::Aborted;
    for (std::size_t i = 0; i < frontier.size(); ++i) {
      if (!done[i]) result.unexplored.push_back(frontier[i]);
    }
    if (opts.checkpoint_out) write_checkpoint(*opts.checkpoint_out, header, result.unexplored);
  } else {
    result.status = SearchStatus::Exhausted;
  }
  return result;
}

}  // namespace

SearchOutcome search_free_coloring(int order, const TargetPair& t, const SearchOptions& opts) {
  if (order < 1) throw std::invalid_argument("search order must be >= 1");
  EdgeSearch search(order, t, opts.symmetry, {});
  std::optional<ColoredGraph> witness;
  auto run = run_search(search, t, order, opts, [&](const Coloring& c) {
    ColoredGraph g = ColoredGraph::from_coloring(c);
    if (!is_free(g, t).free) throw std::logic_error("search produced a coloring that is not free");
    witness = std::move(g);
    return false;
  });
  return {run.status, std::move(witness), std::move(run.stats)};
}

SearchOutcome enumerate_free_colorings(int order, const TargetPair& t, const std::vector<FixedEdge>& fixed,
                                       const SearchOptions& opts,
                                       const std::function<bool(const ColoredGraph&)>& visit) {
  if (order < 1) throw std::invalid_argument("search order must be >= 1");
  SearchOptions o = opts;
  if (!fixed.empty()) o.symmetry = SymmetryScheme::None;
  EdgeSearch search(order, t, o.symmetry, fixed);
  auto run = run_search(search, t, order, o, [&](const Coloring& c) { return visit(ColoredGraph::from_coloring(c)); });
  return {run.status, std::nullopt, std::move(run.stats)};
}

RamseyReport verify_ramsey_number(const TargetPair& t, int claimed_r, const SearchOptions& opts) {
  if (claimed_r < 2) throw std::invalid_argument("claimed Ramsey number must be >= 2");
  SearchOptions o = opts;
  o.checkpoint_out.reset();
  o.resume_from.reset();

  RamseyReport report{t, claimed_r, {}, {}};
  report.lower.order = claimed_r - 1;
  report.lower.expected = SearchStatus::WitnessFound;
  report.lower.outcome = search_free_coloring(report.lower.order, t, o);
  switch (report.lower.outcome.status) {
    case SearchStatus::WitnessFound: report.lower.verdict = Verdict::Verified; break;
    case SearchStatus::Exhausted: report.lower.verdict = Verdict::Refuted; break;
    case SearchStatus::Aborted: report.lower.verdict = Verdict::Inconclusive; break;
  }

  report.upper.order = claimed_r;
  report.upper.expected = SearchStatus::Exhausted;
  report.upper.outcome = search_free_coloring(report.upper.order, t, o);
  switch (report.upper.outcome.status) {
    case SearchStatus::WitnessFound: report.upper.verdict = Verdict::Refuted; break;
    case SearchStatus::Exhausted: report.upper.verdict = Verdict::Verified; break;
    case SearchStatus::Aborted: report.upper.verdict = Verdict::Inconclusive; break;
  }
  return report;
}

}  // namespace ramsey
