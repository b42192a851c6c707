#include "ramsey/star_search.hpp"

#include <atomic>
#include <mutex>
#include <stdexcept>
#include <string>

#include "ramsey/detectors.hpp"

namespace ramsey {

std::optional<std::vector<VertexSet>> detect_red_blocks(const ColoredGraph& base, const TargetPair& t) {
  if (t.red.kind != Target::Kind::Fan) return std::nullopt;
  const int n = base.order();
  for (int size = n; size >= 2 * t.red.size && size >= 2; --size) {
    if (n % size != 0) continue;
    if (auto blocks = partition_into_cliques(base.view(), Color::Red, size, base.view().vertices())) return blocks;
  }
  return std::nullopt;
}

namespace {

// One star-edge decision per base vertex, in index order.
constexpr char kChoices[3] = {'B', 'R', '-'};

class StarSearch {
 public:
  enum class Mode { Find, Maximize };

  StarSearch(const ColoredGraph& base, const TargetPair& t, Mode mode, int k, bool structural)
      : base_(base), targets_(t), mode_(mode), k_(k), root_(StarColoredGraph(base).view()) {
    if (structural) {
      if (auto blocks = detect_red_blocks(base, t)) {
        block_of_.assign(static_cast<std::size_t>(base.order()), -1);
        for (std::size_t b = 0; b < blocks->size(); ++b) {
          (*blocks)[b].for_each([&](int v) { block_of_[static_cast<std::size_t>(v)] = static_cast<int>(b); });
        }
      }
    }
  }

  bool uses_blocks() const { return !block_of_.empty(); }
  int order() const { return base_.order(); }
  const Coloring& root() const { return root_; }

  struct Worker {
    explicit Worker(SearchControl& control) : meter(control) {}
    NodeMeter meter;
    std::uint64_t prunes = 0;
    std::uint64_t structural_prunes = 0;
  };

  struct Shared {
    std::atomic<int> best{-1};
    std::mutex mutex;
    std::optional<StarColoredGraph> witness;
  };

  /// Applies choice `ch` for vertex v. Returns 0 on success, 1 on a
  /// structural cut, 2 on a detector cut; `cur` and `red_mask` are only
  /// changed on success.
  int apply(Coloring& cur, int v, char ch, std::uint64_t& red_mask) const {
    if (ch == '-') return 0;
    const Color c = ch == 'R' ? Color::Red : Color::Blue;
    std::uint64_t bit = 0;
    if (c == Color::Red && uses_blocks()) {
      bit = std::uint64_t{1} << block_of_[static_cast<std::size_t>(v)];
      if (red_mask & bit) return 1;
    }
    const int w = order();
    cur.set(v, w, c);
    if (edge_completes_target(cur, v, w, c, c == Color::Red ? targets_.red : targets_.blue)) {
      cur.clear(v, w);
      return 2;
    }
    red_mask |= bit;
    return 0;
  }

  bool replay(Coloring& cur, const std::string& prefix, int& present, std::uint64_t& red_mask) const {
    for (std::size_t i = 0; i < prefix.size(); ++i) {
      if (apply(cur, static_cast<int>(i), prefix[i], red_mask) != 0) return false;
      present += prefix[i] != '-';
    }
    return true;
  }

  /// False when the run must stop.
  bool dfs(Worker& wk, Shared& shared, SearchControl& control, Coloring& cur, int v, int present,
           std::uint64_t red_mask) const {
    if (mode_ == Mode::Find && present > k_) return true;
    if (mode_ == Mode::Find && present == k_) {
      record(shared, cur, present);
      control.request_stop();
      return false;
    }
    if (mode_ == Mode::Maximize && present > shared.best.load(std::memory_order_relaxed)) record(shared, cur, present);
    const int n = order();
    if (v == n) return true;
    const int reachable = present + (n - v);
    if (mode_ == Mode::Find && reachable < k_) return true;
    if (mode_ == Mode::Maximize && reachable <= shared.best.load(std::memory_order_relaxed)) return true;

    for (char ch : kChoices) {
      std::uint64_t mask = red_mask;
      const int r = apply(cur, v, ch, mask);
      if (r == 1) {
        ++wk.structural_prunes;
        continue;
      }
      if (!wk.meter.tick()) {
        if (r == 0 && ch != '-') cur.clear(v, order());
        return false;
      }
      if (r == 2) {
        ++wk.prunes;
        continue;
      }
      const bool go_on = dfs(wk, shared, control, cur, v + 1, present + (ch != '-'), mask);
      if (ch != '-') cur.clear(v, order());
      if (!go_on) return false;
    }
    return true;
  }

  std::vector<std::string> expand(Worker& wk, std::size_t want) const {
    std::vector<std::string> level{std::string{}};
    std::size_t depth = 0;
    while (level.size() < want && depth < static_cast<std::size_t>(order())) {
      std::vector<std::string> next;
      for (std::size_t i = 0; i < level.size(); ++i) {
        Coloring cur = root_;
        int present = 0;
        std::uint64_t mask = 0;
        if (!replay(cur, level[i], present, mask)) throw std::logic_error("star frontier prefix rejected");
        for (char ch : kChoices) {
          std::uint64_t m = mask;
          const int r = apply(cur, static_cast<int>(depth), ch, m);
          if (r == 1) {
            ++wk.structural_prunes;
            continue;
          }
          if (!wk.meter.tick()) {
            // Out of budget while splitting; the caller reports Aborted.
            return {};
          }
          if (r == 2) {
            ++wk.prunes;
            continue;
          }
          if (ch != '-') cur.clear(static_cast<int>(depth), order());
          next.push_back(level[i] + ch);
        }
      }
      level = std::move(next);
      ++depth;
    }
    return level;
  }

  StarColoredGraph to_graph(const Coloring& cur) const {
    StarColoredGraph g(base_);
    for (int v = 0; v < order(); ++v) g.set_star_edge(v, cur.color(v, order()));
    return g;
  }

 private:
  void record(Shared& shared, const Coloring& cur, int present) const {
    std::lock_guard lock(shared.mutex);
    if (mode_ == Mode::Maximize && present <= shared.best.load()) return;
    if (mode_ == Mode::Find && shared.witness) return;
    StarColoredGraph g = to_graph(cur);
    if (!is_free(g, targets_).free) throw std::logic_error("star search produced a non-free extension");
    shared.witness = std::move(g);
    shared.best.store(present);
  }

  const ColoredGraph& base_;
  TargetPair targets_;
  Mode mode_;
  int k_;
  Coloring root_;
  std::vector<int> block_of_;
};

struct StarRun {
  SearchStatus status = SearchStatus::Exhausted;
  std::optional<StarColoredGraph> witness;
  int best = -1;
  SearchStats stats;
};

StarRun run_star(const StarSearch& search, const StarSearchOptions& opts, StarSearch::Shared& shared) {
  SearchControl control(opts.budget);
  const unsigned workers = std::max(1u, opts.threads);
  StarRun out;
  out.stats.symmetry = search.uses_blocks() ? "red-blocks" : "none";
  out.stats.workers = workers;

  std::uint64_t prunes = 0;
  std::uint64_t structural = 0;
  std::vector<std::string> frontier;
  {
    StarSearch::Worker wk(control);
    frontier = search.expand(wk, 64u * workers);
    wk.meter.flush();
    prunes += wk.prunes;
    structural += wk.structural_prunes;
  }
  out.stats.tasks = frontier.size();

  std::mutex stats_mutex;
  if (!control.stopped()) {
    TaskPool pool(frontier.size(), workers);
    run_workers(workers, [&](unsigned id) {
      StarSearch::Worker wk(control);
      while (!control.stopped()) {
        const auto task = pool.acquire(id);
        if (!task) break;
        Coloring cur = search.root();
        int present = 0;
        std::uint64_t mask = 0;
        if (!search.replay(cur, frontier[*task], present, mask)) throw std::logic_error("star prefix rejected");
        search.dfs(wk, shared, control, cur, static_cast<int>(frontier[*task].size()), present, mask);
      }
      wk.meter.flush();
      std::lock_guard lock(stats_mutex);
      prunes += wk.prunes;
      structural += wk.structural_prunes;
    });
  }

  out.stats.nodes = control.nodes();
  out.stats.prunes = prunes;
  out.stats.symmetry_prunes = structural;
  out.stats.elapsed_seconds = control.elapsed_seconds();
  out.witness = shared.witness;
  out.best = shared.best.load();
  out.status = control.aborted() ? SearchStatus::Aborted : SearchStatus::Exhausted;
  return out;
}

void require_free_base(const ColoredGraph& base, const TargetPair& t) {
  if (!is_free(base, t).free) throw std::invalid_argument("base coloring is not free for the given targets");
}

}  // namespace

StarOutcome search_star_free(const ColoredGraph& base, int k, const TargetPair& t, const StarSearchOptions& opts) {
  if (k < 0 || k > base.order()) {
    throw std::invalid_argument("star degree " + std::to_string(k) + " outside [0, " + std::to_string(base.order()) +
                                "]");
  }
  require_free_base(base, t);
  StarSearch search(base, t, StarSearch::Mode::Find, k, opts.structural_prunes);
  StarSearch::Shared shared;
  auto run = run_star(search, opts, shared);
  StarOutcome out;
  out.stats = std::move(run.stats);
  if (run.witness) {
    out.status = SearchStatus::WitnessFound;
    out.witness = std::move(run.witness);
  } else {
    out.status = run.status;
  }
  return out;
}

ExtensionResult max_star_extension(const ColoredGraph& base, const TargetPair& t, const StarSearchOptions& opts) {
  require_free_base(base, t);
  StarSearch search(base, t, StarSearch::Mode::Maximize, 0, opts.structural_prunes);
  StarSearch::Shared shared;
  auto run = run_star(search, opts, shared);
  ExtensionResult out{run.status, 0, StarColoredGraph(base), std::move(run.stats)};
  if (run.witness) {
    out.max_k = run.best;
    out.witness = std::move(*run.witness);
  }
  return out;
}

}  // namespace ramsey
