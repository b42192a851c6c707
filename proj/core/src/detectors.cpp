#include "ramsey/detectors.hpp"

#include <algorithm>
#include <numeric>

#include "ramsey/matching.hpp"

namespace ramsey {

namespace {

// Bitset branch and bound maximum clique in a relabelled "position space"
// where position order is the branching order.
class CliqueSearch {
 public:
  CliqueSearch(const Coloring& g, Color c, const VertexSet& within, int target)
      : target_(target) {
    order_ = within.to_vector();
    std::stable_sort(order_.begin(), order_.end(), [&](int a, int b) {
      return (g.neighbors(a, c) & within).size() > (g.neighbors(b, c) & within).size();
    });
    std::array<int, kMaxVertices> pos{};
    for (std::size_t i = 0; i < order_.size(); ++i) pos[static_cast<std::size_t>(order_[i])] = static_cast<int>(i);
    adj_.resize(order_.size());
    for (std::size_t i = 0; i < order_.size(); ++i) {
      (g.neighbors(order_[i], c) & within).for_each([&](int u) { adj_[i].insert(pos[static_cast<std::size_t>(u)]); });
    }
  }

  /// Best clique found; stops as soon as one of size `target` is seen.
  /// `floor` is the size a clique must exceed to be recorded.
  std::vector<int> run(int floor) {
    floor_ = floor;
    if (!order_.empty()) expand(VertexSet::range(0, static_cast<int>(order_.size())));
    std::vector<int> out;
    for (int p : best_) out.push_back(order_[static_cast<std::size_t>(p)]);
    std::sort(out.begin(), out.end());
    return out;
  }

 private:
  int bound() const { return std::max(floor_, static_cast<int>(best_.size())); }

  void expand(VertexSet cand) {
    std::array<int, kMaxVertices> verts;
    std::array<int, kMaxVertices> colors;
    int count = 0;
    VertexSet uncolored = cand;
    int color = 0;
    while (!uncolored.empty()) {
      ++color;
      VertexSet q = uncolored;
      while (!q.empty()) {
        const int v = q.first();
        q.erase(v);
        q -= adj_[static_cast<std::size_t>(v)];
        uncolored.erase(v);
        verts[static_cast<std::size_t>(count)] = v;
        colors[static_cast<std::size_t>(count)] = color;
        ++count;
      }
    }
    for (int i = count - 1; i >= 0; --i) {
      if (static_cast<int>(current_.size()) + colors[static_cast<std::size_t>(i)] <= bound()) return;
      const int v = verts[static_cast<std::size_t>(i)];
      current_.push_back(v);
      const VertexSet next = cand & adj_[static_cast<std::size_t>(v)];
      if (next.empty()) {
        if (static_cast<int>(current_.size()) > bound()) best_ = current_;
      } else {
        expand(next);
      }
      if (static_cast<int>(best_.size()) >= target_) return;
      current_.pop_back();
      cand.erase(v);
    }
  }

  int target_;
  int floor_ = 0;
  std::vector<int> order_;
  std::vector<VertexSet> adj_;
  std::vector<int> current_;
  std::vector<int> best_;
};

// Lexicographic DFS for a `size`-clique: candidates are tried in ascending
// order, so the first clique found is the lexicographically least one.
bool lex_clique_dfs(const Coloring& g, Color c, int size, VertexSet cand, std::vector<int>& current) {
  if (static_cast<int>(current.size()) == size) return true;
  for (int v = cand.first(); v >= 0; v = cand.next(v)) {
    if (static_cast<int>(current.size()) + cand.size() < size) return false;
    current.push_back(v);
    VertexSet next = cand & g.neighbors(v, c);
    next -= VertexSet::range(0, v + 1);
    if (lex_clique_dfs(g, c, size, next, current)) return true;
    current.pop_back();
    cand.erase(v);
  }
  return false;
}

bool partition_dfs(const Coloring& g, Color c, int size, VertexSet rest, std::vector<VertexSet>& out) {
  if (rest.empty()) return true;
  const int root = rest.first();
  const VertexSet cand = (g.neighbors(root, c) & rest);
  if (cand.size() < size - 1) return false;

  // Enumerate all (size-1)-cliques of cand in lexicographic order.
  std::vector<int> current;
  bool found = false;
  auto rec = [&](auto&& self, VertexSet pool) -> void {
    if (found) return;
    if (static_cast<int>(current.size()) == size - 1) {
      VertexSet block = VertexSet::of({root});
      for (int v : current) block.insert(v);
      out.push_back(block);
      if (partition_dfs(g, c, size, rest - block, out)) {
        found = true;
        return;
      }
      out.pop_back();
      return;
    }
    for (int v = pool.first(); v >= 0; v = pool.next(v)) {
      if (static_cast<int>(current.size()) + pool.size() < size - 1) return;
      current.push_back(v);
      VertexSet next = pool & g.neighbors(v, c);
      next -= VertexSet::range(0, v + 1);
      self(self, next);
      if (found) return;
      current.pop_back();
      pool.erase(v);
    }
  };
  rec(rec, cand);
  return found;
}

// Parent-pointer path from v up to (and including) the BFS root.
std::vector<int> path_to_root(const std::vector<int>& parent, int v) {
  std::vector<int> out;
  for (; v != -1; v = parent[static_cast<std::size_t>(v)]) out.push_back(v);
  return out;
}

// Closes the BFS-tree paths of an intra-level edge (x, y) into a cycle.
std::vector<int> cycle_through(const std::vector<int>& parent, int x, int y) {
  std::vector<int> px = path_to_root(parent, x);
  std::vector<int> py = path_to_root(parent, y);
  // Drop the common tail above the lowest common ancestor.
  while (px.size() >= 2 && py.size() >= 2 && px[px.size() - 2] == py[py.size() - 2]) {
    px.pop_back();
    py.pop_back();
  }
  // Both now end at the lowest common ancestor: LCA ... x, then y ... back
  // to the LCA's other child.
  std::vector<int> out(px.rbegin(), px.rend());
  for (std::size_t i = 0; i + 1 < py.size(); ++i) out.push_back(py[i]);
  return out;
}

}  // namespace

std::optional<Witness> find_clique(const Coloring& g, Color c, int r) {
  return find_clique(g, c, r, g.vertices());
}

std::optional<Witness> find_clique(const Coloring& g, Color c, int r, const VertexSet& within) {
  if (r <= 0) return Witness::clique(c, {});
  if (within.size() < r) return std::nullopt;
  CliqueSearch search(g, c, within, r);
  auto found = search.run(r - 1);
  if (static_cast<int>(found.size()) < r) return std::nullopt;
  found.resize(static_cast<std::size_t>(r));
  return Witness::clique(c, std::move(found));
}

std::vector<int> maximum_clique(const Coloring& g, Color c, const VertexSet& within) {
  CliqueSearch search(g, c, within, kMaxVertices + 1);
  return search.run(0);
}

int clique_number(const Coloring& g, Color c) {
  return static_cast<int>(maximum_clique(g, c, g.vertices()).size());
}

std::optional<std::vector<int>> lex_least_clique(const Coloring& g, Color c, int size, const VertexSet& within) {
  std::vector<int> current;
  if (size <= 0) return current;
  if (lex_clique_dfs(g, c, size, within, current)) return current;
  return std::nullopt;
}

std::optional<std::vector<VertexSet>> partition_into_cliques(const Coloring& g, Color c, int size,
                                                             const VertexSet& within) {
  if (size <= 0 || within.size() % size != 0) return std::nullopt;
  std::vector<VertexSet> out;
  if (partition_dfs(g, c, size, within, out)) return out;
  return std::nullopt;
}

std::optional<Witness> find_matching(const Coloring& g, Color c, int m) {
  return find_matching(g, c, m, g.vertices());
}

std::optional<Witness> find_matching(const Coloring& g, Color c, int m, const VertexSet& within) {
  auto edges = maximum_matching(g, c, within, m);
  if (static_cast<int>(edges.size()) < m) return std::nullopt;
  return Witness::matching(c, std::move(edges));
}

std::optional<Witness> find_fan(const Coloring& g, Color c, int n) {
  for (int v = 0; v < g.order(); ++v) {
    const VertexSet& nbrs = g.neighbors(v, c);
    if (nbrs.size() < 2 * n) continue;
    auto edges = maximum_matching(g, c, nbrs, n);
    if (static_cast<int>(edges.size()) >= n) return Witness::fan(c, v, edges);
  }
  return std::nullopt;
}

std::optional<Witness> find_target(const Coloring& g, Color c, const Target& t) {
  switch (t.kind) {
    case Target::Kind::Fan: return find_fan(g, c, t.size);
    case Target::Kind::Matching: return find_matching(g, c, t.size);
    case Target::Kind::Clique: return find_clique(g, c, t.size);
  }
  return std::nullopt;
}

BipartiteResult is_bipartite(const Coloring& g, Color c, const VertexSet& within) {
  BipartiteResult res;
  std::vector<int> side(static_cast<std::size_t>(g.order()), -1);
  std::vector<int> parent(static_cast<std::size_t>(g.order()), -1);
  std::vector<int> queue;
  for (int root = within.first(); root >= 0; root = within.next(root)) {
    if (side[static_cast<std::size_t>(root)] != -1) continue;
    side[static_cast<std::size_t>(root)] = 0;
    queue.assign(1, root);
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const int v = queue[head];
      const VertexSet nbrs = g.neighbors(v, c) & within;
      for (int u = nbrs.first(); u >= 0; u = nbrs.next(u)) {
        auto& su = side[static_cast<std::size_t>(u)];
        if (su == -1) {
          su = 1 - side[static_cast<std::size_t>(v)];
          parent[static_cast<std::size_t>(u)] = v;
          queue.push_back(u);
        } else if (su == side[static_cast<std::size_t>(v)]) {
          res.bipartite = false;
          res.odd_cycle = Witness::odd_cycle(c, cycle_through(parent, v, u));
          res.parts = {};
          return res;
        }
      }
    }
  }
  for (int v = within.first(); v >= 0; v = within.next(v)) res.parts[side[static_cast<std::size_t>(v)]].insert(v);
  return res;
}

std::optional<Witness> shortest_odd_cycle(const Coloring& g, Color c, const VertexSet& within) {
  const std::size_t n = static_cast<std::size_t>(g.order());
  std::vector<int> dist(n);
  std::vector<int> parent(n);
  std::vector<int> queue;

  int best_len = 0;
  int best_root = -1;
  Edge best_edge{-1, -1};

  // BFS from each root; the first intra-level edge gives that root's
  // shortest odd closed walk, and the global minimum is a simple cycle.
  auto bfs = [&](int root, int cutoff, Edge& edge) -> int {
    std::fill(dist.begin(), dist.end(), -1);
    std::fill(parent.begin(), parent.end(), -1);
    dist[static_cast<std::size_t>(root)] = 0;
    queue.assign(1, root);
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const int v = queue[head];
      const int dv = dist[static_cast<std::size_t>(v)];
      if (cutoff > 0 && 2 * dv + 1 >= cutoff) return 0;
      const VertexSet nbrs = g.neighbors(v, c) & within;
      for (int u = nbrs.first(); u >= 0; u = nbrs.next(u)) {
        const int du = dist[static_cast<std::size_t>(u)];
        if (du == -1) {
          dist[static_cast<std::size_t>(u)] = dv + 1;
          parent[static_cast<std::size_t>(u)] = v;
          queue.push_back(u);
        } else if (du == dv) {
          edge = {v, u};
          return 2 * dv + 1;
        }
      }
    }
    return 0;
  };

  for (int root = within.first(); root >= 0 && best_len != 3; root = within.next(root)) {
    Edge e;
    const int len = bfs(root, best_len, e);
    if (len > 0 && (best_len == 0 || len < best_len)) {
      best_len = len;
      best_root = root;
      best_edge = e;
    }
  }
  if (best_len == 0) return std::nullopt;

  Edge e;
  bfs(best_root, 0, e);
  return Witness::odd_cycle(c, cycle_through(parent, best_edge.first, best_edge.second));
}

FreeResult is_free(const Coloring& g, const TargetPair& t) {
  if (auto w = find_target(g, Color::Red, t.red)) return {false, std::move(w)};
  if (auto w = find_target(g, Color::Blue, t.blue)) return {false, std::move(w)};
  return {true, std::nullopt};
}

FreeResult is_free(const ColoredGraph& g, const TargetPair& t) { return is_free(g.view(), t); }

FreeResult is_free(const StarColoredGraph& g, const TargetPair& t) { return is_free(g.view(), t); }

}  // namespace ramsey
