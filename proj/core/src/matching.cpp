#include "ramsey/matching.hpp"

#include <algorithm>
#include <array>

namespace ramsey {

namespace {

// Edmonds' algorithm on a local relabelling 0..k-1 of the chosen vertex set.
class Blossom {
 public:
  Blossom(std::vector<VertexSet> adj)
      : k_(static_cast<int>(adj.size())), adj_(std::move(adj)), match_(k_, -1), parent_(k_), base_(k_), queue_(k_) {}

  int greedy() {
    int size = 0;
    for (int v = 0; v < k_; ++v) {
      if (match_[v] != -1) continue;
      VertexSet free_nbrs = adj_[v];
      for (int u = free_nbrs.first(); u >= 0; u = free_nbrs.next(u)) {
        if (match_[u] == -1) {
          match_[v] = u;
          match_[u] = v;
          ++size;
          break;
        }
      }
    }
    return size;
  }

  bool augment_from(int root) {
    const int end = find_path(root);
    if (end == -1) return false;
    for (int v = end; v != -1;) {
      const int pv = parent_[v];
      const int ppv = match_[pv];
      match_[v] = pv;
      match_[pv] = v;
      v = ppv;
    }
    return true;
  }

  int size() const { return k_; }
  int mate(int v) const { return match_[v]; }

 private:
  int lca(int a, int b) {
    VertexSet seen;
    while (true) {
      a = base_[a];
      seen.insert(a);
      if (match_[a] == -1) break;
      a = parent_[match_[a]];
    }
    while (true) {
      b = base_[b];
      if (seen.contains(b)) return b;
      b = parent_[match_[b]];
    }
  }

  void mark_path(int v, int b, int child, VertexSet& in_blossom) {
    while (base_[v] != b) {
      in_blossom.insert(base_[v]);
      in_blossom.insert(base_[match_[v]]);
      parent_[v] = child;
      child = match_[v];
      v = parent_[match_[v]];
    }
  }

  int find_path(int root) {
    VertexSet used;
    std::fill(parent_.begin(), parent_.end(), -1);
    for (int i = 0; i < k_; ++i) base_[i] = i;
    used.insert(root);
    int head = 0;
    int tail = 0;
    queue_[tail++] = root;
    while (head < tail) {
      const int v = queue_[head++];
      const VertexSet nbrs = adj_[v];
      for (int to = nbrs.first(); to >= 0; to = nbrs.next(to)) {
        if (base_[v] == base_[to] || match_[v] == to) continue;
        if (to == root || (match_[to] != -1 && parent_[match_[to]] != -1)) {
          const int cur_base = lca(v, to);
          VertexSet in_blossom;
          mark_path(v, cur_base, to, in_blossom);
          mark_path(to, cur_base, v, in_blossom);
          for (int i = 0; i < k_; ++i) {
            if (in_blossom.contains(base_[i])) {
              base_[i] = cur_base;
              if (!used.contains(i)) {
                used.insert(i);
                queue_[tail++] = i;
              }
            }
          }
        } else if (parent_[to] == -1) {
          parent_[to] = v;
          if (match_[to] == -1) return to;
          used.insert(match_[to]);
          queue_[tail++] = match_[to];
        }
      }
    }
    return -1;
  }

  int k_;
  std::vector<VertexSet> adj_;
  std::vector<int> match_;
  std::vector<int> parent_;
  std::vector<int> base_;
  std::vector<int> queue_;
};

}  // namespace

std::vector<Edge> maximum_matching(const Coloring& g, Color c, const VertexSet& within, int stop_at) {
  const std::vector<int> verts = within.to_vector();
  const int k = static_cast<int>(verts.size());
  if (k < 2 || stop_at <= 0) return {};

  std::array<int, kMaxVertices> local{};
  for (int i = 0; i < k; ++i) local[static_cast<std::size_t>(verts[i])] = i;
  std::vector<VertexSet> adj(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) {
    (g.neighbors(verts[i], c) & within).for_each([&](int u) { adj[i].insert(local[static_cast<std::size_t>(u)]); });
  }

  Blossom b(std::move(adj));
  int size = b.greedy();
  for (int v = 0; v < k && size < stop_at && size < k / 2; ++v) {
    if (b.mate(v) == -1 && b.augment_from(v)) ++size;
  }

  std::vector<Edge> out;
  for (int v = 0; v < k; ++v) {
    const int m = b.mate(v);
    if (m > v) out.emplace_back(verts[v], verts[m]);
  }
  if (static_cast<int>(out.size()) > stop_at) out.resize(static_cast<std::size_t>(stop_at));
  return out;
}

int matching_number(const Coloring& g, Color c, const VertexSet& within) {
  return static_cast<int>(maximum_matching(g, c, within).size());
}

}  // namespace ramsey
