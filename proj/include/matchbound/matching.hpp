#pragma once

#include <algorithm>
#include <numeric>
#include <optional>
#include <vector>

#include "matchbound/errors.hpp"
#include "matchbound/graph.hpp"

namespace matchbound {

// Walk whose edges alternate between matching and non-matching edges.
// matched[i] says whether the edge vertices[i]-vertices[i+1] lies in the
// matching; a single vertex with no edges is a valid alternating path.
struct AlternatingPath {
  std::vector<int> vertices;
  std::vector<bool> matched;

  int edge_length() const { return static_cast<int>(matched.size()); }
};

// Alternating path of odd edge count between two unsaturated vertices.
struct AugmentingPath : AlternatingPath {};

inline bool is_matching(const Graph& g, const Matching& m) {
  if (m.n() != g.n()) return false;
  for (const Edge& e : m.edges())
    if (!g.has_edge(e.u, e.v)) return false;
  return true;
}

inline bool is_alternating_path(const Graph& g, const Matching& m,
                                const AlternatingPath& p) {
  const auto& vs = p.vertices;
  if (vs.empty()) return false;
  if (p.matched.size() + 1 != vs.size()) return false;
  std::vector<int> seen(vs);
  std::sort(seen.begin(), seen.end());
  if (std::adjacent_find(seen.begin(), seen.end()) != seen.end()) return false;
  for (int v : vs)
    if (v < 0 || v >= g.n()) return false;
  for (std::size_t i = 0; i + 1 < vs.size(); ++i) {
    if (!g.has_edge(vs[i], vs[i + 1])) return false;
    bool in_m = m.contains(Edge(vs[i], vs[i + 1]));
    if (in_m != static_cast<bool>(p.matched[i])) return false;
    if (i > 0 && p.matched[i] == p.matched[i - 1]) return false;
  }
  return true;
}

inline bool is_augmenting_path(const Graph& g, const Matching& m,
                               const AlternatingPath& p) {
  if (!is_alternating_path(g, m, p)) return false;
  if (p.edge_length() % 2 == 0) return false;
  if (m.covers(p.vertices.front()) || m.covers(p.vertices.back())) return false;
  return !p.matched.front() && !p.matched.back();
}

namespace detail {

// One augmenting-path search: grows an alternating tree from a root,
// contracting odd cycles (blossoms) as they appear. Neighbor scans are
// ascending, so results are deterministic.
class AugmentSearch {
 public:
  explicit AugmentSearch(const Graph& g)
      : g_(g),
        n_(g.n()),
        parent_(static_cast<std::size_t>(n_), -1),
        base_(static_cast<std::size_t>(n_), 0),
        used_(static_cast<std::size_t>(n_), 0),
        blossom_(static_cast<std::size_t>(n_), 0) {}

  // Returns an unsaturated vertex whose parent chain reaches the root,
  // or -1 when no augmenting path from root exists.
  int search(const std::vector<int>& mate, int root) {
    std::fill(parent_.begin(), parent_.end(), -1);
    std::fill(used_.begin(), used_.end(), 0);
    std::iota(base_.begin(), base_.end(), 0);
    used_[root] = 1;
    queue_.clear();
    queue_.push_back(root);
    for (std::size_t qi = 0; qi < queue_.size(); ++qi) {
      int v = queue_[qi];
      for (int to : g_.neighbors(v)) {
        if (base_[v] == base_[to] || mate[v] == to) continue;
        if (to == root || (mate[to] != -1 && parent_[mate[to]] != -1)) {
          int cur_base = lca(mate, v, to);
          std::fill(blossom_.begin(), blossom_.end(), 0);
          mark_path(mate, v, cur_base, to);
          mark_path(mate, to, cur_base, v);
          for (int i = 0; i < n_; ++i) {
            if (blossom_[base_[i]]) {
              base_[i] = cur_base;
              if (!used_[i]) {
                used_[i] = 1;
                queue_.push_back(i);
              }
            }
          }
        } else if (parent_[to] == -1) {
          parent_[to] = v;
          if (mate[to] == -1) return to;
          used_[mate[to]] = 1;
          queue_.push_back(mate[to]);
        }
      }
    }
    return -1;
  }

  const std::vector<int>& parents() const { return parent_; }

 private:
  int lca(const std::vector<int>& mate, int a, int b) {
    std::vector<char> on_path(static_cast<std::size_t>(n_), 0);
    int u = a;
    while (true) {
      u = base_[u];
      on_path[u] = 1;
      if (mate[u] == -1) break;
      u = parent_[mate[u]];
    }
    int w = b;
    while (true) {
      w = base_[w];
      if (on_path[w]) return w;
      w = parent_[mate[w]];
    }
  }

  void mark_path(const std::vector<int>& mate, int v, int b, int child) {
    while (base_[v] != b) {
      blossom_[base_[v]] = 1;
      blossom_[base_[mate[v]]] = 1;
      parent_[v] = child;
      child = mate[v];
      v = parent_[mate[v]];
    }
  }

  const Graph& g_;
  int n_;
  std::vector<int> parent_;
  std::vector<int> base_;
  std::vector<char> used_;
  std::vector<char> blossom_;
  std::vector<int> queue_;
};

inline std::vector<int> mate_array(const Matching& m) {
  std::vector<int> mate(static_cast<std::size_t>(m.n()));
  for (int v = 0; v < m.n(); ++v) mate[v] = m.mate(v);
  return mate;
}

inline Matching matching_from_mates(const std::vector<int>& mate) {
  std::vector<Edge> edges;
  for (int v = 0; v < static_cast<int>(mate.size()); ++v)
    if (mate[v] > v) edges.emplace_back(v, mate[v]);
  return Matching(static_cast<int>(mate.size()), std::move(edges));
}

// Flip matched/unmatched along the parent chain from `endpoint` to the root.
inline void flip_augmenting_chain(std::vector<int>& mate,
                                  const std::vector<int>& parent, int endpoint) {
  int v = endpoint;
  while (v != -1) {
    int pv = parent[v];
    int ppv = mate[pv];
    mate[v] = pv;
    mate[pv] = v;
    v = ppv;
  }
}

// Vertex sequence from `endpoint` back to the tree root, alternating
// non-matching / matching; both ends are unsaturated.
inline std::vector<int> chain_vertices(const std::vector<int>& mate,
                                       const std::vector<int>& parent,
                                       int endpoint) {
  std::vector<int> verts;
  int cur = endpoint;
  while (true) {
    int pv = parent[cur];
    verts.push_back(cur);
    verts.push_back(pv);
    if (mate[pv] == -1) break;
    cur = mate[pv];
  }
  return verts;
}

}  // namespace detail

inline std::optional<AugmentingPath> find_augmenting_path(const Graph& g,
                                                          const Matching& m) {
  detail::require(is_matching(g, m), "matching does not fit the graph");
  std::vector<int> mate = detail::mate_array(m);
  detail::AugmentSearch searcher(g);
  for (int root = 0; root < g.n(); ++root) {
    if (mate[root] != -1) continue;
    int endpoint = searcher.search(mate, root);
    if (endpoint == -1) continue;
    AugmentingPath p;
    p.vertices = detail::chain_vertices(mate, searcher.parents(), endpoint);
    for (std::size_t i = 0; i + 1 < p.vertices.size(); ++i)
      p.matched.push_back(m.contains(Edge(p.vertices[i], p.vertices[i + 1])));
    detail::check(is_augmenting_path(g, m, p),
                  "augmenting-path search produced an invalid path");
    return p;
  }
  return std::nullopt;
}

inline Matching augment(const Matching& m, const AugmentingPath& p) {
  detail::require(p.edge_length() % 2 == 1 && !p.vertices.empty(),
                  "path must have odd edge count");
  detail::require(!m.covers(p.vertices.front()) && !m.covers(p.vertices.back()),
                  "path endpoints must be unsaturated");
  std::vector<int> mate = detail::mate_array(m);
  for (std::size_t i = 0; i + 1 < p.vertices.size(); ++i) {
    int a = p.vertices[i];
    int b = p.vertices[i + 1];
    bool in_m = m.contains(Edge(a, b));
    detail::require(in_m == static_cast<bool>(p.matched[i]),
                    "path flags disagree with the matching");
    detail::require(i % 2 == 0 ? !in_m : in_m, "path does not alternate");
    if (in_m) {
      mate[a] = -1;
      mate[b] = -1;
    }
  }
  for (std::size_t i = 0; i + 1 < p.vertices.size(); i += 2) {
    int a = p.vertices[i];
    int b = p.vertices[i + 1];
    detail::require(mate[a] == -1 && mate[b] == -1, "path revisits a vertex");
    mate[a] = b;
    mate[b] = a;
  }
  Matching out = detail::matching_from_mates(mate);
  detail::check(out.size() == m.size() + 1, "augmentation must grow the matching");
  return out;
}

inline Matching maximum_matching(const Graph& g) {
  std::vector<int> mate(static_cast<std::size_t>(g.n()), -1);
  for (int v = 0; v < g.n(); ++v) {
    if (mate[v] != -1) continue;
    for (int w : g.neighbors(v)) {
      if (mate[w] == -1) {
        mate[v] = w;
        mate[w] = v;
        break;
      }
    }
  }
  detail::AugmentSearch searcher(g);
  for (int root = 0; root < g.n(); ++root) {
    if (mate[root] != -1) continue;
    int endpoint = searcher.search(mate, root);
    if (endpoint != -1)
      detail::flip_augmenting_chain(mate, searcher.parents(), endpoint);
  }
  return detail::matching_from_mates(mate);
}

inline int matching_number(const Graph& g) { return maximum_matching(g).size(); }

// Branch-and-bound over edge subsets; independent of the search above.
inline Matching brute_force_maximum_matching(const Graph& g, int edge_cap = 24) {
  if (g.edge_count() > edge_cap)
    throw size_error("graph exceeds the brute-force edge cap");
  std::vector<Edge> all = g.edges();
  std::vector<char> free_vertex(static_cast<std::size_t>(g.n()), 1);
  std::vector<Edge> best;
  std::vector<Edge> cur;
  int free_count = g.n();
  auto rec = [&](auto&& self, std::size_t i) -> void {
    int slack = std::min(static_cast<int>(all.size() - i), free_count / 2);
    if (static_cast<int>(cur.size()) + slack <= static_cast<int>(best.size()))
      return;
    if (i == all.size()) {
      if (cur.size() > best.size()) best = cur;
      return;
    }
    const Edge& e = all[i];
    if (free_vertex[e.u] && free_vertex[e.v]) {
      free_vertex[e.u] = free_vertex[e.v] = 0;
      free_count -= 2;
      cur.push_back(e);
      self(self, i + 1);
      cur.pop_back();
      free_vertex[e.u] = free_vertex[e.v] = 1;
      free_count += 2;
    }
    self(self, i + 1);
  };
  rec(rec, 0);
  return Matching(g.n(), std::move(best));
}

}  // namespace matchbound
