#pragma once

#include <algorithm>
#include <compare>
#include <initializer_list>
#include <numeric>
#include <vector>

#include "matchbound/errors.hpp"

namespace matchbound {

// Undirected edge; endpoints are normalized so u < v.
struct Edge {
  int u = 0;
  int v = 1;

  Edge() = default;
  Edge(int a, int b) : u(a < b ? a : b), v(a < b ? b : a) {
    if (a == b) throw argument_error("edge endpoints must differ");
    if (a < 0 || b < 0) throw argument_error("negative vertex id");
  }

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

// Simple undirected graph on dense vertex ids 0..n-1.
// Adjacency lists are kept sorted ascending.
class Graph {
 public:
  Graph() = default;

  explicit Graph(int n) {
    detail::require_arg(n >= 0, "vertex count must be non-negative");
    adj_.resize(static_cast<std::size_t>(n));
  }

  static Graph from_edges(int n, const std::vector<Edge>& edges) {
    Graph g(n);
    for (const Edge& e : edges) g.add_edge(e.u, e.v);
    return g;
  }

  static Graph from_edges(int n, std::initializer_list<Edge> edges) {
    return from_edges(n, std::vector<Edge>(edges));
  }

  int n() const { return static_cast<int>(adj_.size()); }
  int edge_count() const { return edge_count_; }

  int degree(int v) const {
    check_vertex(v);
    return static_cast<int>(adj_[v].size());
  }

  int max_degree() const {
    int best = 0;
    for (const auto& row : adj_) best = std::max(best, static_cast<int>(row.size()));
    return best;
  }

  const std::vector<int>& neighbors(int v) const {
    check_vertex(v);
    return adj_[v];
  }

  bool has_edge(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    if (u == v) return false;
    return std::binary_search(adj_[u].begin(), adj_[u].end(), v);
  }

  void add_edge(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    detail::require_arg(u != v, "self-loop edge");
    detail::require_arg(!has_edge(u, v), "duplicate edge");
    insert_sorted(adj_[u], v);
    insert_sorted(adj_[v], u);
    ++edge_count_;
  }

  void remove_edge(int u, int v) {
    detail::require_arg(has_edge(u, v), "edge not present");
    erase_sorted(adj_[u], v);
    erase_sorted(adj_[v], u);
    --edge_count_;
  }

  // Appends `count` fresh isolated vertices; returns the first new id.
  int grow(int count) {
    detail::require_arg(count >= 0, "growth count must be non-negative");
    int first = n();
    adj_.resize(adj_.size() + static_cast<std::size_t>(count));
    return first;
  }

  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    out.reserve(static_cast<std::size_t>(edge_count_));
    for (int u = 0; u < n(); ++u)
      for (int w : adj_[u])
        if (u < w) out.emplace_back(u, w);
    return out;
  }

  std::vector<int> isolated_vertices() const {
    std::vector<int> out;
    for (int v = 0; v < n(); ++v)
      if (adj_[v].empty()) out.push_back(v);
    return out;
  }

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.adj_ == b.adj_;
  }

 private:
  void check_vertex(int v) const {
    detail::require_arg(v >= 0 && v < n(), "vertex id out of range");
  }

  static void insert_sorted(std::vector<int>& row, int x) {
    row.insert(std::lower_bound(row.begin(), row.end(), x), x);
  }

  static void erase_sorted(std::vector<int>& row, int x) {
    row.erase(std::lower_bound(row.begin(), row.end(), x));
  }

  std::vector<std::vector<int>> adj_;
  int edge_count_ = 0;
};

// Set of vertex-disjoint edges over a host vertex range.
// Disjointness and id range are enforced at construction; whether every edge
// actually belongs to a host graph is checked by is_matching(g, m).
class Matching {
 public:
  Matching() = default;

  Matching(int n, std::vector<Edge> match_edges) : mate_(static_cast<std::size_t>(n), -1) {
    detail::require_arg(n >= 0, "vertex count must be non-negative");
    std::sort(match_edges.begin(), match_edges.end());
    for (const Edge& e : match_edges) {
      detail::require_arg(e.v < n, "matching edge endpoint out of range");
      detail::require_arg(mate_[e.u] == -1 && mate_[e.v] == -1,
                          "matching edges must be vertex-disjoint");
      mate_[e.u] = e.v;
      mate_[e.v] = e.u;
    }
    edges_ = std::move(match_edges);
  }

  Matching(int n, std::initializer_list<Edge> match_edges)
      : Matching(n, std::vector<Edge>(match_edges)) {}

  int n() const { return static_cast<int>(mate_.size()); }
  int size() const { return static_cast<int>(edges_.size()); }
  const std::vector<Edge>& edges() const { return edges_; }

  int mate(int v) const {
    detail::require_arg(v >= 0 && v < n(), "vertex id out of range");
    return mate_[v];
  }

  bool covers(int v) const { return mate(v) != -1; }

  bool contains(const Edge& e) const {
    return e.v < n() && mate_[e.u] == e.v;
  }

 private:
  std::vector<Edge> edges_;
  std::vector<int> mate_;
};

// Partition of the vertex set into connected components.
// Component ids follow the smallest vertex they contain, ascending.
struct ComponentPartition {
  std::vector<std::vector<int>> sets;
  std::vector<int> component_of;
};

inline ComponentPartition components(const Graph& g) {
  ComponentPartition part;
  part.component_of.assign(static_cast<std::size_t>(g.n()), -1);
  for (int start = 0; start < g.n(); ++start) {
    if (part.component_of[start] != -1) continue;
    int id = static_cast<int>(part.sets.size());
    std::vector<int> stack{start};
    std::vector<int> members;
    part.component_of[start] = id;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      members.push_back(v);
      for (int w : g.neighbors(v)) {
        if (part.component_of[w] == -1) {
          part.component_of[w] = id;
          stack.push_back(w);
        }
      }
    }
    std::sort(members.begin(), members.end());
    part.sets.push_back(std::move(members));
  }
  return part;
}

// Result of removing one vertex: the shrunken graph plus the id remapping.
// old_to_new[w] is -1 for the deleted vertex.
struct VertexDeletion {
  Graph graph;
  std::vector<int> old_to_new;
};

inline VertexDeletion delete_vertex(const Graph& g, int v) {
  detail::require_arg(v >= 0 && v < g.n(), "vertex id out of range");
  VertexDeletion out;
  out.old_to_new.assign(static_cast<std::size_t>(g.n()), -1);
  int next = 0;
  for (int w = 0; w < g.n(); ++w)
    if (w != v) out.old_to_new[w] = next++;
  out.graph = Graph(g.n() - 1);
  for (const Edge& e : g.edges())
    if (e.u != v && e.v != v)
      out.graph.add_edge(out.old_to_new[e.u], out.old_to_new[e.v]);
  return out;
}

// Adds the edge v-u where u is currently isolated.
inline Graph link_isolated(const Graph& g, int v, int u) {
  detail::require_arg(v >= 0 && v < g.n() && u >= 0 && u < g.n(),
                      "vertex id out of range");
  detail::require(u != v, "endpoints must differ");
  detail::require(g.degree(u) == 0, "target vertex must be isolated");
  Graph out = g;
  out.add_edge(v, u);
  return out;
}

// Removes every edge from v toward its neighborhood in h, where h is a
// subgraph of g on the same id space.
inline Graph detach_neighborhood(const Graph& g, int v, const Graph& h) {
  detail::require_arg(v >= 0 && v < g.n(), "vertex id out of range");
  detail::require(h.n() <= g.n(), "reference graph exceeds host id space");
  detail::require(v < h.n(), "vertex missing from reference graph");
  for (const Edge& e : h.edges())
    detail::require(g.has_edge(e.u, e.v), "reference graph is not a subgraph");
  Graph out = g;
  for (int w : h.neighbors(v)) out.remove_edge(v, w);
  return out;
}

// Induced subgraph on `keep` (sorted ascending, deduplicated). Optionally
// reports the old-id -> new-id map (-1 for dropped vertices).
inline Graph induced_subgraph(const Graph& g, std::vector<int> keep,
                              std::vector<int>* old_to_new = nullptr) {
  std::sort(keep.begin(), keep.end());
  keep.erase(std::unique(keep.begin(), keep.end()), keep.end());
  std::vector<int> remap(static_cast<std::size_t>(g.n()), -1);
  for (std::size_t i = 0; i < keep.size(); ++i) {
    detail::require_arg(keep[i] >= 0 && keep[i] < g.n(), "vertex id out of range");
    remap[keep[i]] = static_cast<int>(i);
  }
  Graph out(static_cast<int>(keep.size()));
  for (const Edge& e : g.edges())
    if (remap[e.u] != -1 && remap[e.v] != -1)
      out.add_edge(remap[e.u], remap[e.v]);
  if (old_to_new) *old_to_new = std::move(remap);
  return out;
}

inline Graph strip_isolated(const Graph& g) {
  std::vector<int> keep;
  for (int v = 0; v < g.n(); ++v)
    if (g.degree(v) > 0) keep.push_back(v);
  return induced_subgraph(g, std::move(keep));
}

inline Graph disjoint_union(const Graph& a, const Graph& b) {
  Graph out(a.n() + b.n());
  for (const Edge& e : a.edges()) out.add_edge(e.u, e.v);
  for (const Edge& e : b.edges()) out.add_edge(e.u + a.n(), e.v + a.n());
  return out;
}

}  // namespace matchbound
