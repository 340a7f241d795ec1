#pragma once

#include <algorithm>
#include <optional>
#include <variant>
#include <vector>

#include "matchbound/errors.hpp"
#include "matchbound/graph.hpp"
#include "matchbound/matching.hpp"

namespace matchbound {

// Alternating path of even edge count whose first vertex is unsaturated and
// whose first edge (when present) lies outside the matching. The length-0
// path at an unsaturated vertex qualifies.
struct StarPath : AlternatingPath {};

inline bool is_star_path(const Graph& g, const Matching& m,
                         const AlternatingPath& p) {
  if (!is_alternating_path(g, m, p)) return false;
  if (p.edge_length() % 2 != 0) return false;
  if (m.covers(p.vertices.front())) return false;
  return p.matched.empty() || !p.matched.front();
}

// Vertices reachable by some star path, sorted ascending.
struct StarSet {
  std::vector<int> vertices;

  bool contains(int v) const {
    return std::binary_search(vertices.begin(), vertices.end(), v);
  }
};

namespace detail {

// Exhaustive DFS over simple alternating walks from one unsaturated root.
// After an even number of edges the next edge must avoid the matching; after
// an odd number it must be the current vertex's matching edge.
template <typename Visit>
class StarWalk {
 public:
  StarWalk(const Graph& g, const Matching& m, Visit visit)
      : g_(g), m_(m), visit_(visit), on_path_(static_cast<std::size_t>(g.n()), 0) {}

  // visit_(v, depth) is called at every arrival with an even edge count;
  // returning true stops the walk early.
  bool run(int root) {
    path_.clear();
    return step(root, 0);
  }

  const std::vector<int>& path() const { return path_; }

 private:
  bool step(int v, int depth) {
    path_.push_back(v);
    on_path_[v] = 1;
    bool stop = false;
    if (depth % 2 == 0) stop = visit_(v, depth);
    if (!stop) {
      if (depth % 2 == 0) {
        for (int w : g_.neighbors(v)) {
          if (on_path_[w] || m_.mate(v) == w) continue;
          if (step(w, depth + 1)) {
            stop = true;
            break;
          }
        }
      } else {
        int w = m_.mate(v);
        if (w != -1 && !on_path_[w]) stop = step(w, depth + 1);
      }
    }
    if (!stop) {
      on_path_[v] = 0;
      path_.pop_back();
    }
    return stop;
  }

  const Graph& g_;
  const Matching& m_;
  Visit visit_;
  std::vector<char> on_path_;
  std::vector<int> path_;
};

inline std::vector<bool> star_flags(int edge_count) {
  std::vector<bool> flags;
  flags.reserve(static_cast<std::size_t>(edge_count));
  for (int i = 0; i < edge_count; ++i) flags.push_back(i % 2 == 1);
  return flags;
}

}  // namespace detail

inline StarSet star_set(const Graph& g, const Matching& m) {
  detail::require(is_matching(g, m), "matching does not fit the graph");
  std::vector<char> hit(static_cast<std::size_t>(g.n()), 0);
  auto visit = [&hit](int v, int) {
    hit[v] = 1;
    return false;
  };
  detail::StarWalk walk(g, m, visit);
  for (int v = 0; v < g.n(); ++v)
    if (!m.covers(v)) walk.run(v);
  StarSet out;
  for (int v = 0; v < g.n(); ++v)
    if (hit[v]) out.vertices.push_back(v);
  return out;
}

inline std::optional<StarPath> find_star_path(const Graph& g, const Matching& m,
                                              int target) {
  detail::require(is_matching(g, m), "matching does not fit the graph");
  detail::require_arg(target >= 0 && target < g.n(), "vertex id out of range");
  auto visit = [target](int v, int) { return v == target; };
  detail::StarWalk walk(g, m, visit);
  for (int v = 0; v < g.n(); ++v) {
    if (m.covers(v)) continue;
    if (walk.run(v)) {
      StarPath p;
      p.vertices = walk.path();
      p.matched = detail::star_flags(static_cast<int>(p.vertices.size()) - 1);
      detail::check(is_star_path(g, m, p), "star-path search produced an invalid path");
      return p;
    }
  }
  return std::nullopt;
}

// Result of merging two intersecting star paths: either a star path from the
// first origin to the second path's terminus, or an augmenting path between
// the two origins.
using MergeOutcome = std::variant<StarPath, AugmentingPath>;

// Follows the first path until it first touches the second, then reroutes
// along the second path. Which direction the reroute takes depends on
// whether the shared vertex was entered along a matching edge.
inline MergeOutcome merge_star_paths(const Graph& g, const Matching& m,
                                     const StarPath& p1, const StarPath& p2) {
  detail::require(is_star_path(g, m, p1), "first path is not a star path");
  detail::require(is_star_path(g, m, p2), "second path is not a star path");
  std::vector<char> on_p2(static_cast<std::size_t>(g.n()), 0);
  for (int v : p2.vertices) on_p2[v] = 1;
  std::size_t i = 0;
  while (i < p1.vertices.size() && !on_p2[p1.vertices[i]]) ++i;
  detail::require(i < p1.vertices.size(), "paths do not intersect");

  auto flags_from = [&m](const std::vector<int>& verts) {
    std::vector<bool> flags;
    for (std::size_t k = 0; k + 1 < verts.size(); ++k)
      flags.push_back(m.contains(Edge(verts[k], verts[k + 1])));
    return flags;
  };

  if (i == 0) {
    // Shared origin: the second path already runs from p1's start.
    detail::check(p1.vertices.front() == p2.vertices.front(),
                  "intersection at origin must be the origin itself");
    StarPath out;
    out.vertices = p2.vertices;
    out.matched = p2.matched;
    return out;
  }

  std::size_t j = 0;
  while (p2.vertices[j] != p1.vertices[i]) ++j;
  detail::check(j >= 1, "interior intersection cannot hit the second origin");

  std::vector<int> verts(p1.vertices.begin(),
                         p1.vertices.begin() + static_cast<std::ptrdiff_t>(i + 1));
  if (m.contains(Edge(p2.vertices[j - 1], p2.vertices[j]))) {
    // Entered along p2's matching edge: walk back to p2's unsaturated origin.
    for (std::size_t k = j; k-- > 0;) verts.push_back(p2.vertices[k]);
    AugmentingPath out;
    out.vertices = std::move(verts);
    out.matched = flags_from(out.vertices);
    detail::check(is_augmenting_path(g, m, out),
                  "merge produced an invalid augmenting path");
    return out;
  }
  // Otherwise the matching edge at the shared vertex points onward: follow
  // p2 forward to its terminus.
  detail::check(j + 1 < p2.vertices.size(),
                "shared vertex must carry a matching edge on the second path");
  for (std::size_t k = j + 1; k < p2.vertices.size(); ++k)
    verts.push_back(p2.vertices[k]);
  StarPath out;
  out.vertices = std::move(verts);
  out.matched = flags_from(out.vertices);
  detail::check(is_star_path(g, m, out), "merge produced an invalid star path");
  return out;
}

// For a component entirely inside the star set of a maximum matching, the
// unsaturated vertex is unique; returns it.
inline int all_star_component_witness(const Graph& g, const Matching& m,
                                      const std::vector<int>& component) {
  detail::require(is_matching(g, m), "matching does not fit the graph");
  detail::require(!find_augmenting_path(g, m).has_value(),
                  "matching must be maximum, not merely maximal");
  detail::require(!component.empty(), "component must be non-empty");
  StarSet stars = star_set(g, m);
  for (int v : component)
    detail::require(stars.contains(v), "component must lie inside the star set");
  int witness = -1;
  int count = 0;
  for (int v : component) {
    if (!m.covers(v)) {
      witness = v;
      ++count;
    }
  }
  detail::check(count == 1, "all-star component must have exactly one unsaturated vertex");
  return witness;
}

inline bool is_factor_critical(const Graph& g) {
  if (g.n() == 0) return false;
  if (components(g).sets.size() != 1) return false;
  int base = matching_number(g);
  for (int v = 0; v < g.n(); ++v) {
    VertexDeletion del = delete_vertex(g, v);
    if (matching_number(del.graph) != base) return false;
  }
  return true;
}

// Factor-criticality via the star machinery: a connected graph is
// factor-critical exactly when every vertex is a star vertex of a maximum
// matching.
inline bool is_factor_critical_via_star(const Graph& g) {
  if (g.n() == 0) return false;
  if (components(g).sets.size() != 1) return false;
  Matching m = maximum_matching(g);
  StarSet stars = star_set(g, m);
  return static_cast<int>(stars.vertices.size()) == g.n();
}

// Factor-critical graphs have an odd vertex count pinned by the matching
// number; violations are internal-invariant errors, not return values.
inline bool gallai_check(const Graph& g) {
  detail::require(is_factor_critical(g), "graph must be factor-critical");
  detail::check(g.n() == 2 * matching_number(g) + 1,
                "factor-critical graph with wrong vertex count");
  return true;
}

}  // namespace matchbound
