#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "matchbound/canonical.hpp"
#include "matchbound/enumerate.hpp"
#include "matchbound/errors.hpp"
#include "matchbound/graph.hpp"
#include "matchbound/matching.hpp"
#include "matchbound/membership.hpp"
#include "matchbound/star.hpp"

namespace matchbound {

// Parameters of the extremal question: graphs with max degree strictly
// below `degree_cap` and matching number strictly below `matching_cap`.
struct BoundParams {
  int degree_cap = 2;    // d
  int matching_cap = 2;  // m
};

namespace detail {

inline void validate(const BoundParams& p) {
  require_arg(p.degree_cap >= 2, "degree cap must be at least 2");
  require_arg(p.matching_cap >= 2, "matching cap must be at least 2");
}

// Largest per-component matching number that pays full rate: ceil((d-1)/2).
inline int dense_rate(int d) { return d / 2; }

}  // namespace detail

// Baseline bound: counting argument over the matched vertices alone.
inline long long trivial_bound(const BoundParams& p) {
  detail::validate(p);
  long long b = p.matching_cap - 1;
  return 2 * b * (p.degree_cap - 1) - b;
}

// Edge cap for one connected factor-critical component with matching
// number r under degree cap d: the component has 2r+1 vertices, so both
// the clique count and the degree sum bite.
inline long long component_edge_bound(int r, int d) {
  detail::require_arg(r >= 0, "matching number must be non-negative");
  detail::require_arg(d >= 2, "degree cap must be at least 2");
  long long verts = 2LL * r + 1;
  return std::min(verts * r, verts * (d - 1) / 2);
}

// Shape of a candidate extremal graph: some claw components (stars on d
// vertices), some factor-critical components at the full rate r = d/2, and
// leftover factor-critical components with other matching numbers.
struct PartitionProfile {
  int claws = 0;
  int dense = 0;
  std::vector<int> rest;
};

inline long long profile_value(const PartitionProfile& pf, int d) {
  detail::require_arg(d >= 2, "degree cap must be at least 2");
  long long total = static_cast<long long>(pf.claws) * (d - 1);
  total += static_cast<long long>(pf.dense) * component_edge_bound(detail::dense_rate(d), d);
  for (int r : pf.rest) total += component_edge_bound(r, d);
  return total;
}

// Matching-number budget the profile consumes; extremal profiles for
// parameters (d, m) must spend exactly m-1.
inline long long profile_budget(const PartitionProfile& pf, int d) {
  long long total = pf.claws + static_cast<long long>(pf.dense) * detail::dense_rate(d);
  for (int r : pf.rest) total += r;
  return total;
}

struct BoundResult {
  long long value = 0;
  PartitionProfile profile;
};

// Exact maximum edge count, with the optimal profile attaining it.
inline BoundResult extremal_edges(const BoundParams& p) {
  detail::validate(p);
  int d = p.degree_cap;
  long long b = p.matching_cap - 1;
  int j = detail::dense_rate(d);
  long long value = (d - 1) * b + (b / j) * ((d - 1) / 2);
  long long split = (d % 2 == 1)
                        ? 2LL * j * b + j * (b / j)
                        : (2LL * j - 1) * b + (j - 1) * (b / j);
  detail::check(split == value, "parity case split disagrees with closed form");

  BoundResult out;
  out.value = value;
  if (d == 2) {
    // Degree cap 1: the only components are single edges.
    out.profile.claws = static_cast<int>(b);
  } else {
    out.profile.dense = static_cast<int>(b / j);
    out.profile.claws = static_cast<int>(b - j * (b / j));
  }
  detail::check(profile_value(out.profile, d) == value,
                "optimal profile does not attain the closed form");
  detail::check(profile_budget(out.profile, d) == b,
                "optimal profile spends the wrong budget");
  return out;
}

// Diagonal shortcut d = m = s.
inline long long extremal_edges_symmetric(int s) {
  detail::require_arg(s >= 2, "parameter must be at least 2");
  long long value = (s % 2 == 1) ? static_cast<long long>(s) * (s - 1)
                                 : (2LL * s - 1) * (s - 1) / 2;
  detail::check(value == extremal_edges({s, s}).value,
                "diagonal closed form disagrees with the general bound");
  return value;
}

// Rewrites a profile toward the canonical claws+dense shape without ever
// lowering its value: a component with r above the full rate folds into one
// dense component plus r - d/2 claws (value preserved exactly); a component
// with r below the full rate dissolves into r claws (value non-decreasing,
// strictly increasing when d is odd).
inline PartitionProfile reduction_rewrite(const PartitionProfile& pf, int d) {
  detail::require_arg(d >= 2, "degree cap must be at least 2");
  for (int r : pf.rest)
    detail::require(r >= 1, "profile components need positive matching number");
  int j = detail::dense_rate(d);
  PartitionProfile out;
  out.claws = pf.claws;
  out.dense = pf.dense;
  bool dissolved_below_rate = false;
  for (int r : pf.rest) {
    if (r >= j) {
      out.dense += 1;
      out.claws += r - j;
    } else {
      out.claws += r;
      dissolved_below_rate = true;
    }
  }
  detail::check(profile_budget(out, d) == profile_budget(pf, d),
                "rewrite must preserve the matching-number budget");
  long long before = profile_value(pf, d);
  long long after = profile_value(out, d);
  detail::check(after >= before, "rewrite lowered the profile value");
  if (d % 2 == 1 && dissolved_below_rate)
    detail::check(after > before, "below-rate dissolution must gain for odd caps");
  return out;
}

// Star on d vertices: the claw component of extremal graphs.
inline Graph build_claw(int d) {
  detail::require_arg(d >= 2, "degree cap must be at least 2");
  Graph g(d);
  for (int leaf = 1; leaf < d; ++leaf) g.add_edge(0, leaf);
  return g;
}

// Densest factor-critical component under degree cap d: a clique on d
// vertices when d is odd; for even d, a clique on d vertices minus a
// perfect matching, plus an apex adjacent to all but one of them.
inline Graph build_dense_factor_critical(int d) {
  detail::require_arg(d >= 3,
                      "no factor-critical component exists under degree cap 2");
  Graph g;
  if (d % 2 == 1) {
    g = Graph(d);
    for (int u = 0; u < d; ++u)
      for (int v = u + 1; v < d; ++v) g.add_edge(u, v);
  } else {
    g = Graph(d + 1);
    for (int u = 0; u < d; ++u)
      for (int v = u + 1; v < d; ++v)
        if (!(u % 2 == 0 && v == u + 1)) g.add_edge(u, v);
    for (int u = 0; u < d - 1; ++u) g.add_edge(u, d);
  }
  int r = detail::dense_rate(d);
  detail::check(g.edge_count() == component_edge_bound(r, d),
                "dense component misses its edge target");
  detail::check(g.max_degree() == d - 1, "dense component violates the degree cap");
  detail::check(matching_number(g) == r, "dense component has wrong matching number");
  detail::check(is_factor_critical(g), "dense component must be factor-critical");
  return g;
}

// Assembles an edge-maximal witness attaining extremal_edges(p).
inline Graph build_extremal(const BoundParams& p) {
  BoundResult target = extremal_edges(p);
  Graph g(0);
  for (int i = 0; i < target.profile.claws; ++i)
    g = disjoint_union(g, build_claw(p.degree_cap));
  for (int i = 0; i < target.profile.dense; ++i)
    g = disjoint_union(g, build_dense_factor_critical(p.degree_cap));
  detail::check(g.edge_count() == target.value, "witness misses the bound");
  detail::check(g.max_degree() < p.degree_cap, "witness violates the degree cap");
  detail::check(matching_number(g) == p.matching_cap - 1,
                "witness has the wrong matching number");
  if (g.n() <= 64)
    detail::check(is_member(g, p.degree_cap, p.matching_cap),
                  "witness must be edge-maximal in the family");
  return g;
}

// Whether the extremal edge count is attained by exactly one isomorphism
// class (isolated vertices disregarded).
inline bool is_extremal_unique(const BoundParams& p) {
  detail::validate(p);
  int d = p.degree_cap;
  int m = p.matching_cap;
  if (d == 2) return true;
  if (m == 2) return d != 4;
  return (m - 1) % detail::dense_rate(d) == 0;
}

// Rewires two claw components into one doubled star plus a detached leaf:
// the first center drops its smallest leaf and picks up the second claw's
// smallest leaf instead. Edge count and matching number are unchanged.
inline Graph coalesce_claws(const Graph& g, const std::vector<int>& first,
                            const std::vector<int>& second, int d) {
  detail::require(d >= 3, "claws under degree cap 2 cannot coalesce");
  ComponentPartition parts = components(g);
  auto claw_center = [&](const std::vector<int>& comp) {
    detail::require(static_cast<int>(comp.size()) == d,
                    "claw component must have d vertices");
    int center = -1;
    int edges = 0;
    for (int v : comp) {
      edges += g.degree(v);
      if (g.degree(v) == d - 1) center = v;
      detail::require(parts.component_of[v] == parts.component_of[comp.front()],
                      "vertices must form one component");
    }
    detail::require(static_cast<int>(parts.sets[parts.component_of[comp.front()]].size()) ==
                        static_cast<int>(comp.size()),
                    "claw vertices must be a whole component");
    detail::require(edges == 2 * (d - 1) && center != -1,
                    "component is not a claw");
    return center;
  };
  int c1 = claw_center(first);
  int c2 = claw_center(second);
  detail::require(parts.component_of[c1] != parts.component_of[c2],
                  "claws must be distinct components");
  int drop = -1;
  for (int v : first)
    if (v != c1 && (drop == -1 || v < drop)) drop = v;
  int gain = -1;
  for (int v : second)
    if (v != c2 && (gain == -1 || v < gain)) gain = v;

  int nu_before = matching_number(g);
  Graph out = g;
  out.remove_edge(c1, drop);
  out.add_edge(c1, gain);
  detail::check(out.edge_count() == g.edge_count(), "coalescing must keep the edge count");
  detail::check(out.max_degree() < d, "coalescing must respect the degree cap");
  detail::check(matching_number(out) == nu_before,
                "coalescing must keep the matching number");
  if (g.n() <= 64 && is_member(g, d, nu_before + 1))
    detail::check(is_member(out, d, nu_before + 1),
                  "coalescing must preserve family membership");
  return out;
}

// Connected factor-critical component on 2(d/2 + 1) + 1 vertices that packs
// the per-component edge cap; substituting it for a claw plus a dense
// component witnesses non-uniqueness. Built from a circulant, trimmed to
// the degree cap when d is even.
inline Graph build_merged_component(int d) {
  detail::require_arg(d >= 3, "degree cap must be at least 3");
  int j = detail::dense_rate(d);
  int n = 2 * (j + 1) + 1;
  Graph g(n);
  for (int v = 0; v < n; ++v)
    for (int step = 1; step <= d / 2; ++step) {
      int w = (v + step) % n;
      if (!g.has_edge(v, w)) g.add_edge(v, w);
    }
  if (d % 2 == 0) {
    // The circulant above is d-regular; shed a near-matching so one vertex
    // lands on d-2 and the rest on d-1.
    g.remove_edge(0, 1);
    g.remove_edge(0, n - 1);
    for (int i = 1; 2 * i + 1 <= n - 2; ++i) g.remove_edge(2 * i, 2 * i + 1);
  }
  detail::check(g.edge_count() == component_edge_bound(j + 1, d),
                "merged component misses its edge target");
  detail::check(g.max_degree() == d - 1, "merged component violates the degree cap");
  detail::check(components(g).sets.size() == 1, "merged component must be connected");
  detail::check(matching_number(g) == j + 1,
                "merged component has the wrong matching number");
  detail::check(is_factor_critical(g), "merged component must be factor-critical");
  return g;
}

// Number of isomorphism classes of graphs on at most n_cap vertices that
// meet both caps and attain the extremal edge count exactly.
inline int count_extremal_variants(const BoundParams& p, int n_cap, int jobs = 1) {
  detail::validate(p);
  if (n_cap > 8) throw size_error("variant counting is capped at 8 vertices");
  long long target = extremal_edges(p).value;
  detail::require(build_extremal(p).n() <= n_cap,
                  "vertex budget cannot hold the extremal witness");
  using Found = std::vector<std::string>;
  auto shard_fn = [&](detail::BoundedEnumerator& walker,
                      const std::vector<bool>& prefix) -> Found {
    Found forms;
    detail::BoundedEnumerator::Sink sink;
    sink.min_interesting = [&] { return static_cast<int>(target); };
    sink.leaf = [&](const std::vector<Edge>& edges, int) {
      if (static_cast<long long>(edges.size()) != target) return;
      Graph witness = strip_isolated(Graph::from_edges(n_cap, edges));
      forms.push_back(canonical_form(witness));
    };
    walker.run(prefix, sink);
    return forms;
  };
  std::vector<Found> shards = detail::run_sharded<Found>(
      n_cap, p.degree_cap, p.matching_cap, jobs, shard_fn);
  std::vector<std::string> all;
  for (const auto& s : shards) all.insert(all.end(), s.begin(), s.end());
  std::sort(all.begin(), all.end());
  all.erase(std::unique(all.begin(), all.end()), all.end());
  return static_cast<int>(all.size());
}

}  // namespace matchbound
