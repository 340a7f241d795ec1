#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <vector>

#include "matchbound/bounds.hpp"
#include "matchbound/errors.hpp"
#include "matchbound/graph.hpp"
#include "matchbound/matching.hpp"
#include "matchbound/membership.hpp"
#include "matchbound/star.hpp"

namespace matchbound {

struct StepRecord {
  int step = 0;
  int chosen_vertex = -1;
  std::vector<Edge> removed_edges;
  std::vector<Edge> added_edges;
  int matching_number = 0;
  int edge_count = 0;
};

// Rolling state of the rewiring pipeline. Every saturated vertex of the
// initial maximum matching owns a reserved pool of d-1 isolated vertices;
// pools are consumed whole, one per step.
struct TransformState {
  int step = 0;
  Graph graph;
  Matching matching;
  std::map<int, std::vector<int>> pools;
  std::vector<StepRecord> log;
};

// One factor-critical piece of the final decomposition.
struct FinalComponent {
  std::vector<int> vertices;
  int matching_number = 0;
};

struct FinalDecomposition {
  int claw_count = 0;
  std::vector<FinalComponent> factor_components;
};

namespace detail {

inline bool is_claw_component(const Graph& g, const std::vector<int>& comp, int d) {
  if (static_cast<int>(comp.size()) != d) return false;
  int degree_sum = 0;
  bool center = false;
  for (int v : comp) {
    degree_sum += g.degree(v);
    if (g.degree(v) == d - 1) center = true;
  }
  return degree_sum == 2 * (d - 1) && center;
}

// Least vertex outside every claw component and outside the star set;
// nullopt means the pipeline reached its fixpoint.
inline std::optional<int> next_transform_vertex(const Graph& g, const Matching& m,
                                                int d) {
  ComponentPartition parts = components(g);
  std::vector<char> in_claw(static_cast<std::size_t>(g.n()), 0);
  for (const auto& comp : parts.sets)
    if (is_claw_component(g, comp, d))
      for (int v : comp) in_claw[v] = 1;
  StarSet stars = star_set(g, m);
  for (int v = 0; v < g.n(); ++v)
    if (!in_claw[v] && !stars.contains(v)) return v;
  return std::nullopt;
}

}  // namespace detail

// Reserves d-1 fresh isolated vertices for every saturated vertex, reusing
// isolated vertices the graph already carries before growing new ones.
inline TransformState attach_isolated_pool(const Graph& g, const Matching& m,
                                           int d) {
  detail::require_arg(d >= 2, "degree cap must be at least 2");
  detail::require(is_matching(g, m), "matching does not fit the graph");
  detail::require(!find_augmenting_path(g, m).has_value(),
                  "matching must be maximum, not merely maximal");
  std::vector<int> saturated;
  for (int v = 0; v < g.n(); ++v)
    if (m.covers(v)) saturated.push_back(v);

  TransformState state;
  state.graph = g;
  std::size_t need = saturated.size() * static_cast<std::size_t>(d - 1);
  std::vector<int> free_ids = state.graph.isolated_vertices();
  if (free_ids.size() < need)
    state.graph.grow(static_cast<int>(need - free_ids.size()));
  free_ids = state.graph.isolated_vertices();
  std::size_t at = 0;
  for (int v : saturated) {
    auto& pool = state.pools[v];
    for (int i = 0; i < d - 1; ++i) pool.push_back(free_ids[at++]);
  }
  state.matching = Matching(state.graph.n(), m.edges());
  return state;
}

// Removes every component isomorphic to the d-vertex star, re-densifying
// the ids of what remains (order-preserving).
struct ClawStripResult {
  Graph graph;
  std::vector<int> old_to_new;
  int claw_count = 0;
};

inline ClawStripResult strip_claws(const Graph& g, int d) {
  detail::require_arg(d >= 2, "degree cap must be at least 2");
  ComponentPartition parts = components(g);
  std::vector<int> keep;
  int claws = 0;
  for (const auto& comp : parts.sets) {
    if (detail::is_claw_component(g, comp, d)) {
      ++claws;
    } else {
      keep.insert(keep.end(), comp.begin(), comp.end());
    }
  }
  ClawStripResult out;
  out.claw_count = claws;
  out.graph = induced_subgraph(g, std::move(keep), &out.old_to_new);
  return out;
}

// One rewiring step: the least vertex that is neither in a claw component
// nor a star vertex trades its whole neighborhood for its reserved pool,
// leaving it the center of a fresh claw. The matching number is preserved
// exactly; the edge count changes by (d-1) - degree(v), which is zero while
// the graph is still edge-maximal and never negative afterwards.
inline TransformState transform_step(const TransformState& state, int d) {
  detail::require_arg(d >= 2, "degree cap must be at least 2");
  const Graph& g = state.graph;
  const Matching& m = state.matching;
  detail::require(is_matching(g, m), "matching does not fit the graph");
  std::optional<int> pick = detail::next_transform_vertex(g, m, d);
  detail::require(pick.has_value(), "state is already a fixpoint");
  int v = *pick;
  detail::check(g.degree(v) <= d - 1, "vertex degree exceeds the cap");
  auto pool_it = state.pools.find(v);
  detail::check(pool_it != state.pools.end(), "chosen vertex carries no pool");
  const std::vector<int>& pool = pool_it->second;
  detail::check(static_cast<int>(pool.size()) == d - 1, "pool has the wrong size");
  for (int u : pool)
    detail::check(g.degree(u) == 0, "pool vertices must still be isolated");
  int old_mate = m.mate(v);
  detail::check(old_mate != -1, "non-star vertex must be saturated");

  StepRecord record;
  record.step = state.step;
  record.chosen_vertex = v;
  for (int w : g.neighbors(v)) record.removed_edges.emplace_back(v, w);

  Graph next = g;
  for (int u : pool) {
    next = link_isolated(next, v, u);
    record.added_edges.emplace_back(v, u);
  }
  next = detach_neighborhood(next, v, g);

  std::vector<Edge> new_edges;
  for (const Edge& e : m.edges())
    if (e != Edge(v, old_mate)) new_edges.push_back(e);
  new_edges.emplace_back(v, pool.front());
  Matching next_matching(next.n(), std::move(new_edges));

  detail::check(next.edge_count() == g.edge_count() + (d - 1) - g.degree(v),
                "step must trade the old neighborhood for the whole pool");
  detail::check(next.max_degree() < d, "step must respect the degree cap");
  detail::check(is_matching(next, next_matching), "rewired matching must fit");
  detail::check(next_matching.size() == m.size(),
                "step must preserve the matching size");
  detail::check(matching_number(next) == next_matching.size(),
                "rewired matching must stay maximum");
  ComponentPartition parts = components(next);
  const auto& new_comp = parts.sets[parts.component_of[v]];
  detail::check(detail::is_claw_component(next, new_comp, d),
                "chosen vertex must end up centering a claw");

  TransformState out;
  out.step = state.step + 1;
  out.graph = std::move(next);
  out.matching = std::move(next_matching);
  out.pools = state.pools;
  out.pools.erase(v);
  out.log = state.log;
  record.matching_number = out.matching.size();
  record.edge_count = out.graph.edge_count();
  out.log.push_back(std::move(record));
  return out;
}

// Classifies a fixpoint graph: claw components counted, every other
// non-trivial component must be factor-critical with the matching pinning
// its odd order.
inline FinalDecomposition decompose_final(const Graph& g, const Matching& m,
                                          int d) {
  detail::require_arg(d >= 2, "degree cap must be at least 2");
  detail::require(is_matching(g, m), "matching does not fit the graph");
  detail::require(!find_augmenting_path(g, m).has_value(),
                  "matching must be maximum, not merely maximal");
  FinalDecomposition out;
  ComponentPartition parts = components(g);
  long long budget = 0;
  for (const auto& comp : parts.sets) {
    if (comp.size() == 1 && g.degree(comp.front()) == 0) continue;
    if (detail::is_claw_component(g, comp, d)) {
      ++out.claw_count;
      budget += 1;
      continue;
    }
    Graph sub = induced_subgraph(g, comp);
    if (!is_factor_critical(sub))
      throw internal_error("unclassifiable component in final decomposition");
    int r = 0;
    for (const Edge& e : m.edges())
      if (std::binary_search(comp.begin(), comp.end(), e.u) &&
          std::binary_search(comp.begin(), comp.end(), e.v))
        ++r;
    detail::check(static_cast<int>(comp.size()) == 2 * r + 1,
                  "factor-critical component order must match its matching");
    detail::check(sub.edge_count() <= component_edge_bound(r, d),
                  "component exceeds its edge cap");
    out.factor_components.push_back({comp, r});
    budget += r;
  }
  detail::check(budget == m.size(),
                "decomposition budget must equal the matching size");
  return out;
}

struct TransformResult {
  TransformState state;
  FinalDecomposition decomposition;
};

// Full pipeline: reserve pools, rewire non-star vertices one per step until
// every vertex outside the claws is a star vertex, then decompose. At most
// matching_cap - 1 steps are ever needed, and the edge count never drops,
// which is what makes the final decomposition an upper bound for the input.
inline TransformResult transform(const Graph& g, int d, int m) {
  MembershipReport membership = check_membership(g, d, m);
  detail::require(membership.member(),
                  "graph must be an edge-maximal member of the family");
  Matching max_matching = maximum_matching(g);
  detail::check(max_matching.size() == m - 1,
                "maximal member must have matching number m-1");
  TransformState state = attach_isolated_pool(g, max_matching, d);
  int initial_edges = state.graph.edge_count();
  for (int k = 0; k < m; ++k) {
    if (!detail::next_transform_vertex(state.graph, state.matching, d).has_value())
      break;
    detail::check(k < m - 1, "pipeline exceeded its step budget");
    state = transform_step(state, d);
  }
  detail::check(
      !detail::next_transform_vertex(state.graph, state.matching, d).has_value(),
      "pipeline halted before reaching a fixpoint");
  detail::check(state.graph.edge_count() >= initial_edges,
                "pipeline must never lose edges");
  detail::check(matching_number(state.graph) == m - 1,
                "pipeline must preserve the matching number");

  TransformResult out;
  out.decomposition = decompose_final(state.graph, state.matching, d);
  out.state = std::move(state);
  return out;
}

}  // namespace matchbound
