#pragma once

#include <optional>

#include "matchbound/errors.hpp"
#include "matchbound/graph.hpp"
#include "matchbound/matching.hpp"

namespace matchbound {

// Outcome of testing a graph against the family of edge-maximal graphs with
// max degree < d and matching number < m. blocking_edge names the first
// addition (in scan order) whose endpoint degrees and resulting matching
// number stay inside the caps, certifying non-maximality; fresh vertices use
// ids at and above g.n(). For a graph already inside both caps the endpoint
// test coincides with full membership of the extension.
struct MembershipReport {
  bool degree_ok = false;
  bool matching_ok = false;
  bool maximal_ok = false;
  int max_degree_value = 0;
  int matching_value = 0;
  std::optional<Edge> blocking_edge;

  bool member() const { return degree_ok && matching_ok && maximal_ok; }
};

namespace detail {

// Matching number after adding edge u-v, given a maximum matching of g.
// The new value is |max| or |max|+1; one augmentation search decides.
inline int matching_number_with_edge(const Graph& g, const Matching& max_matching,
                                     int u, int v) {
  Graph extended = g;
  extended.add_edge(u, v);
  Matching carried(extended.n(), max_matching.edges());
  return max_matching.size() +
         (find_augmenting_path(extended, carried).has_value() ? 1 : 0);
}

}  // namespace detail

inline MembershipReport check_membership(const Graph& g, int d, int m) {
  detail::require_arg(d >= 2, "degree parameter must be at least 2");
  detail::require_arg(m >= 2, "matching parameter must be at least 2");
  MembershipReport report;
  report.max_degree_value = g.max_degree();
  report.matching_value = matching_number(g);
  report.degree_ok = report.max_degree_value < d;
  report.matching_ok = report.matching_value < m;

  Matching max_matching = maximum_matching(g);
  // A legal addition must keep every degree below d and the matching number
  // below m. Three shapes exist: an absent edge inside the current vertex
  // set, an edge to one fresh vertex, and an edge joining two fresh vertices.
  for (int u = 0; u < g.n() && !report.blocking_edge; ++u) {
    if (g.degree(u) + 1 >= d) continue;
    for (int v = u + 1; v < g.n(); ++v) {
      if (g.degree(v) + 1 >= d || g.has_edge(u, v)) continue;
      if (detail::matching_number_with_edge(g, max_matching, u, v) < m) {
        report.blocking_edge = Edge(u, v);
        break;
      }
    }
  }
  if (!report.blocking_edge && d >= 2) {
    for (int v = 0; v < g.n(); ++v) {
      if (g.degree(v) + 1 >= d) continue;
      Graph extended = g;
      int fresh = extended.grow(1);
      extended.add_edge(v, fresh);
      if (matching_number(extended) < m) {
        report.blocking_edge = Edge(v, fresh);
        break;
      }
    }
  }
  if (!report.blocking_edge && report.matching_value + 1 < m)
    report.blocking_edge = Edge(g.n(), g.n() + 1);
  report.maximal_ok = !report.blocking_edge.has_value();
  return report;
}

inline bool is_member(const Graph& g, int d, int m) {
  return check_membership(g, d, m).member();
}

}  // namespace matchbound
