#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "matchbound/bounds.hpp"
#include "matchbound/canonical.hpp"
#include "matchbound/enumerate.hpp"
#include "matchbound/errors.hpp"
#include "matchbound/graph.hpp"
#include "matchbound/matching.hpp"
#include "matchbound/membership.hpp"

namespace matchbound {

// Outcome of checking the closed-form bound against search or sampling.
// regime is "exact" when the extremal witness fits the exhaustive budget,
// "sampled" otherwise.
struct VerifyReport {
  int degree_cap = 0;
  int matching_cap = 0;
  long long formula_value = 0;
  std::optional<long long> search_value;
  int n_max_searched = 0;
  std::optional<Graph> witness;
  std::optional<int> variant_count;
  double elapsed_seconds = 0.0;
  std::string regime;
  std::vector<std::uint32_t> seeds;
  std::vector<std::string> violations;

  bool ok() const { return violations.empty(); }
};

namespace detail {

// Uniform value in [0, k) drawn by rejection so results do not depend on
// the standard library's distribution implementation.
inline std::uint32_t uniform_below(std::mt19937& rng, std::uint32_t k) {
  check(k > 0, "empty choice set");
  const std::uint64_t span = 1ull << 32;
  const std::uint64_t limit = span - span % k;
  while (true) {
    std::uint64_t x = rng();
    if (x < limit) return static_cast<std::uint32_t>(x % k);
  }
}

}  // namespace detail

// Largest edge count over all labeled graphs on n_max vertices meeting both
// caps, plus a witness attaining it. Deterministic for every jobs value.
inline VerifyReport exhaustive_max_edges(const BoundParams& p, int n_max,
                                         int jobs = 1) {
  detail::validate(p);
  if (n_max > 8) throw size_error("exhaustive search is capped at 8 vertices");
  detail::require_arg(n_max >= 0, "vertex budget must be non-negative");
  auto start = std::chrono::steady_clock::now();

  struct Best {
    int count = -1;
    std::vector<Edge> edges;
  };
  auto shard_fn = [&](detail::BoundedEnumerator& walker,
                      const std::vector<bool>& prefix) -> Best {
    Best best;
    detail::BoundedEnumerator::Sink sink;
    sink.min_interesting = [&] { return best.count + 1; };
    sink.leaf = [&](const std::vector<Edge>& edges, int) {
      if (static_cast<int>(edges.size()) > best.count) {
        best.count = static_cast<int>(edges.size());
        best.edges = edges;
      }
    };
    walker.run(prefix, sink);
    return best;
  };
  std::vector<Best> shards = detail::run_sharded<Best>(
      n_max, p.degree_cap, p.matching_cap, jobs, shard_fn);
  Best overall;
  for (const Best& b : shards)
    if (b.count > overall.count) overall = b;
  detail::check(overall.count >= 0, "enumeration found no graph at all");

  VerifyReport report;
  report.degree_cap = p.degree_cap;
  report.matching_cap = p.matching_cap;
  report.formula_value = extremal_edges(p).value;
  report.search_value = overall.count;
  report.n_max_searched = n_max;
  report.witness = strip_isolated(Graph::from_edges(n_max, overall.edges));
  report.regime = "exact";
  report.elapsed_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

// Draws uniformly among the legal edge additions until none remains, then
// insists on full family membership, retrying with fresh randomness from
// the same engine. Identical seeds give identical graphs on any platform.
inline Graph random_maximal_graph(const BoundParams& p, int n, std::uint32_t seed) {
  detail::validate(p);
  detail::require_arg(n >= 2 * (p.matching_cap - 1),
                      "vertex budget below twice the matching budget");
  std::mt19937 rng(seed);
  const int attempts = 256;
  for (int attempt = 0; attempt < attempts; ++attempt) {
    Graph g(n);
    while (true) {
      Matching current = maximum_matching(g);
      std::vector<Edge> legal;
      for (int u = 0; u < n; ++u) {
        if (g.degree(u) + 1 >= p.degree_cap) continue;
        for (int v = u + 1; v < n; ++v) {
          if (g.degree(v) + 1 >= p.degree_cap || g.has_edge(u, v)) continue;
          if (detail::matching_number_with_edge(g, current, u, v) < p.matching_cap)
            legal.emplace_back(u, v);
        }
      }
      if (legal.empty()) break;
      const Edge& pick = legal[detail::uniform_below(
          rng, static_cast<std::uint32_t>(legal.size()))];
      g.add_edge(pick.u, pick.v);
    }
    if (is_member(g, p.degree_cap, p.matching_cap)) return g;
  }
  throw argument_error(
      "no maximal member found; the vertex budget is likely too small");
}

// Checks the closed form: exhaustively when the witness fits n_max,
// otherwise by a seeded campaign of random maximal members, none of which
// may exceed the formula.
inline VerifyReport verify_bound(const BoundParams& p, int n_max = 8, int jobs = 1,
                                 std::vector<std::uint32_t> seeds = {}) {
  detail::validate(p);
  auto start = std::chrono::steady_clock::now();
  BoundResult bound = extremal_edges(p);
  Graph constructed = build_extremal(p);

  VerifyReport report;
  report.degree_cap = p.degree_cap;
  report.matching_cap = p.matching_cap;
  report.formula_value = bound.value;
  report.n_max_searched = n_max;

  if (constructed.n() <= n_max) {
    report = exhaustive_max_edges(p, n_max, jobs);
    if (*report.search_value != bound.value)
      report.violations.push_back(
          "search maximum " + std::to_string(*report.search_value) +
          " disagrees with formula " + std::to_string(bound.value));
    report.variant_count = count_extremal_variants(p, n_max, jobs);
  } else {
    report.regime = "sampled";
    if (seeds.empty())
      for (std::uint32_t s = 1; s <= 32; ++s) seeds.push_back(s);
    report.seeds = seeds;
    int sample_n = (p.matching_cap - 1) * p.degree_cap + 2;
    report.witness = constructed;
    for (std::uint32_t seed : seeds) {
      Graph sample = random_maximal_graph(p, sample_n, seed);
      if (sample.edge_count() > bound.value)
        report.violations.push_back(
            "seed " + std::to_string(seed) + " produced " +
            std::to_string(sample.edge_count()) + " edges, above the formula");
    }
  }
  report.elapsed_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

}  // namespace matchbound
