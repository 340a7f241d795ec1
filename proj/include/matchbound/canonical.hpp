#pragma once

#include <algorithm>
#include <map>
#include <numeric>
#include <string>
#include <vector>

#include "matchbound/errors.hpp"
#include "matchbound/graph.hpp"

namespace matchbound {

namespace detail {

// Iterative degree refinement: vertices get integer labels, re-labelled by
// the sorted multiset of neighbor labels until the partition stabilizes.
// Labels are assigned from the sorted key list, so isomorphic graphs end up
// with identical label vectors up to the isomorphism.
inline std::vector<int> refine_labels(const Graph& g) {
  std::vector<int> label(static_cast<std::size_t>(g.n()));
  for (int v = 0; v < g.n(); ++v) label[v] = g.degree(v);
  while (true) {
    std::vector<std::pair<int, std::vector<int>>> keys(static_cast<std::size_t>(g.n()));
    for (int v = 0; v < g.n(); ++v) {
      std::vector<int> around;
      for (int w : g.neighbors(v)) around.push_back(label[w]);
      std::sort(around.begin(), around.end());
      keys[v] = {label[v], std::move(around)};
    }
    std::map<std::pair<int, std::vector<int>>, int> dense;
    for (const auto& k : keys) dense.emplace(k, 0);
    int next = 0;
    for (auto& [k, id] : dense) id = next++;
    std::vector<int> fresh(static_cast<std::size_t>(g.n()));
    for (int v = 0; v < g.n(); ++v) fresh[v] = dense[keys[v]];
    if (fresh == label) return label;
    label = std::move(fresh);
  }
}

// Lexicographically smallest upper-triangle adjacency bitstring over all
// vertex orderings that respect the refined label classes. Bits appear in
// placement order: placing position p contributes bits toward positions
// 0..p-1.
inline std::string min_adjacency_string(const Graph& g) {
  int n = g.n();
  if (n == 0) return "";
  std::vector<int> label = refine_labels(g);
  std::vector<int> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    return label[a] != label[b] ? label[a] < label[b] : a < b;
  });
  std::vector<int> slot_label(static_cast<std::size_t>(n));
  for (int p = 0; p < n; ++p) slot_label[p] = label[order[p]];

  std::string best;
  std::string cur(static_cast<std::size_t>(n * (n - 1) / 2), '0');
  std::vector<int> placed(static_cast<std::size_t>(n), -1);
  std::vector<char> used(static_cast<std::size_t>(n), 0);
  bool have_best = false;

  auto rec = [&](auto&& self, int p, int bits) -> void {
    if (p == n) {
      if (!have_best || cur < best) {
        best = cur;
        have_best = true;
      }
      return;
    }
    for (int v = 0; v < n; ++v) {
      if (used[v] || label[v] != slot_label[p]) continue;
      int base = bits;
      bool viable = true;
      for (int q = 0; q < p; ++q) {
        char bit = g.has_edge(placed[q], v) ? '1' : '0';
        cur[static_cast<std::size_t>(base + q)] = bit;
        if (have_best) {
          char ref = best[static_cast<std::size_t>(base + q)];
          if (bit > ref) {
            viable = false;
            break;
          }
          if (bit < ref) {
            // Strictly better prefix: nothing placed so far can prune.
            for (int r = q + 1; r < p; ++r)
              cur[static_cast<std::size_t>(base + r)] =
                  g.has_edge(placed[r], v) ? '1' : '0';
            have_best = false;
            break;
          }
        }
      }
      if (!viable) continue;
      used[v] = 1;
      placed[p] = v;
      self(self, p + 1, bits + p);
      used[v] = 0;
      // have_best may have been cleared above; a completed branch restores it.
    }
  };
  rec(rec, 0, 0);
  detail::check(have_best, "canonical search must produce an ordering");
  return best;
}

}  // namespace detail

// Canonical fingerprint: equal strings exactly when the graphs are
// isomorphic. Computed per component, so unions of small components stay
// cheap; capped at 10 vertices per component.
inline std::string canonical_form(const Graph& g) {
  ComponentPartition parts = components(g);
  std::vector<std::string> pieces;
  for (const auto& comp : parts.sets) {
    if (comp.size() > 10)
      throw size_error("canonical form is capped at 10 vertices per component");
    Graph sub = induced_subgraph(g, comp);
    pieces.push_back(std::to_string(sub.n()) + ":" + detail::min_adjacency_string(sub));
  }
  std::sort(pieces.begin(), pieces.end());
  std::string out = "n=" + std::to_string(g.n()) + ";";
  for (const auto& piece : pieces) {
    out += piece;
    out.push_back('|');
  }
  return out;
}

}  // namespace matchbound
