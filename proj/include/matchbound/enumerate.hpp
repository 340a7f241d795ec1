#pragma once

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <functional>
#include <thread>
#include <vector>

#include "matchbound/errors.hpp"
#include "matchbound/graph.hpp"
#include "matchbound/matching.hpp"

namespace matchbound::detail {

// Enumerates every labeled graph on `n` vertices with max degree < d and
// matching number < m, by deciding each vertex pair in lexicographic order
// (include branch first). The matching number is maintained incrementally:
// adding one edge raises it by at most one, so a single augmentation search
// per inclusion keeps a maximum matching current. Each complete graph is
// handed to the sink, which may also bound the search.
class BoundedEnumerator {
 public:
  struct Sink {
    // Called with the completed graph's edges and matching number.
    std::function<void(const std::vector<Edge>&, int)> leaf;
    // Enumeration skips subtrees that cannot exceed this edge count.
    std::function<int()> min_interesting = [] { return -1; };
  };

  BoundedEnumerator(int n, int d, int m) : n_(n), d_(d), m_(m) {
    require_arg(n >= 0, "vertex count must be non-negative");
    require_arg(d >= 2 && m >= 2, "parameters must be at least 2");
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v) slots_.emplace_back(u, v);
  }

  int slot_count() const { return static_cast<int>(slots_.size()); }

  // Runs the full enumeration below a fixed prefix of include/exclude
  // decisions. Returns false if the prefix itself is infeasible.
  bool run(const std::vector<bool>& prefix, const Sink& sink) {
    State st(n_);
    for (std::size_t i = 0; i < prefix.size(); ++i) {
      if (!prefix[i]) continue;
      if (!try_include(st, slots_[i])) {
        unwind(st);
        return false;
      }
    }
    rec(st, prefix.size(), sink);
    unwind(st);
    return true;
  }

  // All feasible decision prefixes of the given depth, in search order.
  std::vector<std::vector<bool>> prefixes(int depth) {
    depth = std::min<int>(depth, slot_count());
    std::vector<std::vector<bool>> out;
    std::vector<bool> cur;
    State st(n_);
    auto rec_prefix = [&](auto&& self, int i) -> void {
      if (i == depth) {
        out.push_back(cur);
        return;
      }
      if (try_include(st, slots_[i])) {
        cur.push_back(true);
        self(self, i + 1);
        cur.pop_back();
        undo_include(st, slots_[i]);
      }
      cur.push_back(false);
      self(self, i + 1);
      cur.pop_back();
    };
    rec_prefix(rec_prefix, 0);
    return out;
  }

 private:
  struct State {
    explicit State(int n)
        : graph(n), mate(static_cast<std::size_t>(n), -1) {}
    Graph graph;
    std::vector<int> mate;
    int matched = 0;
    std::vector<Edge> edges;
    std::vector<std::vector<int>> mate_trail;
  };

  bool try_include(State& st, const Edge& e) {
    if (st.graph.degree(e.u) >= d_ - 1 || st.graph.degree(e.v) >= d_ - 1)
      return false;
    st.graph.add_edge(e.u, e.v);
    st.mate_trail.push_back(st.mate);
    AugmentSearch searcher(st.graph);
    bool grew = false;
    for (int root = 0; root < n_ && !grew; ++root) {
      if (st.mate[root] != -1) continue;
      int endpoint = searcher.search(st.mate, root);
      if (endpoint != -1) {
        flip_augmenting_chain(st.mate, searcher.parents(), endpoint);
        grew = true;
      }
    }
    if (grew && st.matched + 1 >= m_) {
      st.mate = st.mate_trail.back();
      st.mate_trail.pop_back();
      st.graph.remove_edge(e.u, e.v);
      return false;
    }
    if (grew) ++st.matched;
    st.edges.push_back(e);
    return true;
  }

  void undo_include(State& st, const Edge& e) {
    st.mate = st.mate_trail.back();
    st.mate_trail.pop_back();
    st.matched = 0;
    for (int v : st.mate)
      if (v != -1) ++st.matched;
    st.matched /= 2;
    st.graph.remove_edge(e.u, e.v);
    st.edges.pop_back();
  }

  void unwind(State& st) {
    while (!st.edges.empty()) undo_include(st, st.edges.back());
  }

  void rec(State& st, std::size_t i, const Sink& sink) {
    int residual = 0;
    for (int v = 0; v < n_; ++v) residual += (d_ - 1) - st.graph.degree(v);
    int room = std::min(static_cast<int>(slots_.size() - i), residual / 2);
    if (static_cast<int>(st.edges.size()) + room < sink.min_interesting()) return;
    if (i == slots_.size()) {
      check(matching_number(st.graph) == st.matched,
            "incremental matching number diverged from recomputation");
      sink.leaf(st.edges, st.matched);
      return;
    }
    if (try_include(st, slots_[i])) {
      rec(st, i + 1, sink);
      undo_include(st, slots_[i]);
    }
    rec(st, i + 1, sink);
  }

  int n_;
  int d_;
  int m_;
  std::vector<Edge> slots_;
};

// Splits the decision tree into prefix shards and runs them on up to `jobs`
// threads. Shards never share search state, and results are combined in
// shard order, so every jobs value yields the same outcome.
template <typename ShardResult>
std::vector<ShardResult> run_sharded(
    int n, int d, int m, int jobs,
    const std::function<ShardResult(BoundedEnumerator&, const std::vector<bool>&)>&
        shard_fn) {
  require_arg(jobs >= 1, "jobs must be at least 1");
  BoundedEnumerator probe(n, d, m);
  int depth = 0;
  if (jobs > 1) {
    while (depth < probe.slot_count() && (1 << depth) < 4 * jobs) ++depth;
    depth = std::min(depth, 8);
  }
  std::vector<std::vector<bool>> shards = probe.prefixes(depth);
  std::vector<ShardResult> results(shards.size());
  if (jobs == 1) {
    BoundedEnumerator walker(n, d, m);
    for (std::size_t s = 0; s < shards.size(); ++s)
      results[s] = shard_fn(walker, shards[s]);
    return results;
  }
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    BoundedEnumerator walker(n, d, m);
    while (true) {
      std::size_t s = next.fetch_add(1);
      if (s >= shards.size()) break;
      results[s] = shard_fn(walker, shards[s]);
    }
  };
  std::vector<std::thread> pool;
  int count = std::min<int>(jobs, static_cast<int>(shards.size()));
  pool.reserve(static_cast<std::size_t>(count));
  for (int t = 0; t < count; ++t) pool.emplace_back(worker);
  for (auto& th : pool) th.join();
  return results;
}

}  // namespace matchbound::detail
