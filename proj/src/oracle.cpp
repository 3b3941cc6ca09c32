#include "longpath/oracle.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <string>

namespace longpath {

namespace {

using Clock = std::chrono::steady_clock;

struct Searcher {
  const Graph& g;
  int target;  // -1 for a free endpoint
  Clock::time_point deadline;

  std::vector<char> visited;
  std::vector<int> current;
  std::vector<int> best;
  long long ticks = 0;

  // reachability scratch
  std::vector<char> seen;
  std::vector<int> queue;

  Searcher(const Graph& graph, int t, Clock::time_point dl)
      : g(graph),
        target(t),
        deadline(dl),
        visited(graph.num_vertices(), 0),
        seen(graph.num_vertices(), 0) {
    queue.reserve(graph.num_vertices());
  }

  void check_budget() {
    if (Clock::now() > deadline)
      throw OracleBudgetExceeded(
          "time budget exceeded; best so far has length " +
              std::to_string(static_cast<int>(best.size()) - 1) + " (not proven optimal)",
          Path{best.empty() ? current : best});
  }

  // Number of unvisited vertices reachable from head through unvisited
  // vertices; also fills `seen` so target reachability can be read off.
  int reachable_unvisited(int head) {
    std::fill(seen.begin(), seen.end(), 0);
    queue.clear();
    int count = 0;
    for (int v : g.neighbors(head))
      if (!visited[v] && !seen[v]) {
        seen[v] = 1;
        queue.push_back(v);
        ++count;
      }
    for (std::size_t i = 0; i < queue.size(); ++i)
      for (int v : g.neighbors(queue[i]))
        if (!visited[v] && !seen[v]) {
          seen[v] = 1;
          queue.push_back(v);
          ++count;
        }
    return count;
  }

  void dfs(int u) {
    if ((++ticks & 1023) == 0) check_budget();

    const int edges_so_far = static_cast<int>(current.size()) - 1;
    const int best_edges = static_cast<int>(best.size()) - 1;
    if (target < 0) {
      if (edges_so_far > best_edges) best = current;
    } else if (u == target) {
      if (edges_so_far > best_edges) best = current;
      return;  // extending past the target can never be recorded
    }

    const int extra = reachable_unvisited(u);
    if (target >= 0 && !seen[target]) return;  // cannot complete
    if (edges_so_far + extra <= static_cast<int>(best.size()) - 1) return;

    for (int v : g.neighbors(u)) {
      if (visited[v]) continue;
      visited[v] = 1;
      current.push_back(v);
      dfs(v);
      current.pop_back();
      visited[v] = 0;
    }
  }

  void run_from(int s) {
    visited.assign(visited.size(), 0);
    visited[s] = 1;
    current.assign(1, s);
    dfs(s);
  }
};

void check_size(const Graph& g, const OracleLimits& limits, int hard_cap) {
  if (g.num_vertices() == 0) throw InfeasibleError("empty graph");
  const int cap = std::min(limits.max_vertices, hard_cap);
  if (g.num_vertices() > cap)
    throw OracleRefusal("instance has " + std::to_string(g.num_vertices()) +
                        " vertices, over the exact-solver cap of " + std::to_string(cap));
}

}  // namespace

Path exact_longest_path(const Graph& g, const OracleLimits& limits) {
  check_size(g, limits, limits.max_vertices);
  Searcher searcher(g, -1, Clock::now() + limits.time_budget);
  searcher.best.assign(1, 0);
  for (int s = 0; s < g.num_vertices(); ++s) {
    searcher.check_budget();
    searcher.run_from(s);
  }
  return Path{searcher.best};
}

std::optional<Path> exact_longest_path_between(const Graph& g, int s, int t,
                                               const OracleLimits& limits) {
  check_size(g, limits, limits.max_vertices);
  const int n = g.num_vertices();
  if (s < 0 || s >= n || t < 0 || t >= n) throw std::invalid_argument("endpoint out of range");
  if (s == t) throw std::invalid_argument("endpoints must differ");
  const auto dm = bfs_distances(g, s);
  if (dm.dist[t] == kUnreachable) return std::nullopt;

  Searcher searcher(g, t, Clock::now() + limits.time_budget);
  // Seed with the shortest s-t path: a valid lower bound that sharpens the
  // bound-based pruning from the start.
  std::vector<int> shortest(1, t);
  for (int v = t; v != s;) {
    for (int u : g.neighbors(v))
      if (dm.dist[u] == dm.dist[v] - 1) {
        v = u;
        break;
      }
    shortest.push_back(v);
  }
  std::reverse(shortest.begin(), shortest.end());
  searcher.best = std::move(shortest);
  searcher.run_from(s);
  return Path{searcher.best};
}

Path exact_longest_path_dp(const Graph& g, const OracleLimits& limits) {
  check_size(g, limits, 20);  // 2^n masks; memory grows past this
  const int n = g.num_vertices();
  const auto deadline = Clock::now() + limits.time_budget;

  std::vector<std::uint32_t> neighbor_mask(n, 0);
  for (int u = 0; u < n; ++u)
    for (int v : g.neighbors(u)) neighbor_mask[u] |= 1u << v;

  // endpoints[mask] = set of vertices that end a simple path visiting
  // exactly `mask`.
  std::vector<std::uint32_t> endpoints(std::size_t{1} << n, 0);
  for (int v = 0; v < n; ++v) endpoints[std::size_t{1} << v] = 1u << v;

  std::uint32_t best_mask = 1;
  int best_vertex = 0;
  int best_count = 1;
  bool out_of_time = false;

  const std::uint32_t full = (1u << n) - 1;
  for (std::uint32_t mask = 1; mask <= full; ++mask) {
    if ((mask & 0xFFFF) == 0 && Clock::now() > deadline) {
      out_of_time = true;
      break;
    }
    std::uint32_t ends = endpoints[mask];
    if (!ends) continue;
    const int count = std::popcount(mask);
    if (count > best_count) {
      best_count = count;
      best_mask = mask;
      best_vertex = std::countr_zero(ends);
    }
    while (ends) {
      const int v = std::countr_zero(ends);
      ends &= ends - 1;
      std::uint32_t extensions = neighbor_mask[v] & ~mask;
      while (extensions) {
        const int u = std::countr_zero(extensions);
        extensions &= extensions - 1;
        endpoints[mask | (1u << u)] |= 1u << u;
      }
    }
  }

  // Walk the winning mask backwards, peeling the end vertex at each step.
  std::vector<int> reversed;
  std::uint32_t mask = best_mask;
  int v = best_vertex;
  reversed.push_back(v);
  while (std::popcount(mask) > 1) {
    const std::uint32_t prev_mask = mask & ~(1u << v);
    const std::uint32_t predecessors = endpoints[prev_mask] & neighbor_mask[v];
    const int u = std::countr_zero(predecessors);
    reversed.push_back(u);
    mask = prev_mask;
    v = u;
  }
  std::reverse(reversed.begin(), reversed.end());
  if (out_of_time)
    throw OracleBudgetExceeded(
        "time budget exceeded; best so far has length " +
            std::to_string(static_cast<int>(reversed.size()) - 1) + " (not proven optimal)",
        Path{reversed});
  return Path{reversed};
}

}  // namespace longpath
