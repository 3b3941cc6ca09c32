#include "longpath/search.hpp"

#include <optional>
#include <random>
#include <stdexcept>

namespace longpath {

namespace {

std::uint64_t mix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ull;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
  return x ^ (x >> 31);
}

}  // namespace

SearchOutcome greedy_search(const WeightedGraph& wg, int start,
                            const TieBreakPolicy& policy, SearchScratch& scratch) {
  if (start < 0 || start >= wg.n) throw std::invalid_argument("search start out of range");

  auto& visited = scratch.visited;
  auto& stack = scratch.stack;
  auto& best = scratch.best;
  auto& ties = scratch.ties;
  visited.assign(wg.n, 0);
  stack.assign(1, start);
  best.assign(1, start);
  int best_length = 0;

  std::optional<std::mt19937_64> rng;
  if (policy.mode == TieBreak::seeded_random)
    rng.emplace(mix64(policy.seed ^ mix64(static_cast<std::uint64_t>(start))));

  while (!stack.empty()) {
    const int u = stack.back();
    visited[u] = 1;

    int chosen = -1;
    int max_weight = 0;  // all weights are >= 1, so 0 means dead end
    switch (policy.mode) {
      case TieBreak::first_seen:
        for (const auto& e : wg.neighbors[u])
          if (!visited[e.to] && e.weight > max_weight) {
            max_weight = e.weight;
            chosen = e.to;
          }
        break;
      case TieBreak::lowest_id:
        for (const auto& e : wg.neighbors[u]) {
          if (visited[e.to]) continue;
          if (e.weight > max_weight || (e.weight == max_weight && e.to < chosen)) {
            max_weight = e.weight;
            chosen = e.to;
          }
        }
        break;
      case TieBreak::seeded_random:
        ties.clear();
        for (const auto& e : wg.neighbors[u]) {
          if (visited[e.to]) continue;
          if (e.weight > max_weight) {
            max_weight = e.weight;
            ties.clear();
            ties.push_back(e.to);
          } else if (e.weight == max_weight) {
            ties.push_back(e.to);
          }
        }
        if (!ties.empty())
          chosen = ties.size() == 1 ? ties[0] : ties[(*rng)() % ties.size()];
        break;
    }

    if (chosen < 0) {
      stack.pop_back();
      continue;
    }
    stack.push_back(chosen);
    // The stack entry at index i always has depth i, so the new depth is its
    // position.
    const int depth = static_cast<int>(stack.size()) - 1;
    if (depth > best_length) {
      best_length = depth;
      best.assign(stack.begin(), stack.end());
    }
  }

  return {best_length, Path{std::vector<int>(best.begin(), best.end())}};
}

SearchOutcome greedy_search(const WeightedGraph& wg, int start, const TieBreakPolicy& policy) {
  SearchScratch scratch;
  return greedy_search(wg, start, policy, scratch);
}

}  // namespace longpath
