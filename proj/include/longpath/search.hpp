#pragma once

#include "longpath/weight.hpp"

namespace longpath {

// Rule for selecting among multiple unvisited neighbors of maximum weight.
// first_seen keeps the first maximizer in adjacency order (the strict ">"
// selection of a plain scan); lowest_id keeps the smallest vertex id;
// seeded_random draws uniformly among the maximizers from a generator
// seeded by (seed, start vertex), so repeated calls are reproducible.
enum class TieBreak {
  first_seen,
  lowest_id,
  seeded_random,
};

struct TieBreakPolicy {
  TieBreak mode = TieBreak::first_seen;
  std::uint64_t seed = 0;  // consumed by seeded_random only
};

// Deepest stack prefix reached by one greedy walk. best_path starts at the
// walk's start vertex and is a simple path in the source graph.
struct SearchOutcome {
  int best_length = 0;
  Path best_path;
};

// Reusable buffers for greedy_search. One instance per thread; sharing one
// across sequential calls avoids reallocating the visited array.
struct SearchScratch {
  std::vector<char> visited;
  std::vector<int> stack;
  std::vector<int> best;
  std::vector<int> ties;
};

// Non-revisiting max-weight-first stack walk over wg. Pushes start, then
// repeatedly pushes the policy-selected maximum-weight unvisited neighbor of
// the stack top, popping on dead ends; visited marks are never cleared. The
// best stack prefix is copied out whenever the stack reaches a new maximum
// depth. A start with no adjacency yields length 0 and path {start}.
SearchOutcome greedy_search(const WeightedGraph& wg, int start,
                            const TieBreakPolicy& policy, SearchScratch& scratch);
SearchOutcome greedy_search(const WeightedGraph& wg, int start,
                            const TieBreakPolicy& policy = {});

}  // namespace longpath
