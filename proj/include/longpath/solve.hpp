#pragma once

#include <optional>

#include "longpath/search.hpp"

namespace longpath {

enum class Variant {
  all_pairs,  // every root, search from every other vertex
  farthest,   // every root, one search from the vertex at maximum BFS distance
};

struct SolveConfig {
  Variant variant = Variant::all_pairs;
  TieBreakPolicy policy;
  bool improve = false;
  // When set, only roots 0..max_roots-1 are processed (budget control for
  // large instances). Must satisfy 1 <= max_roots <= n.
  std::optional<int> max_roots;
  // Roots are independent work units; with threads > 1 they are evaluated
  // concurrently and merged deterministically, so the result is identical to
  // a serial run.
  int threads = 1;
};

struct SolveStats {
  int roots_processed = 0;
  long long searches_run = 0;
  double wall_ms = 0.0;
};

struct SolveResult {
  Path best;
  int length = 0;
  int root = 0;   // root of the winning weighted graph
  int start = 0;  // start vertex of the winning search
  SolveStats stats;
};

// Winner selection is by length, ties broken toward the lexicographically
// smallest (root, start) pair, so serial and concurrent runs agree.
SolveResult solve_all_pairs(const Graph& g, const SolveConfig& cfg = {});
SolveResult solve_farthest(const Graph& g, const SolveConfig& cfg = {});
SolveResult solve(const Graph& g, const SolveConfig& cfg);  // dispatch on cfg.variant

// Insertion improvement: while some u not on p has edges to both ends of a
// consecutive pair, splice in the lowest-id such u at the leftmost insertable
// pair. Runs to a fixpoint; never shortens the path. Throws on an invalid
// input path.
Path improve_path(const Graph& g, const Path& p);

}  // namespace longpath
