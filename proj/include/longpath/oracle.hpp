#pragma once

#include <chrono>
#include <optional>

#include "longpath/graph.hpp"

namespace longpath {

// Caps for the exhaustive solver; it refuses oversized instances rather than
// running unbounded.
struct OracleLimits {
  int max_vertices = 18;
  std::chrono::milliseconds time_budget{30000};
};

class OracleRefusal : public InfeasibleError {
 public:
  using InfeasibleError::InfeasibleError;
};

// Carries the longest path seen before the budget ran out; that path is
// valid but not proven optimal.
class OracleBudgetExceeded : public InfeasibleError {
 public:
  OracleBudgetExceeded(const std::string& msg, Path best)
      : InfeasibleError(msg), best_so_far(std::move(best)) {}

  Path best_so_far;
};

// Exhaustive longest simple path by depth-first enumeration, pruned with the
// bound current edges + unvisited vertices still reachable from the head.
// Any one optimum may be returned; the choice is deterministic.
Path exact_longest_path(const Graph& g, const OracleLimits& limits = {});

// Longest simple s-t path, or nullopt when t is in a different component.
std::optional<Path> exact_longest_path_between(const Graph& g, int s, int t,
                                               const OracleLimits& limits = {});

// Bitmask dynamic program over endpoint sets; same contract as
// exact_longest_path but capped at 20 vertices.
Path exact_longest_path_dp(const Graph& g, const OracleLimits& limits = {});

}  // namespace longpath
