#pragma once

#include "longpath/graph.hpp"

namespace longpath {

struct WeightedEdge {
  int to = 0;
  int weight = 0;

  friend bool operator==(const WeightedEdge&, const WeightedEdge&) = default;
};

// Per-root derivative of a Graph. Contains exactly the edges of the root's
// component, each direction stored once, weighted with the BFS depth of the
// endpoint expanded first plus one, i.e. w(u, v) = min(d(root, u),
// d(root, v)) + 1. Vertices outside the root's component keep an empty
// adjacency so all per-root graphs share one id space. Adjacency order is
// BFS discovery order, which the greedy tie-break observes.
struct WeightedGraph {
  int root = 0;
  int n = 0;
  std::vector<std::vector<WeightedEdge>> neighbors;
};

// One rooted BFS pass over g. Pure function of (g, root); scratch state is
// per-call, so distinct roots may be processed concurrently.
WeightedGraph build_weighted(const Graph& g, int root);

}  // namespace longpath
