#include "longpath/weight.hpp"

#include <stdexcept>

namespace longpath {

WeightedGraph build_weighted(const Graph& g, int root) {
  const int n = g.num_vertices();
  if (root < 0 || root >= n) throw std::invalid_argument("root out of range");

  WeightedGraph wg{root, n, std::vector<std::vector<WeightedEdge>>(n)};
  std::vector<char> expanded(n, 0);
  std::vector<char> enqueued(n, 0);
  struct QueueEntry {
    int vertex;
    int depth;
  };
  std::vector<QueueEntry> queue;
  queue.reserve(n);
  queue.push_back({root, 0});
  enqueued[root] = 1;

  for (std::size_t head = 0; head < queue.size(); ++head) {
    const auto [u, depth] = queue[head];
    expanded[u] = 1;
    for (int v : g.neighbors(u)) {
      if (expanded[v]) continue;
      // Edge recorded once per direction, on the side expanded first.
      wg.neighbors[u].push_back({v, depth + 1});
      wg.neighbors[v].push_back({u, depth + 1});
      if (!enqueued[v]) {
        queue.push_back({v, depth + 1});
        enqueued[v] = 1;
      }
    }
  }
  return wg;
}

}  // namespace longpath
