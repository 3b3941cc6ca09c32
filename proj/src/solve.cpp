#include "longpath/solve.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <stdexcept>
#include <thread>

namespace longpath {

namespace {

struct Candidate {
  int length = -1;
  int root = 0;
  int start = 0;
  Path path;
};

bool better(const Candidate& a, const Candidate& b) {
  if (a.length != b.length) return a.length > b.length;
  if (a.root != b.root) return a.root < b.root;
  return a.start < b.start;
}

Candidate run_root(const Graph& g, int root, Variant variant,
                   const TieBreakPolicy& policy, SearchScratch& scratch,
                   long long& searches) {
  const int n = g.num_vertices();
  const WeightedGraph wg = build_weighted(g, root);
  Candidate cand;
  if (variant == Variant::all_pairs) {
    for (int j = 0; j < n; ++j) {
      if (j == root) continue;
      auto outcome = greedy_search(wg, j, policy, scratch);
      ++searches;
      if (outcome.best_length > cand.length) {
        cand = {outcome.best_length, root, j, std::move(outcome.best_path)};
      }
    }
  } else {
    const DistanceMap dm = bfs_distances(g, root);
    int farthest = root;
    for (int v = 0; v < n; ++v)
      if (dm.dist[v] != kUnreachable && dm.dist[v] > dm.dist[farthest]) farthest = v;
    auto outcome = greedy_search(wg, farthest, policy, scratch);
    ++searches;
    if (farthest == root && n > 1) {
      // Isolated root: nothing reachable, so this root contributes a zero
      // length path rooted elsewhere, matching what the all-pairs loop
      // would report for it.
      const int fallback = root == 0 ? 1 : 0;
      cand = {0, root, fallback, Path{{fallback}}};
    } else {
      cand = {outcome.best_length, root, farthest, std::move(outcome.best_path)};
    }
  }
  return cand;
}

SolveResult run(const Graph& g, const SolveConfig& cfg, Variant variant) {
  const auto t0 = std::chrono::steady_clock::now();
  const int n = g.num_vertices();
  if (n == 0) throw InfeasibleError("empty graph");
  if (cfg.threads < 1) throw std::invalid_argument("threads must be >= 1");
  if (cfg.max_roots && (*cfg.max_roots < 1 || *cfg.max_roots > n))
    throw std::invalid_argument("max_roots must be in [1, n]");

  SolveResult result;
  if (n == 1) {
    result.best = Path{{0}};
    result.length = 0;
    result.root = 0;
    result.start = 0;
    result.stats.roots_processed = 1;
    result.stats.wall_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    return result;
  }

  const int roots = cfg.max_roots.value_or(n);
  std::vector<Candidate> per_root(roots);
  std::atomic<long long> total_searches{0};

  auto worker = [&](int begin, int end) {
    SearchScratch scratch;
    long long searches = 0;
    for (int i = begin; i < end; ++i)
      per_root[i] = run_root(g, i, variant, cfg.policy, scratch, searches);
    total_searches += searches;
  };

  const int threads = std::min(cfg.threads, roots);
  if (threads <= 1) {
    worker(0, roots);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(threads);
    const int chunk = (roots + threads - 1) / threads;
    for (int t = 0; t < threads; ++t) {
      const int begin = t * chunk;
      const int end = std::min(roots, begin + chunk);
      if (begin < end) pool.emplace_back(worker, begin, end);
    }
    for (auto& th : pool) th.join();
  }

  Candidate winner;
  for (auto& cand : per_root)
    if (winner.length < 0 || better(cand, winner)) winner = std::move(cand);

  if (cfg.improve) {
    winner.path = improve_path(g, winner.path);
    winner.length = winner.path.length();
  }

  result.best = std::move(winner.path);
  result.length = winner.length;
  result.root = winner.root;
  result.start = winner.start;
  result.stats.roots_processed = roots;
  result.stats.searches_run = total_searches.load();
  result.stats.wall_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  return result;
}

}  // namespace

SolveResult solve_all_pairs(const Graph& g, const SolveConfig& cfg) {
  return run(g, cfg, Variant::all_pairs);
}

SolveResult solve_farthest(const Graph& g, const SolveConfig& cfg) {
  return run(g, cfg, Variant::farthest);
}

SolveResult solve(const Graph& g, const SolveConfig& cfg) {
  return run(g, cfg, cfg.variant);
}

Path improve_path(const Graph& g, const Path& p) {
  const auto check = validate_path(g, p);
  if (!check.ok) throw std::invalid_argument("improve_path: " + check.error);

  std::vector<int> vertices = p.vertices;
  std::vector<char> on_path(g.num_vertices(), 0);
  for (int v : vertices) on_path[v] = 1;

  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i + 1 < vertices.size(); ++i) {
      const int a = vertices[i];
      const int b = vertices[i + 1];
      int candidate = -1;
      for (int u : g.neighbors(a)) {  // ascending, so the first hit is lowest-id
        if (!on_path[u] && g.has_edge(u, b)) {
          candidate = u;
          break;
        }
      }
      if (candidate >= 0) {
        vertices.insert(vertices.begin() + static_cast<std::ptrdiff_t>(i) + 1, candidate);
        on_path[candidate] = 1;
        changed = true;
        break;  // rescan from the leftmost pair
      }
    }
  }
  return Path{vertices};
}

}  // namespace longpath
