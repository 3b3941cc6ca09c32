#include "longpath/graph.hpp"

#include <algorithm>
#include <charconv>
#include <istream>
#include <ostream>
#include <random>
#include <sstream>

namespace longpath {

namespace {

std::vector<std::string> tokenize(const std::string& line) {
  std::vector<std::string> tokens;
  std::istringstream iss(line);
  std::string tok;
  while (iss >> tok) tokens.push_back(tok);
  return tokens;
}

bool parse_int(const std::string& tok, int& out) {
  const char* first = tok.data();
  const char* last = tok.data() + tok.size();
  auto [ptr, ec] = std::from_chars(first, last, out);
  return ec == std::errc() && ptr == last;
}

bool parse_vertex(const std::string& tok, int& out) {
  return parse_int(tok, out) && out >= 0;
}

[[noreturn]] void fail_line(int lineno, const std::string& what) {
  throw ParseError("line " + std::to_string(lineno) + ": " + what);
}

}  // namespace

Graph Graph::from_edges(int n, std::vector<std::pair<int, int>> edges) {
  if (n < 0) throw std::invalid_argument("vertex count must be non-negative");
  for (auto& [u, v] : edges) {
    if (u < 0 || u >= n || v < 0 || v >= n)
      throw std::invalid_argument("edge endpoint out of range: (" +
                                  std::to_string(u) + ", " + std::to_string(v) + ")");
    if (u == v)
      throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
    if (u > v) std::swap(u, v);
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());

  Graph g;
  g.n_ = n;
  g.m_ = static_cast<int>(edges.size());
  g.adj_.assign(n, {});
  for (auto [u, v] : edges) {
    g.adj_[u].push_back(v);
    g.adj_[v].push_back(u);
  }
  for (auto& list : g.adj_) std::sort(list.begin(), list.end());
  return g;
}

bool Graph::has_edge(int u, int v) const {
  if (u < 0 || u >= n_ || v < 0 || v >= n_) return false;
  const auto& list = adj_[u];
  return std::binary_search(list.begin(), list.end(), v);
}

std::optional<Family> family_from_name(std::string_view name) {
  if (name == "path") return Family::path;
  if (name == "cycle") return Family::cycle;
  if (name == "complete") return Family::complete;
  if (name == "complete-bipartite" || name == "complete_bipartite")
    return Family::complete_bipartite;
  if (name == "grid") return Family::grid;
  if (name == "dodecahedron") return Family::dodecahedron;
  if (name == "gnp") return Family::gnp;
  if (name == "random-tree" || name == "random_tree") return Family::random_tree;
  return std::nullopt;
}

std::string_view family_name(Family family) {
  switch (family) {
    case Family::path: return "path";
    case Family::cycle: return "cycle";
    case Family::complete: return "complete";
    case Family::complete_bipartite: return "complete-bipartite";
    case Family::grid: return "grid";
    case Family::dodecahedron: return "dodecahedron";
    case Family::gnp: return "gnp";
    case Family::random_tree: return "random-tree";
  }
  return "?";
}

Graph parse_edge_list(std::istream& in) {
  std::vector<std::pair<int, int>> edges;
  int declared_n = 0;
  int max_id = -1;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    if (line[first] == '#') {
      // "# n N" pins the vertex count.
      auto tokens = tokenize(line.substr(first + 1));
      int declared = 0;
      if (tokens.size() == 2 && tokens[0] == "n" && parse_vertex(tokens[1], declared))
        declared_n = std::max(declared_n, declared);
      continue;
    }
    auto tokens = tokenize(line);
    int u = 0, v = 0;
    if (tokens.size() != 2 || !parse_vertex(tokens[0], u) || !parse_vertex(tokens[1], v))
      fail_line(lineno, "expected two non-negative integers \"u v\"");
    if (u == v) fail_line(lineno, "self-loop " + std::to_string(u) + " " + std::to_string(v));
    max_id = std::max({max_id, u, v});
    edges.emplace_back(u, v);
  }
  return Graph::from_edges(std::max(declared_n, max_id + 1), std::move(edges));
}

Graph parse_dimacs(std::istream& in, std::vector<std::string>* warnings) {
  std::vector<std::pair<int, int>> edges;
  bool have_p = false;
  int n = 0;
  int declared_m = 0;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto tokens = tokenize(line);
    if (tokens.empty() || tokens[0] == "c") continue;
    if (tokens[0] == "p") {
      if (have_p) fail_line(lineno, "duplicate p line");
      if (tokens.size() != 4 || tokens[1] != "edge" ||
          !parse_vertex(tokens[2], n) || !parse_vertex(tokens[3], declared_m))
        fail_line(lineno, "expected \"p edge n m\"");
      have_p = true;
    } else if (tokens[0] == "e") {
      if (!have_p) fail_line(lineno, "edge before p line (missing p-line)");
      int u = 0, v = 0;
      if (tokens.size() != 3 || !parse_vertex(tokens[1], u) || !parse_vertex(tokens[2], v))
        fail_line(lineno, "expected \"e u v\"");
      if (u < 1 || u > n || v < 1 || v > n)
        fail_line(lineno, "edge endpoint outside [1, " + std::to_string(n) + "]");
      if (u == v) fail_line(lineno, "self-loop e " + std::to_string(u) + " " + std::to_string(v));
      edges.emplace_back(u - 1, v - 1);
    } else {
      fail_line(lineno, "unrecognized line type '" + tokens[0] + "'");
    }
  }
  if (!have_p) throw ParseError("missing p-line");
  Graph g = Graph::from_edges(n, std::move(edges));
  if (warnings && g.num_edges() != declared_m)
    warnings->push_back("p line declares m=" + std::to_string(declared_m) + " but " +
                        std::to_string(g.num_edges()) + " distinct edges found; using actual count");
  return g;
}

namespace {

[[noreturn]] void bad_params(Family family, const std::string& constraint) {
  throw std::invalid_argument(std::string(family_name(family)) + ": " + constraint);
}

// Skeleton of the regular dodecahedron: outer 10-cycle 0..9, spokes
// i <-> 10+i, inner ring 10+i <-> 10+((i+2) mod 10). 20 vertices, 30 edges,
// 3-regular.
constexpr std::pair<int, int> kDodecahedronEdges[30] = {
    {0, 1},   {1, 2},   {2, 3},   {3, 4},   {4, 5},
    {5, 6},   {6, 7},   {7, 8},   {8, 9},   {9, 0},
    {0, 10},  {1, 11},  {2, 12},  {3, 13},  {4, 14},
    {5, 15},  {6, 16},  {7, 17},  {8, 18},  {9, 19},
    {10, 12}, {11, 13}, {12, 14}, {13, 15}, {14, 16},
    {15, 17}, {16, 18}, {17, 19}, {18, 10}, {19, 11},
};

}  // namespace

Graph generate(Family family, const GenParams& params, std::uint64_t seed) {
  std::vector<std::pair<int, int>> edges;
  switch (family) {
    case Family::path: {
      if (params.n < 1) bad_params(family, "requires n >= 1");
      for (int i = 0; i + 1 < params.n; ++i) edges.emplace_back(i, i + 1);
      return Graph::from_edges(params.n, std::move(edges));
    }
    case Family::cycle: {
      if (params.n < 3) bad_params(family, "requires n >= 3");
      for (int i = 0; i < params.n; ++i) edges.emplace_back(i, (i + 1) % params.n);
      return Graph::from_edges(params.n, std::move(edges));
    }
    case Family::complete: {
      if (params.n < 1) bad_params(family, "requires n >= 1");
      for (int u = 0; u < params.n; ++u)
        for (int v = u + 1; v < params.n; ++v) edges.emplace_back(u, v);
      return Graph::from_edges(params.n, std::move(edges));
    }
    case Family::complete_bipartite: {
      if (params.a < 1 || params.b < 1) bad_params(family, "requires a >= 1 and b >= 1");
      for (int u = 0; u < params.a; ++u)
        for (int v = 0; v < params.b; ++v) edges.emplace_back(u, params.a + v);
      return Graph::from_edges(params.a + params.b, std::move(edges));
    }
    case Family::grid: {
      if (params.rows < 1 || params.cols < 1) bad_params(family, "requires rows >= 1 and cols >= 1");
      auto id = [&](int r, int c) { return r * params.cols + c; };
      for (int r = 0; r < params.rows; ++r)
        for (int c = 0; c < params.cols; ++c) {
          if (c + 1 < params.cols) edges.emplace_back(id(r, c), id(r, c + 1));
          if (r + 1 < params.rows) edges.emplace_back(id(r, c), id(r + 1, c));
        }
      return Graph::from_edges(params.rows * params.cols, std::move(edges));
    }
    case Family::dodecahedron: {
      edges.assign(std::begin(kDodecahedronEdges), std::end(kDodecahedronEdges));
      return Graph::from_edges(20, std::move(edges));
    }
    case Family::gnp: {
      if (params.n < 1) bad_params(family, "requires n >= 1");
      if (params.p < 0.0 || params.p > 1.0) bad_params(family, "requires 0 <= p <= 1");
      std::mt19937_64 rng(seed);
      // Compare 53-bit draws against p * 2^53 so inclusion is exactly
      // reproducible for a given seed.
      const auto threshold = static_cast<std::uint64_t>(params.p * 9007199254740992.0);
      for (int u = 0; u < params.n; ++u)
        for (int v = u + 1; v < params.n; ++v) {
          const bool take = params.p >= 1.0 ||
                            (params.p > 0.0 && (rng() >> 11) < threshold);
          if (take) edges.emplace_back(u, v);
        }
      return Graph::from_edges(params.n, std::move(edges));
    }
    case Family::random_tree: {
      if (params.n < 1) bad_params(family, "requires n >= 1");
      std::mt19937_64 rng(seed);
      for (int v = 1; v < params.n; ++v)
        edges.emplace_back(static_cast<int>(rng() % static_cast<std::uint64_t>(v)), v);
      return Graph::from_edges(params.n, std::move(edges));
    }
  }
  throw std::invalid_argument("unknown family");
}

DistanceMap bfs_distances(const Graph& g, int root) {
  const int n = g.num_vertices();
  if (root < 0 || root >= n) throw std::invalid_argument("bfs root out of range");
  DistanceMap dm{root, std::vector<int>(n, kUnreachable)};
  std::vector<int> queue;
  queue.reserve(n);
  queue.push_back(root);
  dm.dist[root] = 0;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const int u = queue[head];
    for (int v : g.neighbors(u)) {
      if (dm.dist[v] != kUnreachable) continue;
      dm.dist[v] = dm.dist[u] + 1;
      queue.push_back(v);
    }
  }
  return dm;
}

PathCheck validate_path(const Graph& g, const Path& p) {
  if (p.vertices.empty()) return {false, "empty path"};
  std::vector<char> seen(g.num_vertices(), 0);
  for (std::size_t i = 0; i < p.vertices.size(); ++i) {
    const int v = p.vertices[i];
    if (v < 0 || v >= g.num_vertices())
      return {false, "vertex " + std::to_string(v) + " out of range at index " + std::to_string(i)};
    if (seen[v])
      return {false, "repeated vertex " + std::to_string(v) + " at index " + std::to_string(i)};
    seen[v] = 1;
    if (i > 0 && !g.has_edge(p.vertices[i - 1], v))
      return {false, "missing edge (" + std::to_string(p.vertices[i - 1]) + ", " +
                         std::to_string(v) + ") at index " + std::to_string(i - 1)};
  }
  return {true, {}};
}

std::optional<std::string> audit_graph(const Graph& g) {
  long long degree_sum = 0;
  for (int u = 0; u < g.num_vertices(); ++u) {
    const auto& list = g.neighbors(u);
    degree_sum += static_cast<long long>(list.size());
    for (std::size_t i = 0; i < list.size(); ++i) {
      const int v = list[i];
      if (v < 0 || v >= g.num_vertices())
        return "neighbor " + std::to_string(v) + " of " + std::to_string(u) + " out of range";
      if (v == u) return "self-loop at vertex " + std::to_string(u);
      if (i > 0 && list[i - 1] >= v)
        return "adjacency of " + std::to_string(u) + " not strictly ascending";
      if (!g.has_edge(v, u))
        return "edge (" + std::to_string(u) + ", " + std::to_string(v) + ") not symmetric";
    }
  }
  if (degree_sum != 2LL * g.num_edges())
    return "degree sum " + std::to_string(degree_sum) + " != 2m";
  return std::nullopt;
}

std::vector<int> component_ids(const Graph& g) {
  const int n = g.num_vertices();
  std::vector<int> comp(n, -1);
  std::vector<int> queue;
  int next = 0;
  for (int s = 0; s < n; ++s) {
    if (comp[s] != -1) continue;
    comp[s] = next;
    queue.assign(1, s);
    for (std::size_t head = 0; head < queue.size(); ++head)
      for (int v : g.neighbors(queue[head]))
        if (comp[v] == -1) {
          comp[v] = next;
          queue.push_back(v);
        }
    ++next;
  }
  return comp;
}

bool is_connected(const Graph& g) {
  if (g.num_vertices() <= 1) return true;
  const auto comp = component_ids(g);
  return std::all_of(comp.begin(), comp.end(), [](int c) { return c == 0; });
}

void write_edge_list(const Graph& g, std::ostream& out) {
  out << "# n " << g.num_vertices() << "\n";
  for (int u = 0; u < g.num_vertices(); ++u)
    for (int v : g.neighbors(u))
      if (u < v) out << u << " " << v << "\n";
}

Path parse_path(std::istream& in) {
  Path p;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    for (const auto& tok : tokenize(line)) {
      int v = 0;
      if (!parse_vertex(tok, v)) fail_line(lineno, "expected vertex id, got '" + tok + "'");
      p.vertices.push_back(v);
    }
  }
  return p;
}

std::string format_path(const Path& p) {
  std::string out;
  for (std::size_t i = 0; i < p.vertices.size(); ++i) {
    if (i > 0) out += ' ';
    out += std::to_string(p.vertices[i]);
  }
  return out;
}

}  // namespace longpath
