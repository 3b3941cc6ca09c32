#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace longpath {

// Distance marker for vertices outside the root's component.
inline constexpr int kUnreachable = -1;

// Thrown by the file parsers; the message carries a 1-based line number.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Thrown when a request is structurally impossible to serve (empty graph,
// instance over a solver cap, exhausted time budget).
class InfeasibleError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Simple undirected graph over dense 0-based vertex ids. Immutable after
// construction. Adjacency lists are sorted ascending and contain no
// duplicates and no self-loops.
class Graph {
 public:
  Graph() = default;

  // Builds a graph on n vertices from an edge list. Duplicate edges collapse
  // silently; self-loops and out-of-range endpoints throw.
  static Graph from_edges(int n, std::vector<std::pair<int, int>> edges);

  int num_vertices() const { return n_; }
  int num_edges() const { return m_; }
  const std::vector<int>& neighbors(int v) const { return adj_[v]; }
  int degree(int v) const { return static_cast<int>(adj_[v].size()); }
  bool has_edge(int u, int v) const;

 private:
  int n_ = 0;
  int m_ = 0;
  std::vector<std::vector<int>> adj_;
};

// Sequence of vertices. Valid when all entries are distinct and consecutive
// entries are adjacent; a single vertex is a valid path of length 0.
struct Path {
  std::vector<int> vertices;

  // Number of edges.
  int length() const { return static_cast<int>(vertices.size()) - 1; }

  friend bool operator==(const Path&, const Path&) = default;
};

// BFS hop distances from a fixed root; kUnreachable marks other components.
struct DistanceMap {
  int root = 0;
  std::vector<int> dist;
};

// Result of validate_path: ok, or a description of the first violation.
struct PathCheck {
  bool ok = false;
  std::string error;
};

enum class Family {
  path,
  cycle,
  complete,
  complete_bipartite,
  grid,
  dodecahedron,
  gnp,
  random_tree,
};

// Family-specific generator parameters; each family reads only its own
// fields (n: path/cycle/complete/gnp/random_tree, a+b: complete_bipartite,
// rows+cols: grid, p: gnp).
struct GenParams {
  int n = 0;
  int a = 0;
  int b = 0;
  int rows = 0;
  int cols = 0;
  double p = 0.0;
};

std::optional<Family> family_from_name(std::string_view name);
std::string_view family_name(Family family);

// Reads lines "u v" with '#' comments and blank lines ignored. A comment of
// the form "# n N" declares a minimum vertex count, so isolated trailing
// vertices survive a write/read round trip. Vertex ids are 0-based; the
// vertex count is max(declared, max id + 1).
Graph parse_edge_list(std::istream& in);

// DIMACS: one "p edge n m" line, then "e u v" lines with 1-based endpoints.
// The declared n is authoritative; a mismatch between the declared m and the
// number of distinct edges is reported through `warnings` and the actual
// count is used.
Graph parse_dimacs(std::istream& in, std::vector<std::string>* warnings = nullptr);

// Deterministic: identical (family, params, seed) yields an identical graph.
// The seed is consumed only by gnp and random_tree.
Graph generate(Family family, const GenParams& params, std::uint64_t seed = 0);

DistanceMap bfs_distances(const Graph& g, int root);

PathCheck validate_path(const Graph& g, const Path& p);

// Checks the representation invariants (sorted unique adjacency, symmetry,
// no loops, degree sum = 2m). Returns a description of the first violation,
// or nullopt if all hold.
std::optional<std::string> audit_graph(const Graph& g);

// Component label per vertex; labels are assigned in increasing order of the
// lowest vertex id in each component.
std::vector<int> component_ids(const Graph& g);
bool is_connected(const Graph& g);

// Writes "# n N" followed by one "u v" line per edge, u < v, ascending.
void write_edge_list(const Graph& g, std::ostream& out);

// Reads whitespace-separated vertex ids; '#' comments are skipped.
Path parse_path(std::istream& in);
std::string format_path(const Path& p);

}  // namespace longpath
