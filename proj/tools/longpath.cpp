#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "longpath/bench.hpp"
#include "longpath/oracle.hpp"
#include "longpath/solve.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;       // usage or parse errors
constexpr int kExitInfeasible = 2;  // caps, empty graph, exhausted budget

longpath::Graph load_graph(const std::string& file, const std::string& format) {
  std::ifstream in(file);
  if (!in) throw longpath::ParseError("cannot open " + file);
  if (format == "dimacs") {
    std::vector<std::string> warnings;
    auto g = longpath::parse_dimacs(in, &warnings);
    for (const auto& w : warnings) std::cerr << "warning: " << file << ": " << w << "\n";
    return g;
  }
  return longpath::parse_edge_list(in);
}

void dump_weights(const longpath::Graph& g, int root, const std::string& file) {
  const auto wg = longpath::build_weighted(g, root);
  std::ofstream out(file);
  if (!out) throw longpath::ParseError("cannot write " + file);
  out << "# n " << wg.n << "\n";
  out << "# root " << root << "\n";
  for (int u = 0; u < wg.n; ++u)
    for (const auto& e : wg.neighbors[u])
      if (u < e.to) out << u << " " << e.to << " " << e.weight << "\n";
}

int cmd_solve(const std::string& input, const std::string& format, const std::string& variant,
              const std::string& tie_break, std::uint64_t seed, bool improve,
              const std::string& weights_file) {
  const auto g = load_graph(input, format);

  longpath::SolveConfig cfg;
  cfg.variant = *longpath::variant_from_name(variant);
  cfg.policy = {*longpath::tie_break_from_name(tie_break), seed};
  cfg.improve = improve;
  const auto result = longpath::solve(g, cfg);

  // Self-check before reporting anything.
  const auto check = longpath::validate_path(g, result.best);
  if (!check.ok || result.best.length() != result.length) {
    std::cerr << "internal error: produced path failed verification: " << check.error << "\n";
    return kExitInfeasible;
  }
  if (!weights_file.empty()) dump_weights(g, result.root, weights_file);

  std::cout << "length: " << result.length << "\n";
  std::cout << longpath::format_path(result.best) << "\n";
  std::cerr << "roots=" << result.stats.roots_processed
            << " searches=" << result.stats.searches_run << " time_ms=" << result.stats.wall_ms
            << " root=" << result.root << " start=" << result.start << "\n";
  return kExitOk;
}

int cmd_exact(const std::string& input, const std::string& format, int max_n, double budget_s,
              bool use_dp) {
  const auto g = load_graph(input, format);
  longpath::OracleLimits limits;
  limits.max_vertices = max_n;
  limits.time_budget =
      std::chrono::milliseconds(static_cast<long long>(budget_s * 1000.0));
  const auto path = use_dp ? longpath::exact_longest_path_dp(g, limits)
                           : longpath::exact_longest_path(g, limits);
  std::cout << "length: " << path.length() << "\n";
  std::cout << longpath::format_path(path) << "\n";
  return kExitOk;
}

int cmd_gen(const std::string& family_name, const std::vector<std::string>& args,
            std::uint64_t seed) {
  const auto family = longpath::family_from_name(family_name);
  if (!family) throw CLI::ValidationError("gen", "unknown family '" + family_name + "'");

  std::size_t want = 0;
  switch (*family) {
    case longpath::Family::path:
    case longpath::Family::cycle:
    case longpath::Family::complete:
    case longpath::Family::random_tree:
      want = 1;
      break;
    case longpath::Family::complete_bipartite:
    case longpath::Family::grid:
    case longpath::Family::gnp:
      want = 2;
      break;
    case longpath::Family::dodecahedron:
      want = 0;
      break;
  }
  if (args.size() != want + 1)
    throw CLI::ValidationError(
        "gen", family_name + " expects " + std::to_string(want) + " parameter(s) and an output file");

  longpath::GenParams params;
  auto as_int = [&](const std::string& s) {
    std::size_t pos = 0;
    const int v = std::stoi(s, &pos);
    if (pos != s.size()) throw CLI::ValidationError("gen", "bad integer '" + s + "'");
    return v;
  };
  switch (*family) {
    case longpath::Family::path:
    case longpath::Family::cycle:
    case longpath::Family::complete:
    case longpath::Family::random_tree:
      params.n = as_int(args[0]);
      break;
    case longpath::Family::complete_bipartite:
      params.a = as_int(args[0]);
      params.b = as_int(args[1]);
      break;
    case longpath::Family::grid:
      params.rows = as_int(args[0]);
      params.cols = as_int(args[1]);
      break;
    case longpath::Family::gnp:
      params.n = as_int(args[0]);
      params.p = std::stod(args[1]);
      break;
    case longpath::Family::dodecahedron:
      break;
  }

  const auto g = longpath::generate(*family, params, seed);
  const std::string& output = args.back();
  std::ofstream out(output);
  if (!out) throw longpath::ParseError("cannot write " + output);
  longpath::write_edge_list(g, out);
  return kExitOk;
}

int cmd_verify(const std::string& graph_file, const std::string& path_file,
               const std::string& format) {
  const auto g = load_graph(graph_file, format);
  std::ifstream in(path_file);
  if (!in) throw longpath::ParseError("cannot open " + path_file);
  const auto p = longpath::parse_path(in);
  const auto check = longpath::validate_path(g, p);
  if (!check.ok) {
    std::cerr << "invalid path: " << check.error << "\n";
    return kExitUsage;
  }
  std::cout << "ok: valid path of length " << p.length() << "\n";
  return kExitOk;
}

int cmd_bench(const std::string& suite_arg, const std::string& csv_file) {
  longpath::BenchSuite suite;
  if (suite_arg == "smoke") {
    suite = longpath::smoke_suite();
  } else if (suite_arg == "scaling") {
    suite = longpath::scaling_suite();
  } else {
    std::ifstream in(suite_arg);
    if (!in) throw longpath::ParseError("cannot open suite " + suite_arg);
    suite = longpath::parse_suite(in);
  }
  const auto records = longpath::run_suite(suite);
  if (csv_file.empty()) {
    longpath::write_csv(records, std::cout);
  } else {
    std::ofstream out(csv_file);
    if (!out) throw longpath::ParseError("cannot write " + csv_file);
    longpath::write_csv(records, out);
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"greedy longest-path heuristic for undirected graphs"};
  app.require_subcommand(1);

  std::string input, format = "edgelist", variant = "all-pairs", tie_break = "first";
  std::string weights_file, path_file, csv_file, suite = "smoke", family;
  std::vector<std::string> gen_args;
  std::uint64_t seed = 0;
  bool improve = false, use_dp = false;
  int max_n = 18;
  double budget_s = 30.0;

  auto* solve = app.add_subcommand("solve", "run the greedy heuristic on a graph file");
  solve->add_option("input", input, "graph file")->required();
  solve->add_option("--variant", variant, "all-pairs | farthest")
      ->check(CLI::IsMember({"all-pairs", "farthest"}));
  solve->add_option("--tie-break", tie_break, "first | lowest | random")
      ->check(CLI::IsMember({"first", "lowest", "random"}));
  solve->add_option("--seed", seed, "seed for --tie-break random");
  solve->add_flag("--improve", improve, "apply the insertion improvement pass");
  solve->add_option("--format", format, "edgelist | dimacs")
      ->check(CLI::IsMember({"edgelist", "dimacs"}));
  solve->add_option("--dump-weights", weights_file,
                    "write the winning root's weighted graph as \"u v w\" lines");

  auto* exact = app.add_subcommand("exact", "exhaustive exact solver (small graphs only)");
  exact->add_option("input", input, "graph file")->required();
  exact->add_option("--max-n", max_n, "refuse instances with more vertices");
  exact->add_option("--budget", budget_s, "time budget in seconds");
  exact->add_flag("--dp", use_dp, "use the bitmask dynamic program (n <= 20)");
  exact->add_option("--format", format, "edgelist | dimacs")
      ->check(CLI::IsMember({"edgelist", "dimacs"}));

  auto* gen = app.add_subcommand("gen", "generate a graph file");
  gen->add_option("family", family,
                  "path | cycle | complete | complete-bipartite | grid | dodecahedron | gnp | "
                  "random-tree")
      ->required();
  gen->add_option("args", gen_args, "family parameters followed by the output file");
  gen->add_option("--seed", seed, "seed for gnp and random-tree");

  auto* verify = app.add_subcommand("verify", "check a path file against a graph file");
  verify->add_option("graph", input, "graph file")->required();
  verify->add_option("path", path_file, "path file (space-separated vertex ids)")->required();
  verify->add_option("--format", format, "edgelist | dimacs")
      ->check(CLI::IsMember({"edgelist", "dimacs"}));

  auto* bench = app.add_subcommand("bench", "run a benchmark suite and emit CSV");
  bench->add_option("suite", suite, "smoke | scaling | path to a JSON suite spec");
  bench->add_option("--csv", csv_file, "write CSV here instead of stdout");

  try {
    app.parse(argc, argv);
    if (solve->parsed())
      return cmd_solve(input, format, variant, tie_break, seed, improve, weights_file);
    if (exact->parsed()) return cmd_exact(input, format, max_n, budget_s, use_dp);
    if (gen->parsed()) return cmd_gen(family, gen_args, seed);
    if (verify->parsed()) return cmd_verify(input, path_file, format);
    if (bench->parsed()) return cmd_bench(suite, csv_file);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  } catch (const longpath::InfeasibleError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInfeasible;
  } catch (const longpath::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
