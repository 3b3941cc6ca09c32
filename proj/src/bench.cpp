#include "longpath/bench.hpp"

#include <chrono>
#include <cmath>
#include <istream>
#include <ostream>
#include <sstream>

#include <json.hpp>

#include "longpath/oracle.hpp"

namespace longpath {

namespace {

std::string default_label(const BenchInstance& inst) {
  std::ostringstream out;
  out << family_name(inst.family);
  switch (inst.family) {
    case Family::path:
    case Family::cycle:
    case Family::complete:
      out << "_n" << inst.params.n;
      break;
    case Family::complete_bipartite:
      out << "_a" << inst.params.a << "_b" << inst.params.b;
      break;
    case Family::grid:
      out << "_" << inst.params.rows << "x" << inst.params.cols;
      break;
    case Family::dodecahedron:
      break;
    case Family::gnp:
      out << "_n" << inst.params.n << "_p" << inst.params.p << "_s" << inst.seed;
      break;
    case Family::random_tree:
      out << "_n" << inst.params.n << "_s" << inst.seed;
      break;
  }
  return out.str();
}

}  // namespace

std::string_view variant_name(Variant v) {
  return v == Variant::all_pairs ? "all-pairs" : "farthest";
}

std::optional<Variant> variant_from_name(std::string_view name) {
  if (name == "all-pairs" || name == "all_pairs") return Variant::all_pairs;
  if (name == "farthest") return Variant::farthest;
  return std::nullopt;
}

std::string_view tie_break_name(TieBreak mode) {
  switch (mode) {
    case TieBreak::first_seen: return "first";
    case TieBreak::lowest_id: return "lowest";
    case TieBreak::seeded_random: return "random";
  }
  return "?";
}

std::optional<TieBreak> tie_break_from_name(std::string_view name) {
  if (name == "first") return TieBreak::first_seen;
  if (name == "lowest") return TieBreak::lowest_id;
  if (name == "random") return TieBreak::seeded_random;
  return std::nullopt;
}

BenchSuite smoke_suite() {
  BenchSuite suite;
  suite.instances = {
      {"", Family::path, {.n = 8}, 0},
      {"", Family::cycle, {.n = 8}, 0},
      {"", Family::complete, {.n = 8}, 0},
      {"", Family::complete_bipartite, {.a = 3, .b = 3}, 0},
      {"", Family::grid, {.rows = 3, .cols = 4}, 0},
      {"", Family::dodecahedron, {}, 0},
      {"", Family::gnp, {.n = 12, .p = 0.3}, 1},
      {"", Family::gnp, {.n = 12, .p = 0.3}, 2},
      {"", Family::random_tree, {.n = 12}, 3},
  };
  suite.variants = {Variant::all_pairs, Variant::farthest};
  suite.policies = {{TieBreak::first_seen, 0}, {TieBreak::seeded_random, 5}};
  suite.oracle_max_n = 14;
  return suite;
}

BenchSuite scaling_suite(int repeats) {
  BenchSuite suite;
  for (int n : {100, 200, 400})
    suite.instances.push_back({"", Family::gnp, {.n = n, .p = 0.1}, 11});
  suite.variants = {Variant::all_pairs, Variant::farthest};
  suite.policies = {{TieBreak::first_seen, 0}};
  suite.oracle_max_n = 0;  // exact reference is out of reach at this scale
  // Fixed root sample: with all n roots the all-pairs cost grows with an
  // extra factor of n, which would swamp the per-root trend the suite is
  // meant to expose.
  suite.max_roots = 24;
  suite.repeats = repeats;
  return suite;
}

BenchSuite parse_suite(std::istream& in) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("suite: ") + e.what());
  }
  try {
    BenchSuite suite;
    for (const auto& item : doc.at("instances")) {
      BenchInstance inst;
      const auto family = family_from_name(item.at("family").get<std::string>());
      if (!family) throw ParseError("suite: unknown family " + item.at("family").dump());
      inst.family = *family;
      switch (*family) {
        case Family::path:
        case Family::cycle:
        case Family::complete:
        case Family::random_tree:
          inst.params.n = item.at("n").get<int>();
          break;
        case Family::complete_bipartite:
          inst.params.a = item.at("a").get<int>();
          inst.params.b = item.at("b").get<int>();
          break;
        case Family::grid:
          inst.params.rows = item.at("rows").get<int>();
          inst.params.cols = item.at("cols").get<int>();
          break;
        case Family::dodecahedron:
          break;
        case Family::gnp:
          inst.params.n = item.at("n").get<int>();
          inst.params.p = item.at("p").get<double>();
          break;
      }
      inst.seed = item.value("seed", std::uint64_t{0});
      inst.label = item.value("label", std::string{});
      suite.instances.push_back(std::move(inst));
    }
    for (const auto& name : doc.at("variants")) {
      const auto variant = variant_from_name(name.get<std::string>());
      if (!variant) throw ParseError("suite: unknown variant " + name.dump());
      suite.variants.push_back(*variant);
    }
    for (const auto& item : doc.at("policies")) {
      const auto mode = tie_break_from_name(item.at("mode").get<std::string>());
      if (!mode) throw ParseError("suite: unknown tie-break mode " + item.at("mode").dump());
      if (item.contains("seeds")) {
        for (const auto& seed : item.at("seeds"))
          suite.policies.push_back({*mode, seed.get<std::uint64_t>()});
      } else {
        suite.policies.push_back({*mode, item.value("seed", std::uint64_t{0})});
      }
    }
    suite.oracle_max_n = doc.value("oracle_max_n", 14);
    if (doc.contains("max_roots") && !doc.at("max_roots").is_null())
      suite.max_roots = doc.at("max_roots").get<int>();
    suite.repeats = doc.value("repeats", 1);
    if (suite.instances.empty() || suite.variants.empty() || suite.policies.empty())
      throw ParseError("suite: instances, variants and policies must be non-empty");
    if (suite.repeats < 1) throw ParseError("suite: repeats must be >= 1");
    return suite;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("suite: ") + e.what());
  }
}

std::vector<BenchRecord> run_suite(const BenchSuite& suite) {
  std::vector<BenchRecord> records;
  for (const auto& inst : suite.instances) {
    const Graph g = generate(inst.family, inst.params, inst.seed);
    const std::string label = inst.label.empty() ? default_label(inst) : inst.label;

    std::optional<int> oracle_length;
    if (g.num_vertices() <= suite.oracle_max_n) {
      try {
        oracle_length = exact_longest_path(g).length();
      } catch (const OracleBudgetExceeded&) {
        oracle_length.reset();  // leave the column empty rather than report a non-optimum
      }
    }

    for (const Variant variant : suite.variants) {
      for (const TieBreakPolicy& policy : suite.policies) {
        SolveConfig cfg;
        cfg.variant = variant;
        cfg.policy = policy;
        cfg.max_roots = suite.max_roots;
        if (cfg.max_roots && *cfg.max_roots > g.num_vertices())
          cfg.max_roots = g.num_vertices();

        SolveResult result;
        double wall_ms = 0.0;
        for (int rep = 0; rep < suite.repeats; ++rep) {
          const auto t0 = std::chrono::steady_clock::now();
          result = solve(g, cfg);
          const double elapsed =
              std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
                  .count();
          wall_ms = rep == 0 ? elapsed : std::min(wall_ms, elapsed);
        }

        const int improved = improve_path(g, result.best).length();
        if (improved < result.length)
          throw std::logic_error("bench: improvement shortened a path");
        if (oracle_length && improved > *oracle_length)
          throw std::logic_error("bench: heuristic exceeded the exact optimum on " + label);

        records.push_back({label, g.num_vertices(), g.num_edges(), variant, policy,
                           result.length, improved, oracle_length, wall_ms});
      }
    }
  }
  return records;
}

std::string csv_header() {
  return "instance,n,m,variant,policy,seed,found_length,improved_length,oracle_length,"
         "wall_time_ms";
}

void write_csv(const std::vector<BenchRecord>& records, std::ostream& out) {
  out << csv_header() << "\n";
  for (const auto& r : records) {
    out << r.instance << "," << r.n << "," << r.m << "," << variant_name(r.variant) << ","
        << tie_break_name(r.policy.mode) << "," << r.policy.seed << "," << r.found_length << ","
        << r.improved_length << ",";
    if (r.oracle_length) out << *r.oracle_length;
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.3f", r.wall_time_ms);
    out << "," << buf << "\n";
  }
}

}  // namespace longpath
