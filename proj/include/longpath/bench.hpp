#pragma once

#include <iosfwd>

#include "longpath/solve.hpp"

namespace longpath {

struct BenchInstance {
  std::string label;
  Family family = Family::path;
  GenParams params;
  std::uint64_t seed = 0;
};

struct BenchSuite {
  std::vector<BenchInstance> instances;
  std::vector<Variant> variants;
  std::vector<TieBreakPolicy> policies;
  int oracle_max_n = 14;        // exact reference only on instances this small
  std::optional<int> max_roots; // forwarded to the driver when set
  int repeats = 1;              // wall time is the minimum over repeats
};

struct BenchRecord {
  std::string instance;
  int n = 0;
  int m = 0;
  Variant variant = Variant::all_pairs;
  TieBreakPolicy policy;
  int found_length = 0;
  int improved_length = 0;
  std::optional<int> oracle_length;
  double wall_time_ms = 0.0;
};

std::string_view variant_name(Variant v);
std::optional<Variant> variant_from_name(std::string_view name);
std::string_view tie_break_name(TieBreak mode);
std::optional<TieBreak> tie_break_from_name(std::string_view name);

// Small mixed-family suite; every instance except the dodecahedron is under
// the oracle cap.
BenchSuite smoke_suite();

// G(n, 0.1) at n = 100, 200, 400 with a fixed root sample (max_roots), so
// per-variant wall times isolate how cost grows with n.
BenchSuite scaling_suite(int repeats = 1);

// JSON suite description; see README for the schema.
BenchSuite parse_suite(std::istream& in);

// One record per (instance, variant, policy), in suite order. Wall time is
// measured around the driver call only; the improvement pass and the oracle
// run outside it.
std::vector<BenchRecord> run_suite(const BenchSuite& suite);

std::string csv_header();
void write_csv(const std::vector<BenchRecord>& records, std::ostream& out);

}  // namespace longpath
