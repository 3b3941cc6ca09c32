#include <doctest.h>

#include "longpath/oracle.hpp"
#include "longpath/solve.hpp"

using namespace longpath;

TEST_CASE("all-pairs on small structured graphs") {
  SUBCASE("complete graph is Hamiltonian") {
    const auto g = generate(Family::complete, {.n = 4});
    const auto result = solve_all_pairs(g);
    CHECK(result.length == 3);
    CHECK(validate_path(g, result.best).ok);
    CHECK(exact_longest_path(g).length() == 3);
  }
  SUBCASE("dodecahedron admits a Hamiltonian path") {
    const auto g = generate(Family::dodecahedron, {});
    CHECK(solve_all_pairs(g).length == 19);
  }
  SUBCASE("two disjoint triangles") {
    const auto g = Graph::from_edges(6, {{0, 1}, {0, 2}, {1, 2}, {3, 4}, {3, 5}, {4, 5}});
    const auto result = solve_all_pairs(g);
    CHECK(result.length == 2);
    CHECK(validate_path(g, result.best).ok);
    // the winning path stays inside one triangle
    for (std::size_t i = 1; i < result.best.vertices.size(); ++i)
      CHECK((result.best.vertices[i] < 3) == (result.best.vertices[0] < 3));
    CHECK(exact_longest_path(g).length() == 2);
  }
}

TEST_CASE("farthest variant") {
  SUBCASE("path graph endpoints are always farthest") {
    const auto g = generate(Family::path, {.n = 6});
    CHECK(solve_farthest(g).length == 5);
  }
  SUBCASE("cycle C8 walks all the way around") {
    const auto g = generate(Family::cycle, {.n = 8});
    CHECK(solve_farthest(g).length == 7);
    CHECK(exact_longest_path(g).length() == 7);
  }
  SUBCASE("never beats all-pairs under the same policy") {
    for (int iter = 0; iter < 60; ++iter) {
      const int n = 4 + iter % 14;
      const auto g = generate(Family::gnp, {.n = n, .p = 0.15 + 0.2 * (iter % 3)}, 50 + iter);
      for (const auto mode : {TieBreak::first_seen, TieBreak::seeded_random}) {
        SolveConfig cfg;
        cfg.policy = {mode, 9};
        CHECK(solve_all_pairs(g, cfg).length >= solve_farthest(g, cfg).length);
      }
    }
  }
  SUBCASE("isolated vertices contribute zero-length paths") {
    const auto g = Graph::from_edges(3, {});
    const auto result = solve_farthest(g);
    CHECK(result.length == 0);
    CHECK(result.root != result.start);
  }
}

TEST_CASE("degenerate inputs") {
  CHECK_THROWS_AS(solve_all_pairs(Graph::from_edges(0, {})), InfeasibleError);
  const auto one = solve_all_pairs(Graph::from_edges(1, {}));
  CHECK(one.length == 0);
  CHECK(one.best.vertices == std::vector<int>{0});
  CHECK(one.root == one.start);
}

TEST_CASE("winner tie-breaking is lexicographic") {
  // Single edge: (0,1) and (1,0) both reach length 1; (0,1) wins.
  const auto g = Graph::from_edges(2, {{0, 1}});
  const auto result = solve_all_pairs(g);
  CHECK(result.length == 1);
  CHECK(result.root == 0);
  CHECK(result.start == 1);
}

TEST_CASE("max_roots processes a deterministic prefix") {
  const auto g = generate(Family::gnp, {.n = 18, .p = 0.25}, 77);
  SolveConfig capped;
  capped.max_roots = 5;
  const auto result = solve_all_pairs(g, capped);
  CHECK(result.root < 5);
  CHECK(result.stats.roots_processed == 5);
  CHECK(result.stats.searches_run == 5 * 17);

  // Hand-rolled equivalent over roots 0..4.
  int best = -1;
  SearchScratch scratch;
  for (int i = 0; i < 5; ++i) {
    const auto wg = build_weighted(g, i);
    for (int j = 0; j < 18; ++j)
      if (j != i) best = std::max(best, greedy_search(wg, j, {}, scratch).best_length);
  }
  CHECK(result.length == best);

  SolveConfig bad;
  bad.max_roots = 0;
  CHECK_THROWS_AS(solve_all_pairs(g, bad), std::invalid_argument);
  bad.max_roots = 19;
  CHECK_THROWS_AS(solve_all_pairs(g, bad), std::invalid_argument);
}

TEST_CASE("solve is deterministic and thread count does not matter") {
  for (int iter = 0; iter < 20; ++iter) {
    const auto g = generate(Family::gnp, {.n = 20, .p = 0.2}, 300 + iter);
    for (const Variant variant : {Variant::all_pairs, Variant::farthest}) {
      SolveConfig serial;
      serial.variant = variant;
      serial.policy = {TieBreak::seeded_random, 5};
      SolveConfig threaded = serial;
      threaded.threads = 4;
      const auto a = solve(g, serial);
      const auto b = solve(g, serial);
      const auto c = solve(g, threaded);
      CHECK(a.length == b.length);
      CHECK(a.best.vertices == b.best.vertices);
      CHECK(a.root == b.root);
      CHECK(a.start == b.start);
      CHECK(a.length == c.length);
      CHECK(a.best.vertices == c.best.vertices);
      CHECK(a.root == c.root);
      CHECK(a.start == c.start);
      CHECK(a.stats.searches_run == c.stats.searches_run);
    }
  }
}

TEST_CASE("insertion improvement") {
  SUBCASE("triangle with an unused vertex") {
    const auto g = Graph::from_edges(3, {{0, 1}, {0, 2}, {1, 2}});
    CHECK(improve_path(g, Path{{0, 2}}).vertices == std::vector<int>{0, 1, 2});
  }
  SUBCASE("Hamiltonian input returned unchanged") {
    const auto g = Graph::from_edges(3, {{0, 1}, {0, 2}, {1, 2}});
    CHECK(improve_path(g, Path{{1, 0, 2}}).vertices == std::vector<int>{1, 0, 2});
  }
  SUBCASE("C4 plus a chord reaches the optimum") {
    const auto g = Graph::from_edges(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 2}});
    const auto improved = improve_path(g, Path{{1, 0, 3}});
    CHECK(improved.length() == 3);
    CHECK(validate_path(g, improved).ok);
    CHECK(exact_longest_path(g).length() == 3);
  }
  SUBCASE("invalid input path throws") {
    const auto g = Graph::from_edges(3, {{0, 1}});
    CHECK_THROWS_AS(improve_path(g, Path{{0, 2}}), std::invalid_argument);
    CHECK_THROWS_AS(improve_path(g, Path{}), std::invalid_argument);
  }
  SUBCASE("single vertex path unchanged") {
    const auto g = Graph::from_edges(2, {{0, 1}});
    CHECK(improve_path(g, Path{{1}}).vertices == std::vector<int>{1});
  }
  SUBCASE("monotone, valid, and a fixpoint on random instances") {
    for (int iter = 0; iter < 150; ++iter) {
      const int n = 5 + iter % 20;
      const auto g = generate(Family::gnp, {.n = n, .p = 0.2 + 0.2 * (iter % 3)}, 600 + iter);
      const auto raw = solve_farthest(g).best;
      const auto improved = improve_path(g, raw);
      CHECK(improved.length() >= raw.length());
      CHECK(validate_path(g, improved).ok);
      CHECK(improve_path(g, improved).vertices == improved.vertices);
    }
  }
}

TEST_CASE("driver output never beats the oracle") {
  for (int iter = 0; iter < 40; ++iter) {
    const int n = 4 + iter % 10;
    const auto g = generate(Family::gnp, {.n = n, .p = 0.3 + 0.15 * (iter % 3)}, 800 + iter);
    const auto exact = exact_longest_path(g).length();
    SolveConfig cfg;
    cfg.improve = true;
    const auto result = solve_all_pairs(g, cfg);
    CHECK(result.length <= exact);
    CHECK(validate_path(g, result.best).ok);
  }
}

TEST_CASE("improve inside the driver matches a separate pass") {
  const auto g = generate(Family::gnp, {.n = 15, .p = 0.25}, 21);
  SolveConfig plain;
  SolveConfig improving;
  improving.improve = true;
  const auto raw = solve_all_pairs(g, plain);
  const auto improved = solve_all_pairs(g, improving);
  CHECK(improved.length == improve_path(g, raw.best).length());
  CHECK(improved.length >= raw.length);
}
