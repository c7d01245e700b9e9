#include <cmath>
#include <random>

#include "doctest.h"
#include "helpers.hpp"

#include "bgvd/bgvd_solver.hpp"
#include "bgvd/generator.hpp"
#include "bgvd/obstruction.hpp"
#include "bgvd/oracle.hpp"

using namespace bgvd;
using namespace testutil;

TEST_SUITE("bgvd") {

TEST_CASE("clique incidence structure") {
  VSet ids;
  WeightedGraph inc = build_clique_incidence(clique_graph(3), &ids);
  REQUIRE(ids.size() == 1);
  CHECK(inc.g.n() == 4);
  CHECK(inc.g.degree(ids[0]) == 3);
  CHECK(inc.weight(1) == rat(1));
  CHECK(inc.weight(ids[0]) == rat(81));  // n^4
  CHECK(is_forest(inc.g));               // a block graph gives a forest

  VSet pids;
  WeightedGraph pinc = build_clique_incidence(path_graph(3), &pids);
  CHECK(pids.size() == 2);
  CHECK(pinc.g.n() == 5);
  CHECK(is_forest(pinc.g));

  // No original edges survive: the incidence graph is bipartite.
  for (auto& [e, mult] : pinc.g.edges()) {
    (void)mult;
    CHECK((vs_contains(pids, e.first) != vs_contains(pids, e.second)));
  }

  // A long hole turns into a longer cycle.
  WeightedGraph cinc = build_clique_incidence(cycle_graph(6), nullptr);
  CHECK(!is_forest(cinc.g));
}

TEST_CASE("deleting S in G matches killing cycles in the incidence graph") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 120; ++trial) {
    MultiGraph g = gen_c4d4_free(5 + (int)rnd(rng, 6),
                                 0.25 + 0.1 * (double)rnd(rng, 5),
                                 13000 + trial);
    WeightedGraph inc = build_clique_incidence(g, nullptr);
    VSet s;
    for (int v : g.vertices())
      if (rnd(rng, 3) == 0) vs_insert(s, v);
    CHECK(is_block_graph(g.without_vertices(s)) ==
          is_forest(inc.g.without_vertices(s)));
  }
}

TEST_CASE("restricted solver matches the oracle on obstruction-free graphs") {
  std::mt19937_64 rng(32);
  for (int trial = 0; trial < 50; ++trial) {
    MultiGraph g = gen_c4d4_free(5 + (int)rnd(rng, 5),
                                 0.3 + 0.1 * (double)rnd(rng, 4),
                                 14000 + trial);
    REQUIRE(!find_small_obstruction(g).has_value());
    auto opt = brute_min_bvd(g);
    REQUIRE(opt.has_value());
    for (int k = 0; k <= (int)opt->size() + 1; ++k) {
      auto mine = solve_restricted(g, k);
      CHECK(mine.has_value() == (k >= (int)opt->size()));
      if (mine) {
        CHECK(mine->size() == opt->size());
        CHECK(is_block_graph_independent(g.without_vertices(*mine)));
      }
    }
  }
}

TEST_CASE("pinned exact solutions") {
  auto c4 = solve_bgvd(cycle_graph(4), 1);
  REQUIRE(c4.has_value());
  CHECK(c4->s == VSet{1});

  CHECK(!solve_bgvd(cycle_graph(4), 0).has_value());

  auto blk = solve_bgvd(clique_graph(6), 0);
  REQUIRE(blk.has_value());
  CHECK(blk->s.empty());

  MultiGraph two = side_by_side(diamond_graph(), cycle_graph(4));
  CHECK(!solve_bgvd(two, 1).has_value());
  auto both = solve_bgvd(two, 2);
  REQUIRE(both.has_value());
  CHECK(both->s.size() == 2);

  // Flowers need exactly one deletion: the hub.
  auto fl = solve_bgvd(gen_flower(5, 3).g, 1);
  REQUIRE(fl.has_value());
  CHECK(fl->s == VSet{1});
}

TEST_CASE("random sweep against the oracle with witness equality") {
  std::mt19937_64 rng(33);
  int yes = 0, no = 0;
  for (int trial = 0; trial < 120; ++trial) {
    int n = 5 + (int)rnd(rng, 5);
    MultiGraph g =
        gen_random_gnp(n, 0.15 + 0.1 * (double)rnd(rng, 7), 15000 + trial).g;
    int k = (int)rnd(rng, 5);
    auto mine = solve_bgvd(g, k);
    auto ref = brute_min_bvd(g, k);
    REQUIRE(mine.has_value() == ref.has_value());
    if (!mine) {
      ++no;
      continue;
    }
    ++yes;
    CHECK(mine->s == *ref);  // identical tie-breaking
    CHECK(is_block_graph_independent(g.without_vertices(mine->s)));
  }
  CHECK(yes > 20);
  CHECK(no > 5);
}

TEST_CASE("planted instances are always feasible at the planted budget") {
  for (int k = 1; k <= 4; ++k)
    for (uint64_t seed = 1; seed <= 4; ++seed) {
      Instance inst = gen_planted_bgvd(2 * k + 8, k, 16000 + 10 * k + seed);
      auto res = solve_bgvd(inst.g, k);
      REQUIRE(res.has_value());
      CHECK(is_block_graph(inst.g.without_vertices(res->s)));
    }
}

TEST_CASE("branch node counts respect the instrumented ceiling") {
  std::mt19937_64 rng(34);
  for (int trial = 0; trial < 30; ++trial) {
    int n = 6 + (int)rnd(rng, 5);
    MultiGraph g =
        gen_random_gnp(n, 0.2 + 0.1 * (double)rnd(rng, 5), 17000 + trial).g;
    int k = 1 + (int)rnd(rng, 4);
    auto res = solve_bgvd(g, k);
    if (!res) continue;
    CHECK((double)res->stats.nodes <=
          std::pow(4.0, k + 1) * (g.n() + 1));
    CHECK(res->stats.wfvs.worst_leaf_ratio <= 1.0);
  }
}

}  // TEST_SUITE
