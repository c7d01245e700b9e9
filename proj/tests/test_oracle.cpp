#include <cstring>
#include <random>

#include "doctest.h"
#include "helpers.hpp"

#include "bgvd/errors.hpp"
#include "bgvd/generator.hpp"
#include "bgvd/obstruction.hpp"
#include "bgvd/oracle.hpp"

using namespace bgvd;
using namespace testutil;

TEST_SUITE("oracle") {

TEST_CASE("independent recognizer matches the obstruction-based one") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 300; ++trial) {
    int n = 4 + (int)rnd(rng, 7);
    MultiGraph g =
        gen_random_gnp(n, 0.15 + 0.1 * (double)rnd(rng, 7), 4000 + trial).g;
    CHECK(is_block_graph_independent(g) == is_block_graph(g));
  }
  CHECK(is_block_graph_independent(clique_graph(6)));
  CHECK(is_block_graph_independent(path_graph(5)));
  CHECK(!is_block_graph_independent(cycle_graph(4)));
  CHECK(!is_block_graph_independent(cycle_graph(9)));
  CHECK(!is_block_graph_independent(diamond_graph()));

  MultiGraph dbl = path_graph(2);
  dbl.add_edge(1, 2);
  CHECK(!is_block_graph_independent(dbl));
  MultiGraph lp = path_graph(1);
  lp.add_edge(1, 1);
  CHECK(!is_block_graph_independent(lp));
}

TEST_CASE("exhaustive deletion optimum on pinned graphs") {
  auto c4 = brute_min_bvd(cycle_graph(4));
  REQUIRE(c4.has_value());
  CHECK(c4->size() == 1);
  CHECK(*c4 == VSet{1});  // lexicographic tie-break

  auto blk = brute_min_bvd(clique_graph(5));
  REQUIRE(blk.has_value());
  CHECK(blk->empty());

  auto mix = brute_min_bvd(side_by_side(diamond_graph(), cycle_graph(4)));
  REQUIRE(mix.has_value());
  CHECK(mix->size() == 2);

  CHECK(!brute_min_bvd(cycle_graph(4), 0).has_value());
  CHECK(brute_min_bvd(cycle_graph(4), 1).has_value());
}

TEST_CASE("witnesses leave block graphs and deletion is 1-Lipschitz") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 60; ++trial) {
    int n = 5 + (int)rnd(rng, 5);
    MultiGraph g =
        gen_random_gnp(n, 0.2 + 0.1 * (double)rnd(rng, 6), 7000 + trial).g;
    auto opt = brute_min_bvd(g);
    REQUIRE(opt.has_value());
    CHECK(is_block_graph_independent(g.without_vertices(*opt)));

    int v = g.vertices()[rnd(rng, g.n())];
    auto sub = brute_min_bvd(g.without_vertex(v));
    REQUIRE(sub.has_value());
    CHECK(sub->size() <= opt->size());
    CHECK((int)sub->size() >= (int)opt->size() - 1);
  }
}

TEST_CASE("parallel sweep agrees with the serial one exactly") {
  std::mt19937_64 rng(6);
  for (int trial = 0; trial < 25; ++trial) {
    int n = 6 + (int)rnd(rng, 6);
    MultiGraph g =
        gen_random_gnp(n, 0.2 + 0.1 * (double)rnd(rng, 6), 7700 + trial).g;
    int kcap = trial % 3 == 0 ? (int)rnd(rng, 3) : -1;
    CHECK(brute_min_bvd(g, kcap) == brute_min_bvd_parallel(g, kcap));
  }
  const char* b = oracle_backend();
  CHECK((std::strcmp(b, "openmp") == 0 || std::strcmp(b, "serial") == 0));
}

TEST_CASE("weighted feedback oracle on pinned instances") {
  WeightedGraph forest = unit_weights(path_graph(6));
  auto f = brute_min_wfvs(forest, 3);
  REQUIRE(f.has_value());
  CHECK(f->first.empty());
  CHECK(f->second == rat(0));

  // Double edge with weights 2 and 3: the cheap endpoint goes.
  MultiGraph dg = path_graph(2);
  dg.add_edge(1, 2);
  WeightedGraph dw;
  dw.g = dg;
  dw.set_weight(1, rat(2));
  dw.set_weight(2, rat(3));
  auto d = brute_min_wfvs(dw, 1);
  REQUIRE(d.has_value());
  CHECK(d->second == rat(2));
  CHECK(d->first == VSet{1});

  WeightedGraph tri = unit_weights(cycle_graph(3));
  tri.set_weight(2, rat(5));
  tri.set_weight(3, rat(5));
  auto t = brute_min_wfvs(tri, 1);
  REQUIRE(t.has_value());
  CHECK(t->second == rat(1));
  CHECK(t->first == VSet{1});

  CHECK(!brute_min_wfvs(tri, 0).has_value());

  // Forbidding the cheap vertex forces a heavy one.
  auto forb = brute_min_wfvs(tri, 1, VSet{1});
  REQUIRE(forb.has_value());
  CHECK(forb->second == rat(5));
  CHECK(forb->first == VSet{2});
}

TEST_CASE("a-path maximum on pinned families") {
  // Every 1-2 path uses both terminals, so the packing size is 1 even
  // though three internally disjoint routes exist.
  MultiGraph g = from_edges(
      5, {{1, 2}, {1, 3}, {3, 2}, {1, 4}, {4, 5}, {5, 2}});
  CHECK(brute_max_apaths(g, VSet{1, 2}) == 1);
  CHECK(brute_max_apaths(g, VSet{}) == 0);
  CHECK(brute_max_apaths(path_graph(4), VSet{1, 4}) == 1);
  CHECK(brute_max_apaths(path_graph(4), VSet{1, 2}) == 1);
  MultiGraph star = from_edges(5, {{1, 2}, {1, 3}, {1, 4}, {1, 5}});
  CHECK(brute_max_apaths(star, VSet{2, 3, 4, 5}) == 1);
}

TEST_CASE("size guards reject oversized inputs outright") {
  MultiGraph big = path_graph(17);
  CHECK_THROWS_AS((void)brute_min_bvd(big), invariant_error);
  MultiGraph big15 = path_graph(15);
  CHECK_THROWS_AS((void)brute_min_wfvs(unit_weights(big15), 2),
                  invariant_error);
  MultiGraph big17 = path_graph(17);
  CHECK_THROWS_AS((void)brute_max_apaths(big17, VSet{1, 2}), invariant_error);
}

}  // TEST_SUITE
