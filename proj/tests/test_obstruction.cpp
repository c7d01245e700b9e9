#include <random>

#include "doctest.h"
#include "helpers.hpp"

#include "bgvd/generator.hpp"
#include "bgvd/obstruction.hpp"

using namespace bgvd;
using namespace testutil;

TEST_SUITE("obstruction") {

TEST_CASE("block graph recognition on basics") {
  CHECK(is_block_graph(clique_graph(5)));
  CHECK(is_block_graph(path_graph(6)));
  CHECK(is_block_graph(MultiGraph{}));
  CHECK(is_block_graph(cycle_graph(3)));
  CHECK(!is_block_graph(cycle_graph(4)));
  CHECK(!is_block_graph(cycle_graph(7)));
  CHECK(!is_block_graph(diamond_graph()));

  // Two triangles sharing one vertex: both blocks are cliques.
  MultiGraph bow =
      from_edges(5, {{1, 2}, {1, 3}, {2, 3}, {3, 4}, {3, 5}, {4, 5}});
  CHECK(is_block_graph(bow));

  MultiGraph lp = path_graph(2);
  lp.add_edge(1, 1);
  CHECK(!is_block_graph(lp));
  MultiGraph dbl = path_graph(2);
  dbl.add_edge(1, 2);
  CHECK(!is_block_graph(dbl));
}

TEST_CASE("smallest obstruction: diamonds beat holes, short holes beat long") {
  auto d = find_obstruction(diamond_graph());
  REQUIRE(d.has_value());
  CHECK(d->kind == Obstruction::Kind::diamond);
  CHECK(d->verts == std::vector<int>{1, 2, 3, 4});
  CHECK(verify_obstruction(diamond_graph(), *d));

  auto h = find_obstruction(cycle_graph(5));
  REQUIRE(h.has_value());
  CHECK(h->kind == Obstruction::Kind::hole);
  CHECK(h->verts.size() == 5);
  CHECK(h->verts[0] == 1);                     // starts at the smallest
  CHECK(h->verts[1] < h->verts.back());        // canonical orientation
  CHECK(verify_obstruction(cycle_graph(5), *h));

  MultiGraph both = side_by_side(cycle_graph(6), diamond_graph());
  auto o = find_obstruction(both);
  REQUIRE(o.has_value());
  CHECK(o->kind == Obstruction::Kind::diamond);

  CHECK(!find_obstruction(clique_graph(4)).has_value());
}

TEST_CASE("anchored search only reports obstructions through the anchor") {
  MultiGraph g = side_by_side(diamond_graph(), cycle_graph(4));
  auto in_c4 = find_obstruction(g, 6);  // C4 vertices are 5..8
  REQUIRE(in_c4.has_value());
  CHECK(in_c4->kind == Obstruction::Kind::hole);
  CHECK(vs_contains(in_c4->vertex_set(), 6));

  // A vertex on no obstruction: C4 plus a pendant.
  MultiGraph pend = cycle_graph(4);
  pend.add_vertex(5);
  pend.add_edge(1, 5);
  CHECK(!find_obstruction(pend, 5).has_value());
  CHECK(find_obstruction(pend, 1).has_value());
}

TEST_CASE("verification rejects fabricated witnesses") {
  Obstruction fake;
  fake.kind = Obstruction::Kind::diamond;
  fake.verts = {1, 2, 3, 4};
  CHECK(!verify_obstruction(clique_graph(4), fake));  // K4 is no diamond
  CHECK(!verify_obstruction(path_graph(4), fake));

  Obstruction hole;
  hole.kind = Obstruction::Kind::hole;
  hole.verts = {1, 2, 3, 4};
  CHECK(verify_obstruction(cycle_graph(4), hole));
  CHECK(!verify_obstruction(clique_graph(4), hole));  // chords disqualify
}

TEST_CASE("four-vertex-only search skips long holes") {
  CHECK(!find_small_obstruction(cycle_graph(6)).has_value());
  CHECK(find_small_obstruction(cycle_graph(4)).has_value());
  auto d = find_small_obstruction(diamond_graph());
  REQUIRE(d.has_value());
  CHECK(d->kind == Obstruction::Kind::diamond);
}

TEST_CASE("maximal cliques of a diamond- and C4-free graph") {
  MultiGraph bow =
      from_edges(5, {{1, 2}, {1, 3}, {2, 3}, {3, 4}, {3, 5}, {4, 5}});
  bow.add_vertex(9);
  auto cliques = maximal_cliques_c4d4_free(bow);
  REQUIRE(cliques.size() == 3);
  CHECK(cliques[0] == VSet{1, 2, 3});
  CHECK(cliques[1] == VSet{3, 4, 5});
  CHECK(cliques[2] == VSet{9});

  auto p3 = maximal_cliques_c4d4_free(path_graph(3));
  REQUIRE(p3.size() == 2);
  CHECK(p3[0] == VSet{1, 2});

  // Long holes are fine for the construction; every edge still lies in
  // exactly one maximal clique.
  auto c6 = maximal_cliques_c4d4_free(cycle_graph(6));
  CHECK(c6.size() == 6);
}

TEST_CASE("disjoint packing is greedy and respects the limit") {
  MultiGraph two = side_by_side(cycle_graph(4), cycle_graph(4));
  CHECK(pack_disjoint_obstructions(two, 10).size() == 2);
  CHECK(pack_disjoint_obstructions(two, 1).size() == 1);

  // All petals share the hub, so at most one fits in a disjoint packing.
  MultiGraph flower = gen_flower(4, 7).g;
  CHECK(pack_disjoint_obstructions(flower, 10).size() == 1);

  // small_only ignores a lone long hole.
  CHECK(pack_disjoint_obstructions(cycle_graph(6), 10).size() == 1);
  CHECK(pack_disjoint_obstructions(cycle_graph(6), 10, PackMode::small_only)
            .empty());

  auto packed = pack_disjoint_obstructions(two, 10);
  VSet seen;
  for (auto& o : packed) {
    CHECK(verify_obstruction(two, o));
    for (int v : o.vertex_set()) {
      CHECK(!vs_contains(seen, v));
      vs_insert(seen, v);
    }
  }
}

TEST_CASE("flower packing grows petals through the hub only") {
  for (int petals = 1; petals <= 5; ++petals) {
    MultiGraph g = gen_flower(petals, 40 + petals).g;
    auto pack = pack_flower(g, 1, 10);
    CHECK((int)pack.size() == petals);
    for (size_t i = 0; i < pack.size(); ++i) {
      CHECK(verify_obstruction(g, pack[i]));
      CHECK(vs_contains(pack[i].vertex_set(), 1));
      for (size_t j = i + 1; j < pack.size(); ++j)
        CHECK(vs_intersect(pack[i].vertex_set(), pack[j].vertex_set()) ==
              VSet{1});
    }
  }
  // Limit cuts growth short.
  MultiGraph g = gen_flower(5, 11).g;
  CHECK(pack_flower(g, 1, 2).size() == 2);
  // No obstruction through a hub of a block graph.
  CHECK(pack_flower(clique_graph(4), 1, 5).empty());
}

TEST_CASE("recognition agrees with exhaustive small-graph reasoning") {
  // Every graph on 5 labeled vertices over a fixed edge pool, sampled.
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 200; ++trial) {
    MultiGraph g = gen_random_gnp(5 + (int)rnd(rng, 3),
                                  0.2 + 0.1 * (double)rnd(rng, 6),
                                  500 + trial)
                       .g;
    auto o = find_obstruction(g);
    CHECK(is_block_graph(g) == !o.has_value());
    if (o) CHECK(verify_obstruction(g, *o));
  }
}

}  // TEST_SUITE
