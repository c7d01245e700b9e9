#include <random>
#include <set>
#include <string>

#include "doctest.h"
#include "helpers.hpp"

#include "bgvd/approx.hpp"
#include "bgvd/bgvd_solver.hpp"
#include "bgvd/generator.hpp"
#include "bgvd/kernel.hpp"
#include "bgvd/obstruction.hpp"
#include "bgvd/oracle.hpp"

using namespace bgvd;
using namespace testutil;

namespace {

// Decision of the kernelized instance: settled verdict, or solve the residual.
bool kernel_decision(const KernelState& st) {
  if (st.decided) return st.feasible;
  return solve_bgvd(st.g, st.k).has_value();
}

}  // namespace

TEST_SUITE("kernel") {

TEST_CASE("obstruction structure around a pivot") {
  MultiGraph fl = gen_flower(5, 2).g;
  StructureResult hub = analyze_obstructions_at(fl, 1, 3);
  CHECK(hub.kind == StructureResult::Kind::flower);
  CHECK(hub.petals.size() >= 4);

  // Only 5 petals exist, so k = 5 cannot reach k+1 of them; the petals
  // minus the hub then hit every obstruction through the hub.
  StructureResult hit = analyze_obstructions_at(fl, 1, 5);
  CHECK(hit.kind == StructureResult::Kind::hitting_set);
  CHECK(!vs_contains(hit.hitting, 1));
  CHECK(!find_obstruction(fl.without_vertices(hit.hitting), 1).has_value());

  MultiGraph many = gen_disjoint_c4(4, 6).g;
  StructureResult pack = analyze_obstructions_at(many, many.vertices()[0], 2);
  CHECK(pack.kind == StructureResult::Kind::disjoint_pack);
  CHECK(pack.pack.size() >= 3);
}

TEST_CASE("guard sets leave block graphs without the pivot") {
  // k = 5 exceeds both the petal count and the disjoint pack, so the
  // analysis yields a hitting set at every pivot (the precondition for
  // requesting a guard set).
  MultiGraph fl = gen_flower(4, 14).g;
  VSet a = approx_bgvd_4(fl);
  CHECK(vs_contains(a, 1));  // the hub sits in every petal, so also in a
  for (int v : fl.vertices()) {
    VSet sv = guard_set_at(fl, v, 5, a);
    CHECK(!vs_contains(sv, v));
    CHECK(is_block_graph(fl.without_vertices(sv)));
  }
}

TEST_CASE("each rule family fires its rule and preserves the decision") {
  const char* rules[] = {"component", "pendant", "twins",
                         "chain",     "forced",  "fan"};
  std::mt19937_64 rng(51);
  for (const char* rule : rules) {
    int fired = 0;
    int trials = std::string(rule) == "fan" ? 6 : 10;
    for (int t = 0; t < trials; ++t) {
      int k;
      if (std::string(rule) == "forced")
        k = (int)rnd(rng, 2);
      else if (std::string(rule) == "fan")
        k = 1 + (int)rnd(rng, 4);
      else
        k = (int)rnd(rng, 5);
      Instance inst = gen_rule_instance(rule, k, 31000 + 100 * t + k);
      KernelState st = kernelize(inst.g, k);
      for (const TraceStep& step : st.trace)
        if (step.rule == rule) {
          ++fired;
          break;
        }
      bool ref = brute_min_bvd(inst.g, k).has_value();
      CHECK(kernel_decision(st) == ref);
    }
    INFO("rule ", rule);
    CHECK(fired >= trials / 2);
  }
}

TEST_CASE("twin classes capped at k+2 keep small counterexamples honest") {
  // A triangle fully joined to three independent vertices: the class of
  // pairwise-adjacent twins {1,2,3} may not drop below k+2 members.
  MultiGraph g = from_edges(6, {{1, 2}, {1, 3}, {2, 3},
                                {1, 4}, {1, 5}, {1, 6},
                                {2, 4}, {2, 5}, {2, 6},
                                {3, 4}, {3, 5}, {3, 6}});
  for (int k = 0; k <= 3; ++k) {
    KernelState st = kernelize(g, k);
    CHECK(kernel_decision(st) == brute_min_bvd(g, k).has_value());
  }

  // A diamond is four mutually-relevant vertices; k = 0 must stay No even
  // though its twin class could tempt a careless cap.
  KernelState st = kernelize(diamond_graph(), 0);
  CHECK(kernel_decision(st) == false);
}

TEST_CASE("rule order: finished components leave before anything else") {
  MultiGraph g = side_by_side(clique_graph(4), cycle_graph(4));
  KernelState st;
  st.g = g;
  st.k = 1;
  auto rule = apply_next_rule(st);
  REQUIRE(rule.has_value());
  CHECK(*rule == "component");
  CHECK(st.g.n() == 4);
  CHECK(!st.g.has_vertex(1));  // the clique went, the cycle stayed
}

TEST_CASE("settled verdicts") {
  KernelState yes = kernelize(clique_graph(5), 0);
  CHECK(yes.decided);
  CHECK(yes.feasible);
  CHECK(yes.g.n() == 0);

  KernelState no = kernelize(gen_disjoint_c4(3, 8).g, 1);
  CHECK(no.decided);
  CHECK(!no.feasible);
  CHECK(!no.verdict_reason.empty());

  KernelState empty = kernelize(MultiGraph{}, 0);
  CHECK(empty.decided);
  CHECK(empty.feasible);
}

TEST_CASE("trace steps stay well-formed") {
  std::set<std::string> known = {"component", "pendant", "twins", "chain",
                                 "forced",    "fan",     "verdict"};
  std::mt19937_64 rng(52);
  for (int t = 0; t < 12; ++t) {
    Instance inst =
        gen_random_gnp(8 + (int)rnd(rng, 4), 0.3, 33000 + t);
    int k = 1 + (int)rnd(rng, 3);
    KernelState st = kernelize(inst.g, k);
    int last_k = k;
    for (const TraceStep& step : st.trace) {
      CHECK(known.count(step.rule) == 1);
      CHECK(step.k_after <= last_k);
      last_k = step.k_after;
    }
    if (!st.decided) {
      CHECK(st.k == last_k);
      CHECK(st.g.is_simple());
      // Decision preserved on the generic sweep too.
      CHECK(kernel_decision(st) == brute_min_bvd(inst.g, k).has_value());
    }
  }
}

TEST_CASE("chain compression on a hand-built barbell") {
  // Two C4s joined by an induced path through two private-free interiors.
  MultiGraph g = from_edges(10, {{1, 2},  {2, 3},  {3, 4}, {4, 1},   // C4
                                 {7, 8},  {8, 9},  {9, 10}, {10, 7},  // C4
                                 {1, 5},  {5, 6},  {6, 7}});
  for (int k = 0; k <= 2; ++k) {
    KernelState st = kernelize(g, k);
    bool fired = false;
    for (const TraceStep& step : st.trace) fired |= step.rule == "chain";
    CHECK(fired);
    CHECK(kernel_decision(st) == brute_min_bvd(g, k).has_value());
  }
}

TEST_CASE("iteration counts stay within the budget") {
  std::mt19937_64 rng(53);
  for (int t = 0; t < 8; ++t) {
    Instance inst = gen_planted_bgvd(12, 3, 34000 + t);
    KernelState st = kernelize(inst.g, 3);
    CHECK(st.iterations <= 200 + 20 * (inst.g.n() + 3));
    CHECK(kernel_decision(st) == brute_min_bvd(inst.g, 3).has_value());
  }
}

}  // TEST_SUITE
