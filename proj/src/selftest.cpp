#include "bgvd/selftest.hpp"

#include <ostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "bgvd/apath.hpp"
#include "bgvd/approx.hpp"
#include "bgvd/bgvd_solver.hpp"
#include "bgvd/generator.hpp"
#include "bgvd/instance_io.hpp"
#include "bgvd/kernel.hpp"
#include "bgvd/matroid_parity.hpp"
#include "bgvd/obstruction.hpp"
#include "bgvd/oracle.hpp"
#include "bgvd/wfvs.hpp"

namespace bgvd {
namespace {

struct Group {
  int checks = 0;
  bool ok = true;
  std::string detail;

  void fail(const std::string& d) {
    if (ok) detail = d;
    ok = false;
  }
};

uint64_t rnd(std::mt19937_64& rng, uint64_t n) { return rng() % n; }

// Random instance of the matroid-parity base case: a forest of anchor
// components plus outside vertices that are all links or tripods.
WeightedGraph random_parity_case(std::mt19937_64& rng, VSet* r_out) {
  WeightedGraph wg;
  int comps = 2 + (int)rnd(rng, 3);  // 2..4 anchor components
  VSet r;
  std::vector<VSet> comp_members;
  int next = 1;
  for (int c = 0; c < comps; ++c) {
    int size = 1 + (int)rnd(rng, 3);  // path component of 1..3 vertices
    VSet members;
    for (int i = 0; i < size; ++i) {
      wg.g.add_vertex(next);
      if (i > 0) wg.g.add_edge(next - 1, next);
      vs_insert(members, next);
      vs_insert(r, next);
      ++next;
    }
    comp_members.push_back(members);
  }
  int outs = 1 + (int)rnd(rng, 4);  // 1..4 outside vertices
  for (int i = 0; i < outs; ++i) {
    int v = next++;
    wg.g.add_vertex(v);
    bool tripod = comps >= 3 && rnd(rng, 2) == 0;
    int legs = tripod ? 3 : 2;
    VSet picked;
    while ((int)picked.size() < legs)
      vs_insert(picked, (int)rnd(rng, (uint64_t)comps));
    for (int c : picked) {
      const VSet& m = comp_members[c];
      wg.g.add_edge(v, m[rnd(rng, m.size())]);
    }
  }
  for (int v : wg.g.vertices()) wg.set_weight(v, rat(1 + (long)rnd(rng, 9)));
  *r_out = r;
  return wg;
}

void check_roundtrip(Group& g, bool quick) {
  std::mt19937_64 rng(11);
  int trials = quick ? 20 : 100;
  for (int t = 0; t < trials && g.ok; ++t) {
    Instance a = t % 2 == 0
                     ? gen_random_gnp(2 + (int)rnd(rng, 9), 0.3, 1000 + t)
                     : gen_random_wfvs(2 + (int)rnd(rng, 7), 14, 3, 2000 + t);
    std::istringstream back(serialize_instance(a));
    Instance b = parse_instance(back);
    if (!(a.g == b.g) || a.w != b.w || a.k != b.k || a.problem != b.problem)
      g.fail("round-trip changed instance at trial " + std::to_string(t));
    ++g.checks;
  }
}

void check_bgvd(Group& g, bool quick) {
  std::mt19937_64 rng(22);
  int trials = quick ? 30 : 150;
  for (int t = 0; t < trials && g.ok; ++t) {
    int n = 4 + (int)rnd(rng, 6);
    double p = 0.15 + 0.1 * (double)rnd(rng, 7);
    MultiGraph gg = gen_random_gnp(n, p, 3000 + t).g;
    for (int k = 0; k <= 3 && g.ok; ++k) {
      auto exact = solve_bgvd(gg, k);
      auto brute = brute_min_bvd(gg, k);
      if (exact.has_value() != brute.has_value()) {
        g.fail("bgvd verdict mismatch, trial " + std::to_string(t) +
               " k=" + std::to_string(k));
      } else if (exact) {
        if ((int)exact->s.size() != (int)brute->size())
          g.fail("bgvd optimum size mismatch, trial " + std::to_string(t));
        if (!is_block_graph_independent(gg.without_vertices(exact->s)))
          g.fail("bgvd witness not certified, trial " + std::to_string(t));
      }
      ++g.checks;
    }
  }
}

void check_wfvs(Group& g, bool quick) {
  std::mt19937_64 rng(33);
  int trials = quick ? 30 : 150;
  for (int t = 0; t < trials && g.ok; ++t) {
    Instance inst = gen_random_wfvs(3 + (int)rnd(rng, 6), 14, 0, 4000 + t);
    WeightedGraph wg = inst.weighted();
    for (int k = 0; k <= 3 && g.ok; ++k) {
      auto exact = solve_wfvs(wg, k);
      auto brute = brute_min_wfvs(wg, k);
      if (exact.has_value() != brute.has_value())
        g.fail("wfvs verdict mismatch, trial " + std::to_string(t));
      else if (exact && exact->weight != brute->second)
        g.fail("wfvs weight mismatch, trial " + std::to_string(t));
      ++g.checks;
    }
  }
}

void check_apath(Group& g, bool quick) {
  std::mt19937_64 rng(44);
  int trials = quick ? 30 : 150;
  for (int t = 0; t < trials && g.ok; ++t) {
    int n = 4 + (int)rnd(rng, 7);
    MultiGraph gg = gen_random_gnp(n, 0.3, 5000 + t).g;
    VSet a;
    for (int v : gg.vertices())
      if (rnd(rng, 3) == 0) vs_insert(a, v);
    APathPacking pk = apath_packing(gg, a, 1 << 20);
    if ((int)pk.paths.size() != brute_max_apaths(gg, a))
      g.fail("a-path packing not maximum, trial " + std::to_string(t));
    if (has_apath(gg, a, pk.cover))
      g.fail("a-path cover misses a path, trial " + std::to_string(t));
    ++g.checks;
  }
}

void check_incidence(Group& g, bool quick) {
  std::mt19937_64 rng(55);
  int trials = quick ? 60 : 300;
  for (int t = 0; t < trials && g.ok; ++t) {
    MultiGraph gg = gen_c4d4_free(4 + (int)rnd(rng, 9), 0.3, 6000 + t);
    WeightedGraph inc = build_clique_incidence(gg);
    VSet s;
    for (int v : gg.vertices())
      if (rnd(rng, 3) == 0) vs_insert(s, v);
    bool lhs = is_block_graph(gg.without_vertices(s));
    bool rhs = is_forest(inc.without_vertices(s).g);
    if (lhs != rhs)
      g.fail("incidence biconditional violated, trial " + std::to_string(t));
    ++g.checks;
  }
}

void check_approx(Group& g, bool quick) {
  std::mt19937_64 rng(66);
  int trials = quick ? 30 : 150;
  // The single 4-cycle pins the worst case: the packing takes all four
  // vertices against an optimum of one.
  MultiGraph c4 = gen_disjoint_c4(1, 1).g;
  VSet a4 = approx_bgvd_4(c4);
  if (a4.size() != 4) g.fail("single C4 should realize ratio exactly 4");
  ++g.checks;
  for (int t = 0; t < trials && g.ok; ++t) {
    MultiGraph gg = gen_random_gnp(4 + (int)rnd(rng, 7), 0.35, 7000 + t).g;
    VSet ap = approx_bgvd_4(gg);
    if (!is_block_graph(gg.without_vertices(ap)))
      g.fail("approx output not a deletion set, trial " + std::to_string(t));
    auto opt = brute_min_bvd(gg);
    if (opt && ap.size() > 4 * opt->size())
      g.fail("approx ratio above 4, trial " + std::to_string(t));
    ++g.checks;
  }
  for (int t = 0; t < trials && g.ok; ++t) {
    Instance inst = gen_random_wfvs(3 + (int)rnd(rng, 6), 14, 0, 8000 + t);
    WeightedGraph wg = inst.weighted();
    auto [x, wt] = approx_wfvs_2(wg);
    if (!is_forest(wg.g.without_vertices(x)))
      g.fail("wfvs approx output not acyclic, trial " + std::to_string(t));
    auto opt = brute_min_wfvs(wg, wg.g.n());
    if (opt && wt > 2 * opt->second)
      g.fail("wfvs approx ratio above 2, trial " + std::to_string(t));
    ++g.checks;
  }
}

void check_kernel(Group& g, bool quick) {
  const char* rules[] = {"component", "pendant", "twins",
                         "chain",     "forced",  "fan"};
  int per = quick ? 4 : 20;
  for (const char* rule : rules) {
    std::mt19937_64 rng(77);
    for (int t = 0; t < per && g.ok; ++t) {
      int k = rule == std::string("forced") ? (int)rnd(rng, 2)
              : rule == std::string("fan")  ? 1 + (int)rnd(rng, 4)
                                            : (int)rnd(rng, 5);
      Instance inst = gen_rule_instance(rule, k, 9000 + t);
      KernelState st = kernelize(inst.g, k);
      bool fired = false;
      for (const TraceStep& step : st.trace)
        if (step.rule == rule) fired = true;
      if (!fired)
        g.fail(std::string(rule) + " family did not fire its rule, trial " +
               std::to_string(t));
      auto brute = brute_min_bvd(inst.g, k);
      bool want = brute.has_value();
      bool got;
      if (st.decided) {
        got = st.feasible;
      } else {
        got = solve_bgvd(st.g, st.k).has_value();
      }
      if (want != got)
        g.fail(std::string(rule) + " family changed the decision, trial " +
               std::to_string(t));
      ++g.checks;
    }
  }
}

void check_parity(Group& g, bool quick) {
  std::mt19937_64 rng(88);
  int trials = quick ? 40 : 200;
  for (int t = 0; t < trials && g.ok; ++t) {
    VSet r;
    WeightedGraph wg = random_parity_case(rng, &r);
    if (wg.g.n() > 14) continue;
    auto [x, wt] = solve_parity(wg, r);
    auto brute = brute_min_wfvs(wg, wg.g.n(), r);
    if (!brute)
      g.fail("parity case unsolvable by brute force, trial " +
             std::to_string(t));
    else if (wt != brute->second || x != brute->first)
      g.fail("parity result differs from brute force, trial " +
             std::to_string(t));
    ParityInstance pi = build_parity_instance(wg, r);
    if ((int)pi.elems.size() <= kParityExhaustiveMax) {
      auto [xe, we] = solve_parity_exhaustive(pi);
      if (xe != x || we != wt)
        g.fail("parity evaluators disagree, trial " + std::to_string(t));
    }
    ++g.checks;
  }
}

void check_oracle_backends(Group& g, bool quick) {
  std::mt19937_64 rng(99);
  int trials = quick ? 12 : 40;
  for (int t = 0; t < trials && g.ok; ++t) {
    MultiGraph gg = gen_random_gnp(6 + (int)rnd(rng, 5), 0.4, 10000 + t).g;
    auto serial = brute_min_bvd(gg);
    auto parallel = brute_min_bvd_parallel(gg);
    if (serial != parallel)
      g.fail("oracle backends disagree, trial " + std::to_string(t));
    ++g.checks;
  }
}

void check_measure(Group& g, bool quick) {
  std::mt19937_64 rng(111);
  int want_events = quick ? 10 : 50;
  int events = 0;
  DisjointHooks hooks;
  Group* gp = &g;
  int* ev = &events;
  hooks.on_measure_cut = [gp, ev](const WeightedGraph& wg, const VSet& r,
                                  int k) {
    if (wg.g.n() > 14) return;
    auto brute = brute_min_wfvs(wg, k, r);
    if (brute) gp->fail("measure cut refuted a feasible instance");
    ++*ev;
  };
  for (int t = 0; t < 400 && events < want_events && g.ok; ++t) {
    // Theta graphs drive the measure negative: m connector links over
    // `poles` anchor components exceed k + components.
    int poles = 2 + (int)rnd(rng, 2);
    int k = (int)rnd(rng, 3);
    int m = poles + k + 1 + (int)rnd(rng, 3);
    Instance inst = gen_theta_wfvs(poles, m, (int)rnd(rng, 3), 11000 + t);
    WeightedGraph wg = inst.weighted();
    VSet r;
    for (int v = 1; v <= poles; ++v) vs_insert(r, v);
    solve_disjoint(wg, r, k, nullptr, &hooks);
    solve_wfvs(wg, k, &hooks);
  }
  g.checks += events;
  if (events == 0) g.fail("no measure-cut events observed");
}

}  // namespace

bool run_selftest(bool quick, std::ostream& out) {
  struct Entry {
    const char* name;
    void (*fn)(Group&, bool);
  };
  const Entry entries[] = {
      {"io-roundtrip", check_roundtrip},
      {"bgvd-vs-oracle", check_bgvd},
      {"wfvs-vs-oracle", check_wfvs},
      {"apath-vs-oracle", check_apath},
      {"clique-incidence", check_incidence},
      {"approx-bounds", check_approx},
      {"kernel-rules", check_kernel},
      {"matroid-parity", check_parity},
      {"oracle-backends", check_oracle_backends},
      {"measure-cuts", check_measure},
  };
  bool all = true;
  for (const Entry& e : entries) {
    Group g;
    e.fn(g, quick);
    if (g.ok) {
      out << e.name << ": ok (" << g.checks << " checks)\n";
    } else {
      out << e.name << ": FAIL - " << g.detail << "\n";
      all = false;
    }
  }
  return all;
}

}  // namespace bgvd
