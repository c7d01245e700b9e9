#include "bgvd/approx.hpp"

#include <limits>
#include <map>
#include <optional>

#include "bgvd/bgvd_solver.hpp"
#include "bgvd/errors.hpp"
#include "bgvd/obstruction.hpp"

namespace bgvd {

namespace {

// Strips degree-<=1 vertices until none remain (smallest id first).
void cleanup(MultiGraph& g) {
  for (;;) {
    int pick = -1;
    for (int v : g.vertices())
      if (g.degree(v) <= 1) {
        pick = v;
        break;
      }
    if (pick == -1) return;
    g = g.without_vertex(pick);
  }
}

// Follows the degree-2 thread entered from h at x; stops at the first
// vertex of degree != 2 (h itself closes a petal).
std::pair<int, VSet> walk_thread(const MultiGraph& g, int h, int x) {
  VSet interior;
  int prev = h, cur = x;
  for (;;) {
    if (cur == h) return {h, interior};
    if (g.degree(cur) != 2 || g.has_loop(cur)) return {cur, interior};
    vs_insert(interior, cur);
    const VSet& nb = g.neighbors(cur);
    int next = nb.size() == 1 ? nb[0] : (nb[0] == prev ? nb[1] : nb[0]);
    prev = cur;
    cur = next;
  }
}

// A cycle with at most one vertex of degree != 2: a loop, a component that
// is itself a cycle, or a degree-2 thread leaving and re-entering the same
// vertex.  Deterministic: smallest candidates first.
std::optional<VSet> find_semidisjoint_cycle(const MultiGraph& g) {
  for (int v : g.vertices())
    if (g.has_loop(v)) return VSet{v};
  for (auto& comp : components(g)) {
    bool all2 = true;
    for (int v : comp) all2 = all2 && g.degree(v) == 2 && !g.has_loop(v);
    if (all2 && !comp.empty() && g.degree(comp[0]) == 2) return comp;
  }
  for (int h : g.vertices()) {
    if (g.degree(h) <= 2) continue;
    for (int x : g.neighbors(h)) {
      if (g.degree(x) != 2 || g.has_loop(x)) continue;
      auto [end, interior] = walk_thread(g, h, x);
      if (end == h) {
        vs_insert(interior, h);
        return interior;
      }
    }
  }
  return std::nullopt;
}

}  // namespace

std::pair<VSet, Rat> approx_wfvs_2(const WeightedGraph& wg) {
  wg.check();
  MultiGraph g = wg.g;
  std::map<int, Rat> w = wg.w;
  std::vector<int> order;  // deletion order, for the reverse pass

  cleanup(g);
  while (g.n() > 0) {
    // Minimum degree is now 2, so a cycle exists and weights must drop.
    auto sd = find_semidisjoint_cycle(g);
    if (sd) {
      Rat gamma = w.at((*sd)[0]);
      for (int v : *sd) gamma = std::min(gamma, w.at(v));
      for (int v : *sd) w.at(v) -= gamma;
    } else {
      Rat gamma;
      bool first = true;
      for (int v : g.vertices()) {
        Rat val = w.at(v) / (g.degree(v) - 1);
        if (first || val < gamma) gamma = val;
        first = false;
      }
      for (int v : g.vertices()) w.at(v) -= gamma * (g.degree(v) - 1);
    }
    VSet zeroed;
    for (int v : g.vertices())
      if (w.at(v) == 0) zeroed.push_back(v);
    require(!zeroed.empty(), "some weight must reach zero every round");
    for (int v : zeroed) {
      order.push_back(v);
      g = g.without_vertex(v);
    }
    cleanup(g);
  }

  // Thin to an inclusion-minimal feedback vertex set, latest picks first.
  VSet f = vs_of(order);
  for (int i = static_cast<int>(order.size()) - 1; i >= 0; --i) {
    VSet cand = f;
    vs_erase(cand, order[i]);
    if (is_forest(wg.g.without_vertices(cand))) f = std::move(cand);
  }
  require(is_forest(wg.g.without_vertices(f)),
          "result must be a feedback vertex set");
  return {f, wg.weight_of(f)};
}

VSet approx_bgvd_4(const MultiGraph& g) {
  require(g.is_simple(), "block-graph deletion is defined on simple graphs");
  auto packed = pack_disjoint_obstructions(g, std::numeric_limits<int>::max(),
                                           PackMode::small_only);
  VSet s1;
  for (auto& o : packed) s1 = vs_union(s1, o.vertex_set());
  MultiGraph rest = g.without_vertices(s1);
  require(!find_small_obstruction(rest),
          "the packing must be maximal");

  auto [f, fw] = approx_wfvs_2(build_clique_incidence(rest));
  for (int v : f)
    require(rest.has_vertex(v),
            "cleanup must never pay for a clique vertex");

  VSet s = vs_union(s1, f);
  require(is_block_graph(g.without_vertices(s)),
          "result must leave a block graph");
  return s;
}

}  // namespace bgvd
