#include "bgvd/bgvd_solver.hpp"

#include <algorithm>

#include "bgvd/errors.hpp"
#include "bgvd/obstruction.hpp"

namespace bgvd {

namespace {

void merge_stats(WfvsStats& into, const WfvsStats& from) {
  into.disjoint_calls += from.disjoint_calls;
  into.branch_nodes += from.branch_nodes;
  into.leaves += from.leaves;
  into.measure_cuts += from.measure_cuts;
  into.parity_calls += from.parity_calls;
  if (from.max_call_leaves > into.max_call_leaves) {
    into.max_call_leaves = from.max_call_leaves;
    into.max_call_k = from.max_call_k;
  }
  into.worst_leaf_ratio = std::max(into.worst_leaf_ratio, from.worst_leaf_ratio);
}

// (size, lexicographic) preference between deletion sets.
void consider(std::optional<VSet>& best, std::optional<VSet> cand) {
  if (!cand) return;
  if (!best || cand->size() < best->size() ||
      (cand->size() == best->size() && *cand < *best))
    best = std::move(cand);
}

std::optional<VSet> solve_rec(const MultiGraph& g, int k, BgvdStats& stats) {
  ++stats.nodes;
  auto obs = find_small_obstruction(g);
  if (!obs) {
    ++stats.restricted_calls;
    return solve_restricted(g, k, &stats);
  }
  if (k == 0) return std::nullopt;
  std::optional<VSet> best;
  for (int v : obs->vertex_set()) {
    auto child = solve_rec(g.without_vertex(v), k - 1, stats);
    if (!child) continue;
    vs_insert(*child, v);
    consider(best, std::move(child));
  }
  return best;
}

}  // namespace

WeightedGraph build_clique_incidence(const MultiGraph& g, VSet* clique_ids) {
  require(g.is_simple(), "clique incidence needs a simple graph");
  require(!find_small_obstruction(g),
          "clique incidence needs a graph without 4-vertex obstructions");

  auto cliques = maximal_cliques_c4d4_free(g);
  WeightedGraph wg;
  Rat heavy = 1;
  for (int i = 0; i < 4; ++i) heavy *= std::max(g.n(), 2);

  for (int v : g.vertices()) {
    wg.g.add_vertex(v);
    wg.set_weight(v, 1);
  }
  if (clique_ids) clique_ids->clear();
  for (auto& q : cliques) {
    if (q.size() < 2) continue;
    int c = wg.g.fresh_id();
    wg.g.add_vertex(c);
    wg.set_weight(c, heavy);
    for (int v : q) wg.g.add_edge(v, c);
    if (clique_ids) clique_ids->push_back(c);
  }
  return wg;
}

std::optional<VSet> solve_restricted(const MultiGraph& g, int k,
                                     BgvdStats* stats) {
  require(k >= 0, "budget must be nonnegative");
  VSet clique_ids;
  WeightedGraph wg = build_clique_incidence(g, &clique_ids);
  auto res = solve_wfvs(wg, k);
  if (stats) merge_stats(stats->wfvs, res ? res->stats : WfvsStats{});
  if (!res) return std::nullopt;
  // A solution touching a clique vertex outweighs every all-original one,
  // so its optimality proves no all-original solution fits the budget.
  if (!vs_intersect(res->x, clique_ids).empty()) return std::nullopt;
  require(is_block_graph(g.without_vertices(res->x)),
          "restricted solution must leave a block graph");
  return res->x;
}

std::optional<BgvdResult> solve_bgvd(const MultiGraph& g, int k) {
  require(g.is_simple(), "block-graph deletion is defined on simple graphs");
  require(k >= 0, "budget must be nonnegative");
  BgvdStats stats;
  for (int kk = 0; kk <= k; ++kk) {
    auto res = solve_rec(g, kk, stats);
    if (!res) continue;
    require(static_cast<int>(res->size()) == kk,
            "a smaller solution would have been found at a smaller budget");
    require(is_block_graph(g.without_vertices(*res)),
            "solution must leave a block graph");
    return BgvdResult{*res, stats};
  }
  return std::nullopt;
}

}  // namespace bgvd
