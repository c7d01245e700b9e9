#pragma once

#include <cstdint>
#include <optional>

#include "bgvd/multigraph.hpp"
#include "bgvd/vset.hpp"
#include "bgvd/wfvs.hpp"

namespace bgvd {

struct BgvdStats {
  std::uint64_t nodes = 0;             // branching nodes across all budgets
  std::uint64_t restricted_calls = 0;  // leaves solved via clique incidence
  WfvsStats wfvs;                      // aggregated from those leaves
};

struct BgvdResult {
  VSet s;  // minimum deletion set; |s| is the optimum
  BgvdStats stats;
};

// Clique-incidence graph of a graph with no diamond and no induced C4:
// original vertices (weight 1) plus one fresh vertex per maximal clique of
// size >= 2 (weight n^4, too heavy to ever beat a real solution), adjacent
// to the clique's members.  Deleting S ⊆ V(G) leaves a block graph iff it
// leaves this graph acyclic, so the restricted problem is a weighted
// feedback-vertex-set instance.  clique_ids receives the fresh ids.
WeightedGraph build_clique_incidence(const MultiGraph& g,
                                     VSet* clique_ids = nullptr);

// Exact minimum deletion set (<= k) for graphs with no 4-vertex
// obstruction.  Ties: lexicographically smallest.
std::optional<VSet> solve_restricted(const MultiGraph& g, int k,
                                     BgvdStats* stats = nullptr);

// Exact block-graph vertex deletion: smallest S with G - S a block graph,
// |S| <= k; nullopt when none exists.  Branches four ways on 4-vertex
// obstructions and solves obstruction-free graphs via build_clique_incidence.
// Ties: lexicographically smallest among minimum-size sets.
std::optional<BgvdResult> solve_bgvd(const MultiGraph& g, int k);

}  // namespace bgvd
