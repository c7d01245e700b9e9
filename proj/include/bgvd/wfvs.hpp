#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "bgvd/multigraph.hpp"
#include "bgvd/rational.hpp"
#include "bgvd/vset.hpp"

namespace bgvd {

struct WfvsStats {
  std::uint64_t disjoint_calls = 0;   // compression subproblems solved
  std::uint64_t branch_nodes = 0;     // recursion nodes across all of them
  std::uint64_t leaves = 0;           // recursion leaves across all of them
  std::uint64_t measure_cuts = 0;     // refutations by the budget measure
  std::uint64_t parity_calls = 0;     // matroid base cases reached
  std::uint64_t max_call_leaves = 0;  // most leaves any single call used
  int max_call_k = 0;                 // and the budget it ran with
  double worst_leaf_ratio = 0.0;      // leaves / phi^(2k+2), worst call
};

struct DisjointHooks {
  // Observes every instance refuted purely by the budget measure.
  std::function<void(const WeightedGraph&, const VSet& r, int k)>
      on_measure_cut;
};

// Classification of a vertex outside the anchor set r of a disjoint
// instance (the "forest side"; G - r is required to be a forest).
struct ForestVertex {
  int v = 0;
  int forest_deg = 0;   // distinct neighbors outside r
  VSet anchor_nbrs;     // distinct neighbors inside r
  bool cyclic = false;  // closes a cycle with G[r] all by itself
  bool link = false;    // degree 2, both neighbors in distinct r-components
  bool tripod = false;  // degree 3, all neighbors in distinct r-components
};

std::vector<ForestVertex> classify_forest_side(const MultiGraph& g,
                                               const VSet& r);

// k + (components of G[r]) - (links + tripods).  A disjoint instance whose
// measure is negative has no solution: every kept link merges at least one
// pair of anchor components, every kept tripod two, and a forest over c
// components absorbs fewer than c merges.
int disjoint_measure(const MultiGraph& g, const VSet& r, int k);

// Minimum-weight X with X ∩ r = ∅, |X| <= k and G - X acyclic.
// Preconditions: G[r] and G - r are forests.  Ties broken by fewest
// vertices, then lexicographically smallest set.
std::optional<std::pair<VSet, Rat>> solve_disjoint(
    const WeightedGraph& wg, const VSet& r, int k, WfvsStats* stats = nullptr,
    const DisjointHooks* hooks = nullptr);

struct WfvsResult {
  VSet x;
  Rat weight;
  WfvsStats stats;
};

// Minimum-weight feedback vertex set of size <= k via iterative
// compression; nullopt when no such set exists.  Same tie-breaking.
std::optional<WfvsResult> solve_wfvs(const WeightedGraph& wg, int k,
                                     const DisjointHooks* hooks = nullptr);

}  // namespace bgvd
