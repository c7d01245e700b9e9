#pragma once
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "bgvd/multigraph.hpp"
#include "bgvd/obstruction.hpp"
#include "bgvd/vset.hpp"

namespace bgvd {

// Polynomial kernel for the block-graph deletion decision instance (G, k).
// Six reduction rules run to a fixpoint, always firing the first applicable
// rule in the order below, with deterministic (lowest-id) witness selection:
//
//   component  - drop a connected component that is already a block graph
//   pendant    - drop a component H of G-v when G[{v} u H] is a block graph
//   twins      - cap a class of pairwise-adjacent twins at k+2 members
//   chain      - compress a path segment t1..t4 whose interior sees only the
//                path and private cliques: drop the middle clique, contract
//                (t2,t3) onto a fresh vertex
//   forced     - a vertex on 2k+1 openly disjoint obstruction cores must be
//                in every solution: delete it and decrement k (or answer No
//                outright when k+1 disjoint obstructions certify infeasibility)
//   fan        - a vertex attached to more than 3|S_v| components of G-(S_v+v)
//                has its fan thinned through a 3-expansion: detached fans plus
//                doubled guard paths, k unchanged
//
// The driver can settle the instance early ("verdict" trace steps): k+1
// vertex-disjoint obstructions or an oversized approximate solution prove No,
// and a fully reduced (empty) graph proves Yes.

// One mutation event. `rule` is one of component/pendant/twins/chain/forced/
// fan/verdict; unused fields keep their defaults.
struct TraceStep {
  std::string rule;
  int pivot = -1;  // vertex the rule fired at, when meaningful
  VSet removed_vertices;
  std::vector<std::pair<int, int>> removed_edges;
  VSet added_vertices;
  std::vector<std::pair<int, int>> added_edges;
  int merged_from_u = -1;  // chain: contracted edge
  int merged_from_v = -1;
  int merged_into = -1;  // chain: fresh replacement vertex
  int k_after = 0;
  std::string note;
};

struct KernelState {
  MultiGraph g;
  int k = 0;
  VSet approx;  // approximate deletion set from the latest fan stage
  std::map<int, VSet> guard;  // per-pivot guard sets from the latest fan stage
  std::vector<TraceStep> trace;
  std::vector<std::string> warnings;  // soft guard-size notices
  bool decided = false;
  bool feasible = false;  // valid only when decided
  std::string verdict_reason;
  int iterations = 0;
};

// What the obstruction structure around a pivot vertex looks like:
//   disjoint_pack - k+1 pairwise vertex-disjoint obstructions (a No witness)
//   flower        - k+1 obstructions pairwise intersecting exactly in the
//                   pivot (the pivot is in every solution of size <= k)
//   hitting_set   - a vertex set disjoint from the pivot that meets every
//                   obstruction through the pivot
struct StructureResult {
  enum class Kind { disjoint_pack, flower, hitting_set };
  Kind kind = Kind::hitting_set;
  std::vector<Obstruction> pack;
  std::vector<Obstruction> petals;
  VSet hitting;
};

StructureResult analyze_obstructions_at(const MultiGraph& g, int v, int k);

// Guard set S_v: the approximate solution itself when v is outside it,
// otherwise (approx \ {v}) united with a hitting set for the obstructions
// through v. Removing the guard set always leaves a block graph containing v.
VSet guard_set_at(const MultiGraph& g, int v, int k,
                  const VSet& approx_solution);

// Fires the first applicable rule and returns its id, or nullopt at a
// fixpoint. Sets decided/feasible instead of mutating further when the
// instance resolves outright.
std::optional<std::string> apply_next_rule(KernelState& st);

// Runs apply_next_rule to a fixpoint under an iteration budget. Requires a
// simple graph and k >= 0. An empty residual graph decides Yes.
KernelState kernelize(const MultiGraph& g, int k);

}  // namespace bgvd
