#pragma once

#include <utility>
#include <vector>

#include "bgvd/multigraph.hpp"
#include "bgvd/rational.hpp"
#include "bgvd/vset.hpp"

namespace bgvd {

// Base case of the disjoint feedback-vertex-set solver.  Precondition: every
// vertex outside the anchor set r is either a "link" (degree 2, both
// neighbors in r, in distinct components of G[r]) or a "tripod" (degree 3,
// all neighbors in r, in three distinct components of G[r]).
//
// Keeping a set I of outside vertices leaves the graph acyclic iff the
// corresponding edge sets stay independent in the graphic matroid of G with
// E(G[r]) contracted, together with one fixed tripod leg each (the edge to
// the lowest-id neighbor).  Deleting X = outside \ I costs w(X), so a
// maximum-weight independent choice of I gives the minimum-weight deletion,
// and because weights are nonnegative it can be taken to be a basis, which
// also minimizes |X|.

// Limits for the two exact evaluation strategies.
inline constexpr int kParityExhaustiveMax = 18;   // outside vertices
inline constexpr int kParityTripodSubsetMax = 12; // tripod count

struct ParityElement {
  int v = 0;          // outside vertex
  Rat w;              // its deletion weight
  bool tripod = false;
  // Endpoints live in the contracted graph: links contribute one edge
  // (their two legs via a private middle vertex), tripods two edges that
  // share the component of the fixed leg.
  std::vector<std::pair<int, int>> edges;
};

struct ParityInstance {
  VSet nodes;                        // contracted components, by min vertex id
  std::vector<ParityElement> elems;  // sorted by vertex id
  Rat outside_weight;                // total weight of outside vertices
};

ParityInstance build_parity_instance(const WeightedGraph& wg, const VSet& r);

// Exact minimum-weight deletion set (ties: fewest vertices, then
// lexicographic).  Both evaluators are exact on their respective ranges;
// solve_parity dispatches between them.
std::pair<VSet, Rat> solve_parity_exhaustive(const ParityInstance& inst);
std::pair<VSet, Rat> solve_parity_greedy(const ParityInstance& inst);
std::pair<VSet, Rat> solve_parity(const WeightedGraph& wg, const VSet& r);

}  // namespace bgvd
