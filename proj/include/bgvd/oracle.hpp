#pragma once

#include <optional>
#include <utility>

#include "bgvd/multigraph.hpp"
#include "bgvd/rational.hpp"
#include "bgvd/vset.hpp"

namespace bgvd {

// Definition-based block-graph recognizer, kept independent from the
// obstruction module: a simple graph is a block graph iff it is chordal
// (maximum-cardinality-search order is a perfect elimination order) and
// diamond-free (common neighborhoods of adjacent pairs are cliques).
// Multigraphs with loops or parallel edges are rejected outright.
bool is_block_graph_independent(const MultiGraph& g);

// Exhaustive minimum block-graph deletion set over all vertex subsets
// (n <= 16).  Best by (size, lexicographic vertex list).  Returns nullopt
// iff kcap >= 0 and the optimum exceeds kcap.
std::optional<VSet> brute_min_bvd(const MultiGraph& g, int kcap = -1);

// Same sweep split across OpenMP threads (serial fallback when OpenMP is
// absent); must agree with brute_min_bvd exactly.
std::optional<VSet> brute_min_bvd_parallel(const MultiGraph& g, int kcap = -1);

// "openmp" when the parallel sweep actually fans out, else "serial".
const char* oracle_backend();

// Exhaustive minimum-weight feedback vertex set over subsets of size <= k
// avoiding `forbid` (n <= 14).  Best by (weight, size, lexicographic).
std::optional<std::pair<VSet, Rat>> brute_min_wfvs(const WeightedGraph& wg,
                                                   int k,
                                                   const VSet& forbid = {});

// Maximum number of vertex-disjoint a-paths (ends two distinct vertices of
// `a`, no internal vertex in `a`), by subset DP (n <= 16).
int brute_max_apaths(const MultiGraph& g, const VSet& a);

}  // namespace bgvd
