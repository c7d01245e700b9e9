#pragma once

#include <utility>

#include "bgvd/multigraph.hpp"
#include "bgvd/rational.hpp"
#include "bgvd/vset.hpp"

namespace bgvd {

// Local-ratio 2-approximation for minimum-weight feedback vertex set:
// repeatedly strip degree-<=1 vertices, then lower weights either uniformly
// along a semidisjoint cycle (at most one vertex of degree != 2) or
// proportionally to degree-1 everywhere, collect the vertices that reach
// weight zero, and finally thin the collected set to an inclusion-minimal
// feedback vertex set in reverse collection order.
std::pair<VSet, Rat> approx_wfvs_2(const WeightedGraph& wg);

// Factor-4 approximation for block-graph vertex deletion: take every vertex
// of a maximal packing of vertex-disjoint 4-vertex obstructions, then clean
// up the remaining (diamond- and C4-free) graph through its clique-incidence
// graph with the 2-approximate feedback-vertex-set routine.
VSet approx_bgvd_4(const MultiGraph& g);

}  // namespace bgvd
