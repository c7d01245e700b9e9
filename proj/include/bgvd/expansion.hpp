#pragma once

#include <map>

#include "bgvd/vset.hpp"

namespace bgvd {

// q-expansion in a bipartite graph (X, Y): a nonempty X' ⊆ X and Y' ⊆ Y
// such that every x ∈ X' owns q private neighbors inside Y' and every
// member of Y' has all its neighbors inside X'.
struct Expansion {
  VSet xs;                  // X'
  VSet ys;                  // Y' (owned vertices plus the rest it absorbs)
  std::map<int, VSet> owned;  // x -> its q private neighbors
};

// Constructive search: saturate q copies of every surviving X-vertex by
// maximum matching; while some copy stays unsaturated, discard the
// alternating-reachability region (which keeps |Y| >= q|X|, never isolates
// a surviving Y-vertex, and strictly shrinks X) and retry.
// Preconditions: |ys| >= q * |xs|, xs nonempty, and every y has at least
// one neighbor, all neighbors inside xs.
Expansion find_expansion(const VSet& xs, const VSet& ys,
                         const std::map<int, VSet>& nbrs_of_y, int q);

}  // namespace bgvd
