#pragma once
#include "bgvd/multigraph.hpp"

namespace bgvd {

// A-paths: paths with at least one edge, both ends in A, all interior
// vertices outside A. Packing = pairwise vertex-disjoint A-paths.
struct APathPacking {
  std::vector<std::vector<int>> paths;  // vertex sequences, smaller end first
  // When fewer than `need` paths exist, a minimal-by-pruning set of vertices
  // meeting every A-path of the graph (empty otherwise).
  VSet cover;
};

// Exact maximum packing, via the reduction to maximum matching: duplicate
// every non-terminal, join the copies, and lift a maximum matching back to
// disjoint paths. The cover is only computed when the maximum is below `need`.
APathPacking apath_packing(const MultiGraph& g, const VSet& a, int need);

// True iff some A-path survives after deleting `removed`.
bool has_apath(const MultiGraph& g, const VSet& a, const VSet& removed);

}  // namespace bgvd
