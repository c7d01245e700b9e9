#pragma once
#include "bgvd/multigraph.hpp"

namespace bgvd {

// Blocks (maximal 2-connected subgraphs, bridges as 2-vertex blocks) and cut
// vertices. 2-connectivity is computed on the simple skeleton: loops and
// parallel copies are ignored here. Isolated vertices belong to no block.
struct BlockCutForest {
  enum class Kind { leaf, chain, hub };  // <=1, ==2, >=3 cut vertices in block

  std::vector<VSet> blocks;          // ordered by smallest member
  std::vector<Kind> kinds;           // parallel to blocks
  VSet cut_vertices;
  std::map<int, std::vector<int>> blocks_of;  // vertex -> indices into blocks

  bool is_cut(int v) const { return vs_contains(cut_vertices, v); }
};

BlockCutForest block_cut_forest(const MultiGraph& g);

}  // namespace bgvd
