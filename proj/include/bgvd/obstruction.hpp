#pragma once
#include <optional>

#include "bgvd/multigraph.hpp"

namespace bgvd {

// A graph is a block graph iff every block is a clique, equivalently iff it
// contains no diamond (K4 minus an edge) and no hole (induced cycle of length
// >= 4), all as induced subgraphs. Loops and parallel edges disqualify too.
struct Obstruction {
  enum class Kind { diamond, hole };
  Kind kind;
  // diamond: 4 sorted vertices; hole: vertices in cycle order starting at the
  // smallest, second element smaller than the last (canonical orientation).
  std::vector<int> verts;

  VSet vertex_set() const { return vs_of(verts); }
};

bool verify_obstruction(const MultiGraph& g, const Obstruction& o);

// Works on multigraphs; any loop or parallel edge makes the answer false.
bool is_block_graph(const MultiGraph& g);

// Smallest obstruction: a diamond if one exists, else a shortest hole.
// With an anchor, only obstructions containing the anchor are considered.
// Requires a simple graph. Returned witnesses always pass verify_obstruction.
std::optional<Obstruction> find_obstruction(const MultiGraph& g,
                                            std::optional<int> anchor = std::nullopt);

// Only the 4-vertex obstructions: diamond first, else induced C4.
std::optional<Obstruction> find_small_obstruction(const MultiGraph& g);

// In a graph free of diamonds and induced C4s, every edge lies in exactly one
// maximal clique: its endpoints plus their common neighbors. Returns all
// maximal cliques (isolated vertices as singletons), sorted; diagnoses a
// violated precondition if two output cliques share an edge.
std::vector<VSet> maximal_cliques_c4d4_free(const MultiGraph& g);

enum class PackMode { free, small_only };

// Greedy packing of vertex-disjoint obstructions, smallest-first (diamonds
// before holes, shorter holes before longer), until `limit` found or none
// remain. small_only restricts to 4-vertex obstructions.
std::vector<Obstruction> pack_disjoint_obstructions(const MultiGraph& g, int limit,
                                                    PackMode mode = PackMode::free);

// Flower packing: obstructions that all contain v and pairwise share only v,
// grown greedily until `limit` petals or no obstruction through v remains.
std::vector<Obstruction> pack_flower(const MultiGraph& g, int v, int limit);

}  // namespace bgvd
