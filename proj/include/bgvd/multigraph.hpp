#pragma once
#include <map>
#include <optional>
#include <tuple>
#include <utility>
#include <vector>

#include "bgvd/errors.hpp"
#include "bgvd/rational.hpp"
#include "bgvd/vset.hpp"

namespace bgvd {

// Undirected multigraph with stable integer vertex ids. Parallel edges are
// stored as multiplicities, loops as edges (v,v). Ids are never reused: every
// derived graph hands out fresh ids above anything it has ever seen, so a
// vertex id means the same thing across a whole reduction trace.
//
// Construction mutates (add_vertex/add_edge); the algorithm layer treats
// graphs as values and only uses the without_*/induced/contract operations,
// which return new graphs.
class MultiGraph {
 public:
  MultiGraph() = default;

  void add_vertex(int v);
  // Accumulates multiplicity; endpoints are added if missing. u == v is a loop.
  void add_edge(int u, int v, int mult = 1);

  int n() const { return (int)verts_.size(); }
  long long m() const;  // sum of multiplicities, loops count once
  const VSet& vertices() const { return verts_; }
  bool has_vertex(int v) const { return vs_contains(verts_, v); }
  int multiplicity(int u, int v) const;
  bool has_edge(int u, int v) const { return multiplicity(u, v) > 0; }
  bool has_loop(int v) const { return multiplicity(v, v) > 0; }
  // Loops count twice, parallel edges by multiplicity.
  int degree(int v) const;
  // Distinct neighbors, sorted, never includes v itself.
  const VSet& neighbors(int v) const;
  bool is_simple() const;
  // Normalized (u <= v) -> multiplicity.
  const std::map<std::pair<int, int>, int>& edges() const { return mult_; }
  // Smallest id strictly above every id ever present in this graph.
  int fresh_id() const { return next_id_; }
  void reserve_id(int v);  // bump fresh_id above v

  MultiGraph without_vertex(int v) const;
  MultiGraph without_vertices(const VSet& s) const;
  MultiGraph induced(const VSet& w) const;
  MultiGraph with_edge(int u, int v, int mult = 1) const;
  // Removes every parallel copy of (u,v).
  MultiGraph without_edge(int u, int v) const;
  MultiGraph with_multiplicity(int u, int v, int mult) const;

  bool operator==(const MultiGraph& o) const {
    return verts_ == o.verts_ && mult_ == o.mult_;
  }

 private:
  VSet verts_;
  std::map<std::pair<int, int>, int> mult_;
  std::map<int, VSet> adj_;
  int next_id_ = 1;
};

// Edges as (u, v, multiplicity) triples with u <= v, sorted.
inline std::vector<std::tuple<int, int, int>> edge_list(const MultiGraph& g) {
  std::vector<std::tuple<int, int, int>> out;
  out.reserve(g.edges().size());
  for (auto& [uv, mult] : g.edges())
    out.emplace_back(uv.first, uv.second, mult);
  return out;
}

// Contraction of one copy of edge (u,v) onto a fresh vertex: the fresh vertex
// becomes adjacent to (N(u) ∪ N(v)) \ {u,v}, multiplicities add up (a common
// neighbor yields a multiplicity-2 edge), and any further parallel (u,v)
// copies become loops on the fresh vertex, so |E'| = |E| - 1 always.
// Requires an existing non-loop edge and no loops at the endpoints.
struct Contraction {
  MultiGraph g;
  int merged;  // the fresh vertex id
};
Contraction contract_edge(const MultiGraph& g, int u, int v);

// True iff no loops, no parallel edges, and no cycle.
bool is_forest(const MultiGraph& g);

// Connected components as sorted vertex sets, ordered by smallest member.
std::vector<VSet> components(const MultiGraph& g);

// Twin classes: u ~ v iff N(u)\{v} = N(v)\{u}. For adjacent pairs this is
// closed-neighborhood equality, for non-adjacent pairs plain neighborhood
// equality; a vertex cannot have twins of both kinds at once, so the relation
// is an equivalence. Classes sorted by smallest member. Rejects multigraphs.
std::vector<VSet> true_twin_classes(const MultiGraph& g);

// Vertex-weighted graph. Every vertex carries exactly one nonnegative weight.
struct WeightedGraph {
  MultiGraph g;
  std::map<int, Rat> w;

  void set_weight(int v, const Rat& q);
  const Rat& weight(int v) const;
  Rat weight_of(const VSet& s) const;
  void check() const;  // weight map matches vertex set, all weights >= 0
  WeightedGraph without_vertex(int v) const;
  WeightedGraph without_vertices(const VSet& s) const;
  WeightedGraph induced(const VSet& s) const;
};

}  // namespace bgvd
