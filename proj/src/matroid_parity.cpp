#include "bgvd/matroid_parity.hpp"

#include <algorithm>
#include <numeric>

#include "bgvd/errors.hpp"

namespace bgvd {

namespace {

struct MinUF {
  std::vector<int> parent;
  std::vector<int> minid;  // smallest original id in the set, by root

  explicit MinUF(const std::vector<int>& ids)
      : parent(ids.size()), minid(ids) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  // Returns false when both endpoints already share a set (a cycle).
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[a] = b;
    minid[b] = std::min(minid[b], minid[a]);
    return true;
  }
};

// (weight, size, lexicographic) preference between deletion sets.
bool better(const std::pair<VSet, Rat>& cand, const std::pair<VSet, Rat>& best) {
  if (cand.second != best.second) return cand.second < best.second;
  if (cand.first.size() != best.first.size())
    return cand.first.size() < best.first.size();
  return cand.first < best.first;
}

}  // namespace

ParityInstance build_parity_instance(const WeightedGraph& wg, const VSet& r) {
  const MultiGraph& g = wg.g;
  VSet verts = g.vertices();
  for (int v : r) require(g.has_vertex(v), "anchor vertex must exist");

  std::vector<int> ids = verts;
  auto idx = [&](int v) {
    return static_cast<int>(std::lower_bound(ids.begin(), ids.end(), v) -
                            ids.begin());
  };
  MinUF uf(ids);

  // Contract the anchor-side edges; they must form a forest.
  for (auto& [u, v, mult] : edge_list(g)) {
    if (!vs_contains(r, u) || !vs_contains(r, v)) continue;
    require(u != v && mult == 1, "anchor side must induce a forest");
    require(uf.unite(idx(u), idx(v)), "anchor side must induce a forest");
  }

  VSet outside = vs_diff(verts, r);
  // Fix each tripod's lowest leg first so all edges land on final components.
  std::vector<std::pair<int, VSet>> shape;  // (vertex, distinct neighbors)
  for (int f : outside) {
    require(!g.has_loop(f), "outside vertex must be loop-free");
    VSet nb = g.neighbors(f);
    require(g.degree(f) == static_cast<int>(nb.size()),
            "outside vertex must have simple legs");
    require(nb.size() == 2 || nb.size() == 3,
            "outside vertex must be a link or a tripod");
    for (int x : nb) require(vs_contains(r, x), "legs must end in the anchor");
    if (nb.size() == 3) uf.unite(idx(f), idx(nb[0]));
    shape.emplace_back(f, nb);
  }

  auto rep = [&](int v) { return uf.minid[uf.find(idx(v))]; };

  ParityInstance inst;
  inst.outside_weight = 0;
  VSet nodes;
  for (int v : r) vs_insert(nodes, rep(v));
  for (auto& [f, nb] : shape) {
    ParityElement e;
    e.v = f;
    e.w = wg.weight(f);
    inst.outside_weight += e.w;
    auto edge = [](int a, int b) {
      return std::pair<int, int>(std::min(a, b), std::max(a, b));
    };
    if (nb.size() == 2) {
      int a = rep(nb[0]), b = rep(nb[1]);
      require(a != b, "link legs must reach distinct components");
      e.edges.push_back(edge(a, b));
    } else {
      e.tripod = true;
      int c0 = rep(f), c1 = rep(nb[1]), c2 = rep(nb[2]);
      require(c0 != c1 && c0 != c2 && c1 != c2,
              "tripod legs must reach distinct components");
      e.edges.push_back(edge(c0, c1));
      e.edges.push_back(edge(c0, c2));
      vs_insert(nodes, c0);
    }
    inst.elems.push_back(std::move(e));
  }
  inst.nodes = nodes;
  return inst;
}

namespace {

struct NodeUF {
  std::vector<int> parent;
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[a] = b;
    return true;
  }
};

int node_index(const ParityInstance& inst, int id) {
  auto it = std::lower_bound(inst.nodes.begin(), inst.nodes.end(), id);
  require(it != inst.nodes.end() && *it == id, "unknown contracted node");
  return static_cast<int>(it - inst.nodes.begin());
}

std::pair<VSet, Rat> finish(const ParityInstance& inst,
                            const std::vector<char>& kept) {
  VSet x;
  Rat wx = 0, wkept = 0;
  for (std::size_t i = 0; i < inst.elems.size(); ++i) {
    if (kept[i]) {
      wkept += inst.elems[i].w;
    } else {
      x.push_back(inst.elems[i].v);
      wx += inst.elems[i].w;
    }
  }
  require(wx + wkept == inst.outside_weight,
          "deletion and kept weights must split the outside weight");
  return {x, wx};
}

}  // namespace

std::pair<VSet, Rat> solve_parity_exhaustive(const ParityInstance& inst) {
  int ne = static_cast<int>(inst.elems.size());
  require(ne <= kParityExhaustiveMax, "too many elements to enumerate");
  int nn = static_cast<int>(inst.nodes.size());

  std::vector<std::vector<std::pair<int, int>>> eidx(ne);
  for (int i = 0; i < ne; ++i)
    for (auto& [a, b] : inst.elems[i].edges)
      eidx[i].emplace_back(node_index(inst, a), node_index(inst, b));

  std::vector<int> base(nn);
  std::iota(base.begin(), base.end(), 0);

  bool have = false;
  std::pair<VSet, Rat> best;
  NodeUF uf;
  for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << ne); ++mask) {
    uf.parent = base;
    bool ok = true;
    for (int i = 0; i < ne && ok; ++i) {
      if (!(mask >> i & 1)) continue;
      for (auto& [a, b] : eidx[i])
        if (!uf.unite(a, b)) {
          ok = false;
          break;
        }
    }
    if (!ok) continue;
    std::vector<char> kept(ne, 0);
    for (int i = 0; i < ne; ++i) kept[i] = (mask >> i & 1) != 0;
    auto cand = finish(inst, kept);
    if (!have || better(cand, best)) {
      best = std::move(cand);
      have = true;
    }
  }
  require(have, "the empty choice is always acyclic");
  return best;
}

std::pair<VSet, Rat> solve_parity_greedy(const ParityInstance& inst) {
  int ne = static_cast<int>(inst.elems.size());
  int nn = static_cast<int>(inst.nodes.size());
  std::vector<int> tripods, links;
  for (int i = 0; i < ne; ++i)
    (inst.elems[i].tripod ? tripods : links).push_back(i);
  int nt = static_cast<int>(tripods.size());
  require(nt <= kParityTripodSubsetMax, "too many tripods to enumerate");

  std::vector<std::vector<std::pair<int, int>>> eidx(ne);
  for (int i = 0; i < ne; ++i)
    for (auto& [a, b] : inst.elems[i].edges)
      eidx[i].emplace_back(node_index(inst, a), node_index(inst, b));

  // Greedy order for the single-edge elements: heavy first; on ties the
  // larger id, so the leftovers (the deletion set) stay lexicographically
  // smallest.
  std::vector<int> order = links;
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    if (inst.elems[a].w != inst.elems[b].w)
      return inst.elems[a].w > inst.elems[b].w;
    return inst.elems[a].v > inst.elems[b].v;
  });

  std::vector<int> base(nn);
  std::iota(base.begin(), base.end(), 0);

  bool have = false;
  std::pair<VSet, Rat> best;
  NodeUF uf;
  for (std::uint32_t tmask = 0; tmask < (std::uint32_t{1} << nt); ++tmask) {
    uf.parent = base;
    std::vector<char> kept(ne, 0);
    bool ok = true;
    for (int t = 0; t < nt && ok; ++t) {
      if (!(tmask >> t & 1)) continue;
      kept[tripods[t]] = 1;
      for (auto& [a, b] : eidx[tripods[t]])
        if (!uf.unite(a, b)) {
          ok = false;
          break;
        }
    }
    if (!ok) continue;
    for (int i : order)
      if (uf.unite(eidx[i][0].first, eidx[i][0].second)) kept[i] = 1;
    auto cand = finish(inst, kept);
    if (!have || better(cand, best)) {
      best = std::move(cand);
      have = true;
    }
  }
  require(have, "the all-deleted choice is always acyclic");
  return best;
}

std::pair<VSet, Rat> solve_parity(const WeightedGraph& wg, const VSet& r) {
  ParityInstance inst = build_parity_instance(wg, r);
  int nt = 0;
  for (auto& e : inst.elems) nt += e.tripod ? 1 : 0;
  if (static_cast<int>(inst.elems.size()) <= kParityExhaustiveMax)
    return solve_parity_exhaustive(inst);
  require(nt <= kParityTripodSubsetMax,
          "tripod-heavy instance must be branched, not solved directly");
  return solve_parity_greedy(inst);
}

}  // namespace bgvd
