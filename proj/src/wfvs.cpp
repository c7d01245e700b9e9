#include "bgvd/wfvs.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "bgvd/errors.hpp"
#include "bgvd/matroid_parity.hpp"

namespace bgvd {

namespace {

// Anchor-side component labels (union-find over G[r]).
struct AnchorComps {
  VSet r;
  std::vector<int> comp;  // per r-position: component root position
  int count = 0;

  AnchorComps(const MultiGraph& g, const VSet& rset) : r(rset) {
    int n = static_cast<int>(r.size());
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 0);
    std::function<int(int)> find = [&](int x) {
      while (p[x] != x) x = p[x] = p[p[x]];
      return x;
    };
    for (auto& [u, v, mult] : edge_list(g)) {
      if (u == v || !vs_contains(r, u) || !vs_contains(r, v)) continue;
      int a = find(pos(u)), b = find(pos(v));
      if (a != b) p[a] = b;
    }
    comp.resize(n);
    for (int i = 0; i < n; ++i) comp[i] = find(i);
    for (int i = 0; i < n; ++i) count += comp[i] == i ? 1 : 0;
  }

  int pos(int v) const {
    return static_cast<int>(std::lower_bound(r.begin(), r.end(), v) -
                            r.begin());
  }
  int of(int v) const { return comp[pos(v)]; }
};

bool better(const std::pair<VSet, Rat>& cand,
            const std::pair<VSet, Rat>& best) {
  if (cand.second != best.second) return cand.second < best.second;
  if (cand.first.size() != best.first.size())
    return cand.first.size() < best.first.size();
  return cand.first < best.first;
}

struct NodeCtx {
  WfvsStats* stats;
  const DisjointHooks* hooks;
};

std::optional<std::pair<VSet, Rat>> solve_node(WeightedGraph wg, VSet r,
                                               int k, NodeCtx& ctx);

// Explores one branch child and folds it into `best`.
void consider(std::optional<std::pair<VSet, Rat>>& best,
              std::optional<std::pair<VSet, Rat>> cand) {
  if (!cand) return;
  if (!best || better(*cand, *best)) best = std::move(cand);
}

std::optional<std::pair<VSet, Rat>> solve_node(WeightedGraph wg, VSet r,
                                               int k, NodeCtx& ctx) {
  ++ctx.stats->branch_nodes;
  VSet forced;
  Rat forced_w = 0;
  auto leaf = [&] { ++ctx.stats->leaves; };

  // ---- exhaustive reduction ---------------------------------------------
  for (;;) {
    const MultiGraph& g = wg.g;

    // Vertices of degree <= 1 lie on no cycle.
    {
      int pick = -1;
      for (int v : g.vertices())
        if (g.degree(v) <= 1) {
          pick = v;
          break;
        }
      if (pick != -1) {
        wg = wg.without_vertex(pick);
        vs_erase(r, pick);
        continue;
      }
    }

    auto info = classify_forest_side(g, r);

    // A vertex closing a cycle with the anchor forest must be deleted.
    {
      const ForestVertex* cyc = nullptr;
      for (auto& fv : info)
        if (fv.cyclic) {
          cyc = &fv;
          break;
        }
      if (cyc) {
        if (k == 0) {
          leaf();
          return std::nullopt;
        }
        int v = cyc->v;
        vs_insert(forced, v);
        forced_w += wg.weight(v);
        wg = wg.without_vertex(v);
        --k;
        continue;
      }
    }

    // Edge multiplicities beyond 2 never matter.
    {
      bool capped = false;
      for (auto& [u, v, mult] : edge_list(g))
        if (mult >= 3) {
          wg.g = g.with_multiplicity(u, v, 2);
          capped = true;
          break;
        }
      if (capped) continue;
    }

    // A forest-side leaf with at most two anchor neighbors: reroute its
    // tree edge through a fresh anchor vertex, turning the leaf into a
    // link or tripod without changing which deletion sets work.
    {
      const ForestVertex* sub = nullptr;
      for (auto& fv : info)
        if (fv.forest_deg == 1 &&
            static_cast<int>(fv.anchor_nbrs.size()) <= 2) {
          sub = &fv;
          break;
        }
      if (sub) {
        int v = sub->v;
        int u = -1;
        for (int x : g.neighbors(v))
          if (!vs_contains(r, x)) {
            u = x;
            break;
          }
        require(u != -1 && g.multiplicity(v, u) == 1,
                "forest-side tree edge must be simple");
        int mid = g.fresh_id();
        MultiGraph g2 = g.without_edge(v, u);
        g2.add_edge(v, mid);
        g2.add_edge(mid, u);
        wg.g = std::move(g2);
        wg.set_weight(mid, 1);
        vs_insert(r, mid);
        continue;
      }
    }

    break;
  }

  const MultiGraph& g = wg.g;
  VSet outside = vs_diff(g.vertices(), r);
  if (outside.empty()) {
    leaf();
    return std::make_pair(forced, forced_w);
  }

  int mu = disjoint_measure(g, r, k);
  if (mu < 0) {
    ++ctx.stats->measure_cuts;
    if (ctx.hooks && ctx.hooks->on_measure_cut)
      ctx.hooks->on_measure_cut(wg, r, k);
    leaf();
    return std::nullopt;
  }

  auto info = classify_forest_side(g, r);
  bool all_base = true;
  int tripods = 0;
  for (auto& fv : info) {
    all_base = all_base && (fv.link || fv.tripod);
    tripods += fv.tripod ? 1 : 0;
  }

  if (all_base &&
      (static_cast<int>(outside.size()) <= kParityExhaustiveMax ||
       tripods <= kParityTripodSubsetMax)) {
    ++ctx.stats->parity_calls;
    leaf();
    auto [x, w] = solve_parity(wg, r);
    if (static_cast<int>(x.size()) > k) return std::nullopt;
    return std::make_pair(vs_union(forced, x), forced_w + w);
  }

  // ---- branching ---------------------------------------------------------
  // Normally on a forest-side leaf that is neither a link nor a tripod;
  // when only an oversized base case remains, on a tripod (still exact,
  // only the leaf-count bound degrades).
  int bv = -1;
  if (all_base) {
    for (auto& fv : info)
      if (fv.tripod) {
        bv = fv.v;
        break;
      }
  } else {
    for (auto& fv : info)
      if ((fv.forest_deg == 1 &&
           static_cast<int>(fv.anchor_nbrs.size()) >= 3) ||
          (fv.forest_deg == 0 &&
           static_cast<int>(fv.anchor_nbrs.size()) >= 4)) {
        bv = fv.v;
        break;
      }
  }
  require(bv != -1, "a branchable forest-side leaf must exist");

  std::optional<std::pair<VSet, Rat>> best;
  if (k >= 1) {
    auto child = solve_node(wg.without_vertex(bv), r, k - 1, ctx);
    if (child) {
      VSet x = vs_union(forced, child->first);
      vs_insert(x, bv);
      consider(best,
               std::make_pair(std::move(x), forced_w + wg.weight(bv) +
                                                child->second));
    }
  }
  {
    VSet r2 = r;
    vs_insert(r2, bv);
    auto child = solve_node(wg, std::move(r2), k, ctx);
    if (child)
      consider(best, std::make_pair(vs_union(forced, child->first),
                                    forced_w + child->second));
  }
  return best;
}

}  // namespace

std::vector<ForestVertex> classify_forest_side(const MultiGraph& g,
                                               const VSet& r) {
  AnchorComps ac(g, r);
  std::vector<ForestVertex> out;
  for (int v : g.vertices()) {
    if (vs_contains(r, v)) continue;
    ForestVertex fv;
    fv.v = v;
    fv.cyclic = g.has_loop(v);
    VSet comps_seen;
    for (int x : g.neighbors(v)) {
      if (!vs_contains(r, x)) {
        ++fv.forest_deg;
        continue;
      }
      fv.anchor_nbrs.push_back(x);
      if (g.multiplicity(v, x) >= 2) fv.cyclic = true;
      int c = ac.of(x);
      if (vs_contains(comps_seen, c))
        fv.cyclic = true;
      else
        vs_insert(comps_seen, c);
    }
    if (!fv.cyclic && fv.forest_deg == 0) {
      int a = static_cast<int>(fv.anchor_nbrs.size());
      fv.link = a == 2 && g.degree(v) == 2;
      fv.tripod = a == 3 && g.degree(v) == 3;
    }
    out.push_back(std::move(fv));
  }
  return out;
}

int disjoint_measure(const MultiGraph& g, const VSet& r, int k) {
  AnchorComps ac(g, r);
  int lt = 0;
  for (auto& fv : classify_forest_side(g, r)) lt += (fv.link || fv.tripod) ? 1 : 0;
  return k + ac.count - lt;
}

std::optional<std::pair<VSet, Rat>> solve_disjoint(const WeightedGraph& wg,
                                                   const VSet& r, int k,
                                                   WfvsStats* stats,
                                                   const DisjointHooks* hooks) {
  wg.check();
  require(k >= 0, "budget must be nonnegative");
  for (int v : r) require(wg.g.has_vertex(v), "anchor vertex must exist");
  require(is_forest(wg.g.induced(r)), "anchor set must induce a forest");
  require(is_forest(wg.g.without_vertices(r)),
          "anchor set must hit every cycle");

  WfvsStats local;
  WfvsStats* st = stats ? stats : &local;
  ++st->disjoint_calls;
  std::uint64_t leaves_before = st->leaves;
  NodeCtx ctx{st, hooks};
  auto res = solve_node(wg, r, k, ctx);

  std::uint64_t call_leaves = st->leaves - leaves_before;
  double phi = 1.618;  // golden-ratio base of the leaf bound, truncated (strict side)
  double ratio =
      static_cast<double>(call_leaves) / std::pow(phi, 2.0 * k + 2.0);
  if (call_leaves > st->max_call_leaves) {
    st->max_call_leaves = call_leaves;
    st->max_call_k = k;
  }
  st->worst_leaf_ratio = std::max(st->worst_leaf_ratio, ratio);

  if (!res) return res;
  require(vs_intersect(res->first, r).empty(),
          "solution must avoid the anchor set");
  require(static_cast<int>(res->first.size()) <= k,
          "solution must respect the budget");
  require(is_forest(wg.g.without_vertices(res->first)),
          "solution must leave a forest");
  require(res->second == wg.weight_of(res->first),
          "reported weight must match the vertex weights");
  return res;
}

std::optional<WfvsResult> solve_wfvs(const WeightedGraph& wg, int k,
                                     const DisjointHooks* hooks) {
  wg.check();
  require(k >= 0, "budget must be nonnegative");
  VSet verts = wg.g.vertices();
  k = std::min<long long>(k, static_cast<long long>(verts.size()));

  WfvsStats stats;
  VSet s;  // optimal solution of the processed prefix
  VSet prefix;
  for (int vi : verts) {
    vs_insert(prefix, vi);
    WeightedGraph cur = wg.induced(prefix);
    VSet rset = s;
    vs_insert(rset, vi);
    require(static_cast<int>(rset.size()) <= 30,
            "compression anchor exceeds the supported size");

    std::optional<std::pair<VSet, Rat>> best;
    std::uint64_t nmask = std::uint64_t{1} << rset.size();
    for (std::uint64_t mask = 0; mask < nmask; ++mask) {
      VSet y;
      Rat yw = 0;
      for (std::size_t i = 0; i < rset.size(); ++i)
        if (mask >> i & 1) {
          y.push_back(rset[i]);
          yw += cur.weight(rset[i]);
        }
      if (static_cast<int>(y.size()) > k) continue;
      if (best && yw > best->second) continue;  // equal weight still explored
      VSet rrest = vs_diff(rset, y);
      if (!is_forest(cur.g.induced(rrest))) continue;
      auto sub = solve_disjoint(cur.without_vertices(y), rrest,
                                k - static_cast<int>(y.size()), &stats, hooks);
      if (!sub) continue;
      consider(best, std::make_pair(vs_union(y, sub->first),
                                    yw + sub->second));
    }
    if (!best) return std::nullopt;
    s = best->first;
  }

  Rat w = wg.weight_of(s);
  require(is_forest(wg.g.without_vertices(s)), "result must leave a forest");
  require(static_cast<int>(s.size()) <= k, "result must respect the budget");
  return WfvsResult{s, w, stats};
}

}  // namespace bgvd
