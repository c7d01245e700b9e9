#include "bgvd/oracle.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <vector>

#include "bgvd/errors.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace bgvd {

namespace {

// Bitmask view of a multigraph: simple adjacency plus the defects (loops,
// parallel pairs) that disqualify a graph from being a block graph.
struct MaskedGraph {
  int n = 0;
  std::vector<int> verts;                    // index -> vertex id (ascending)
  std::vector<std::uint64_t> adj;            // simple adjacency, by index
  std::uint64_t loops = 0;                   // indices carrying a loop
  std::vector<std::pair<int, int>> parallel; // index pairs with multiplicity >= 2

  explicit MaskedGraph(const MultiGraph& g) {
    verts = g.vertices();
    n = static_cast<int>(verts.size());
    require(n <= 64, "bitmask oracle needs at most 64 vertices");
    adj.assign(n, 0);
    auto idx = [&](int v) {
      return static_cast<int>(std::lower_bound(verts.begin(), verts.end(), v) -
                              verts.begin());
    };
    for (auto& [u, v, mult] : edge_list(g)) {
      int i = idx(u), j = idx(v);
      if (i == j) {
        loops |= std::uint64_t{1} << i;
        continue;
      }
      adj[i] |= std::uint64_t{1} << j;
      adj[j] |= std::uint64_t{1} << i;
      if (mult >= 2) parallel.emplace_back(i, j);
    }
  }

  std::uint64_t all() const {
    return n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
  }

  // Chordal + diamond-free test restricted to the vertices in `alive`.
  bool block_graph_on(std::uint64_t alive) const {
    if (loops & alive) return false;
    for (auto& [i, j] : parallel) {
      std::uint64_t both =
          (std::uint64_t{1} << i) | (std::uint64_t{1} << j);
      if ((alive & both) == both) return false;
    }

    // Diamond scan: common neighborhoods of adjacent pairs must be cliques.
    for (int i = 0; i < n; ++i) {
      if (!(alive >> i & 1)) continue;
      std::uint64_t ni = adj[i] & alive;
      for (std::uint64_t js = ni & ~((std::uint64_t{2} << i) - 1); js;
           js &= js - 1) {
        int j = std::countr_zero(js);
        std::uint64_t common = ni & adj[j];
        for (std::uint64_t as = common; as; as &= as - 1) {
          int a = std::countr_zero(as);
          if (common & ~(std::uint64_t{1} << a) & ~adj[a]) return false;
        }
      }
    }

    // Maximum cardinality search; the graph is chordal iff the reverse of
    // the visit order is a perfect elimination order.
    std::vector<int> weight(n, 0), order;
    order.reserve(std::popcount(alive));
    std::uint64_t left = alive;
    while (left) {
      int best = -1;
      for (std::uint64_t s = left; s; s &= s - 1) {
        int v = std::countr_zero(s);
        if (best == -1 || weight[v] > weight[best]) best = v;
      }
      order.push_back(best);
      left &= ~(std::uint64_t{1} << best);
      for (std::uint64_t s = adj[best] & left; s; s &= s - 1)
        ++weight[std::countr_zero(s)];
    }
    std::reverse(order.begin(), order.end());  // elimination order
    std::vector<int> pos(n, -1);
    for (int p = 0; p < static_cast<int>(order.size()); ++p)
      pos[order[p]] = p;
    for (int v : order) {
      std::uint64_t later = 0;
      for (std::uint64_t s = adj[v] & alive; s; s &= s - 1) {
        int u = std::countr_zero(s);
        if (pos[u] > pos[v]) later |= std::uint64_t{1} << u;
      }
      if (!later) continue;
      int u = -1;
      for (std::uint64_t s = later; s; s &= s - 1) {
        int c = std::countr_zero(s);
        if (u == -1 || pos[c] < pos[u]) u = c;
      }
      if (later & ~(std::uint64_t{1} << u) & ~adj[u]) return false;
    }
    return true;
  }

  VSet to_vset(std::uint64_t mask) const {
    VSet out;
    for (std::uint64_t s = mask; s; s &= s - 1)
      out.push_back(verts[std::countr_zero(s)]);
    return out;  // ascending indices give ascending ids
  }
};

// (size, lexicographic vertex list) comparison of deletion masks.
bool mask_better(const MaskedGraph& mg, std::uint64_t cand,
                 std::uint64_t best) {
  int pc = std::popcount(cand), pb = std::popcount(best);
  if (pc != pb) return pc < pb;
  return mg.to_vset(cand) < mg.to_vset(best);
}

std::optional<VSet> brute_min_bvd_impl(const MultiGraph& g, int kcap,
                                       bool parallel) {
  MaskedGraph mg(g);
  require(mg.n <= 16, "brute_min_bvd needs at most 16 vertices");
  std::uint64_t lim = std::uint64_t{1} << mg.n;
  std::uint64_t all = mg.all();
  bool found = false;
  std::uint64_t best = all;  // deleting everything always works

  if (parallel) {
#ifdef _OPENMP
#pragma omp parallel
    {
      bool lfound = false;
      std::uint64_t lbest = all;
#pragma omp for schedule(static) nowait
      for (std::int64_t m = 0; m < static_cast<std::int64_t>(lim); ++m) {
        auto del = static_cast<std::uint64_t>(m);
        if (lfound && std::popcount(del) > std::popcount(lbest)) continue;
        if (!mg.block_graph_on(all & ~del)) continue;
        if (!lfound || mask_better(mg, del, lbest)) {
          lbest = del;
          lfound = true;
        }
      }
#pragma omp critical
      {
        if (lfound && (!found || mask_better(mg, lbest, best))) {
          best = lbest;
          found = true;
        }
      }
    }
#else
    parallel = false;
#endif
  }
  if (!parallel) {
    for (std::uint64_t del = 0; del < lim; ++del) {
      if (found && std::popcount(del) > std::popcount(best)) continue;
      if (!mg.block_graph_on(all & ~del)) continue;
      if (!found || mask_better(mg, del, best)) {
        best = del;
        found = true;
      }
    }
  }
  require(found || mg.n == 0, "deleting all vertices must succeed");
  if (kcap >= 0 && std::popcount(best) > kcap) return std::nullopt;
  return mg.to_vset(best);
}

}  // namespace

bool is_block_graph_independent(const MultiGraph& g) {
  MaskedGraph mg(g);
  return mg.block_graph_on(mg.all());
}

std::optional<VSet> brute_min_bvd(const MultiGraph& g, int kcap) {
  return brute_min_bvd_impl(g, kcap, false);
}

std::optional<VSet> brute_min_bvd_parallel(const MultiGraph& g, int kcap) {
  return brute_min_bvd_impl(g, kcap, true);
}

const char* oracle_backend() {
#ifdef _OPENMP
  return "openmp";
#else
  return "serial";
#endif
}

std::optional<std::pair<VSet, Rat>> brute_min_wfvs(const WeightedGraph& wg,
                                                   int k,
                                                   const VSet& forbid) {
  wg.check();
  const MultiGraph& g = wg.g;
  VSet verts = g.vertices();
  int n = static_cast<int>(verts.size());
  require(n <= 14, "brute_min_wfvs needs at most 14 vertices");
  for (int v : forbid)
    require(g.has_vertex(v), "forbidden vertex must exist");

  std::vector<int> cand;  // deletable vertices, ascending
  for (int v : verts)
    if (!vs_contains(forbid, v)) cand.push_back(v);
  int c = static_cast<int>(cand.size());

  auto edges = edge_list(g);
  std::vector<int> idx_of(n, -1);
  auto vidx = [&](int v) {
    return static_cast<int>(std::lower_bound(verts.begin(), verts.end(), v) -
                            verts.begin());
  };

  // Union-find forest test on the surviving vertices.
  std::vector<int> uf(n);
  auto find = [&](int x) {
    while (uf[x] != x) x = uf[x] = uf[uf[x]];
    return x;
  };
  auto is_forest_after = [&](std::uint64_t del) {
    for (int i = 0; i < n; ++i) uf[i] = i;
    for (auto& [u, v, mult] : edges) {
      int iu = vidx(u), iv = vidx(v);
      if (idx_of[iu] >= 0 && (del >> idx_of[iu] & 1)) continue;
      if (idx_of[iv] >= 0 && (del >> idx_of[iv] & 1)) continue;
      if (iu == iv || mult >= 2) return false;
      int a = find(iu), b = find(iv);
      if (a == b) return false;
      uf[a] = b;
    }
    return true;
  };
  for (int i = 0; i < c; ++i) idx_of[vidx(cand[i])] = i;

  bool found = false;
  VSet best_set;
  Rat best_w = 0;
  for (std::uint64_t del = 0; del < (std::uint64_t{1} << c); ++del) {
    if (std::popcount(del) > k) continue;
    if (!is_forest_after(del)) continue;
    VSet x;
    Rat w = 0;
    for (std::uint64_t s = del; s; s &= s - 1) {
      int v = cand[std::countr_zero(s)];
      x.push_back(v);
      w += wg.weight(v);
    }
    if (!found || w < best_w ||
        (w == best_w &&
         (x.size() < best_set.size() ||
          (x.size() == best_set.size() && x < best_set)))) {
      found = true;
      best_set = x;
      best_w = w;
    }
  }
  if (!found) return std::nullopt;
  return std::make_pair(best_set, best_w);
}

int brute_max_apaths(const MultiGraph& g, const VSet& a) {
  VSet verts = g.vertices();
  int n = static_cast<int>(verts.size());
  require(n <= 16, "brute_max_apaths needs at most 16 vertices");
  for (int t : a) require(g.has_vertex(t), "terminal must exist");

  auto vidx = [&](int v) {
    return static_cast<int>(std::lower_bound(verts.begin(), verts.end(), v) -
                            verts.begin());
  };
  std::vector<std::uint32_t> adj(n, 0);
  std::uint32_t amask = 0;
  for (int i = 0; i < n; ++i)
    for (int u : g.neighbors(verts[i])) adj[i] |= std::uint32_t{1} << vidx(u);
  for (int t : a) amask |= std::uint32_t{1} << vidx(t);

  constexpr int kNeg = -(1 << 20);
  std::vector<int> fmemo(std::size_t{1} << n, -1);
  std::vector<int> wmemo((std::size_t{1} << n) * n, kNeg - 1);

  std::function<int(std::uint32_t)> f;
  // walk(mask, u): best completion of a path currently ending at u (already
  // consumed), extending through vertices of mask; kNeg when no terminal is
  // reachable.
  std::function<int(std::uint32_t, int)> walk;
  f = [&](std::uint32_t mask) -> int {
    std::uint32_t live = mask & amask;
    if (!live) return 0;
    int& memo = fmemo[mask];
    if (memo >= 0) return memo;
    int i = std::countr_zero(live);
    std::uint32_t rest = mask & ~(std::uint32_t{1} << i);
    int best = f(rest);                       // lowest terminal unused
    best = std::max(best, walk(rest, i));     // or starts a path
    return memo = best;
  };
  walk = [&](std::uint32_t mask, int u) -> int {
    int& memo = wmemo[(std::size_t{1} << n) * u + mask];
    if (memo >= kNeg) return memo;
    int best = kNeg;
    for (std::uint32_t s = adj[u] & mask; s; s &= s - 1) {
      int v = std::countr_zero(s);
      std::uint32_t rest = mask & ~(std::uint32_t{1} << v);
      if (amask >> v & 1)
        best = std::max(best, 1 + f(rest));
      else
        best = std::max(best, walk(rest, v));
    }
    return memo = best;
  };

  std::uint32_t full =
      n == 32 ? ~std::uint32_t{0} : (std::uint32_t{1} << n) - 1;
  return f(full);
}

}  // namespace bgvd
