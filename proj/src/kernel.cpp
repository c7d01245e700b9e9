#include "bgvd/kernel.hpp"

#include <algorithm>
#include <climits>
#include <string>
#include <utility>

#include "bgvd/apath.hpp"
#include "bgvd/approx.hpp"
#include "bgvd/errors.hpp"
#include "bgvd/expansion.hpp"

namespace bgvd {
namespace {

// ---------------------------------------------------------------- structure

StructureResult structure_at(const MultiGraph& g, int v, int k,
                             const std::vector<Obstruction>* shared_pack) {
  require(g.is_simple(), "structure analysis needs a simple graph");
  require(g.has_vertex(v), "structure analysis: unknown pivot");
  require(k >= 0, "structure analysis: negative budget");

  std::vector<Obstruction> pack =
      shared_pack ? *shared_pack
                  : pack_disjoint_obstructions(g, k + 1, PackMode::free);
  if ((int)pack.size() >= k + 1) {
    StructureResult r;
    r.kind = StructureResult::Kind::disjoint_pack;
    r.pack = std::move(pack);
    for (size_t i = 0; i < r.pack.size(); ++i)
      for (size_t j = i + 1; j < r.pack.size(); ++j)
        require(vs_intersect(r.pack[i].vertex_set(), r.pack[j].vertex_set())
                    .empty(),
                "obstruction pack is not vertex-disjoint");
    return r;
  }

  std::vector<Obstruction> petals = pack_flower(g, v, k + 1);
  for (auto& p : petals)
    require(vs_contains(p.vertex_set(), v), "petal misses its pivot");
  if ((int)petals.size() >= k + 1) {
    StructureResult r;
    r.kind = StructureResult::Kind::flower;
    r.petals = std::move(petals);
    for (size_t i = 0; i < r.petals.size(); ++i)
      for (size_t j = i + 1; j < r.petals.size(); ++j)
        require(vs_intersect(r.petals[i].vertex_set(),
                             r.petals[j].vertex_set()) == vs_of({v}),
                "petals overlap outside the pivot");
    return r;
  }

  // The flower packing is maximal, so its vertices (minus the pivot) already
  // meet every obstruction through the pivot; the path cover and the local
  // 2-edge-path packing keep the set small on the shapes later rules rely on.
  VSet hit;
  for (auto& p : petals) hit = vs_union(hit, p.vertex_set());
  vs_erase(hit, v);

  const VSet nv = g.neighbors(v);
  if (nv.size() >= 2) {
    MultiGraph gp = g.without_vertex(v);
    for (size_t i = 0; i < nv.size(); ++i)
      for (size_t j = i + 1; j < nv.size(); ++j)
        if (gp.has_edge(nv[i], nv[j])) gp = gp.without_edge(nv[i], nv[j]);
    APathPacking ap = apath_packing(gp, nv, INT_MAX);
    hit = vs_union(hit, ap.cover);
  }

  // Maximal packing of induced 2-edge paths among the pivot's neighbors: each
  // one spans a diamond whose degree-3 pair contains the pivot.
  VSet pool = nv;
  bool grew = true;
  while (grew) {
    grew = false;
    for (size_t ci = 0; ci < pool.size() && !grew; ++ci) {
      int c = pool[ci];
      VSet cn = vs_intersect(g.neighbors(c), pool);
      for (size_t i = 0; i < cn.size() && !grew; ++i)
        for (size_t j = i + 1; j < cn.size() && !grew; ++j)
          if (!g.has_edge(cn[i], cn[j])) {
            hit = vs_union(hit, vs_of({c, cn[i], cn[j]}));
            pool = vs_diff(pool, vs_of({c, cn[i], cn[j]}));
            grew = true;
          }
    }
  }

  require(!vs_contains(hit, v), "hitting set must avoid the pivot");
  require(!find_obstruction(g.without_vertices(hit), v),
          "hitting set misses an obstruction through the pivot");
  StructureResult r;
  r.kind = StructureResult::Kind::hitting_set;
  r.petals = std::move(petals);
  r.hitting = std::move(hit);
  return r;
}

// ------------------------------------------------------------------- rules

bool try_component(KernelState& st) {
  for (const VSet& comp : components(st.g)) {
    if (!is_block_graph(st.g.induced(comp))) continue;
    TraceStep t;
    t.rule = "component";
    t.removed_vertices = comp;
    t.k_after = st.k;
    st.g = st.g.without_vertices(comp);
    st.trace.push_back(std::move(t));
    return true;
  }
  return false;
}

bool try_pendant(KernelState& st) {
  for (int v : st.g.vertices()) {
    MultiGraph rest = st.g.without_vertex(v);
    for (const VSet& comp : components(rest)) {
      if (vs_intersect(st.g.neighbors(v), comp).empty()) continue;
      VSet with_v = comp;
      vs_insert(with_v, v);
      if (!is_block_graph(st.g.induced(with_v))) continue;
      TraceStep t;
      t.rule = "pendant";
      t.pivot = v;
      t.removed_vertices = comp;
      t.k_after = st.k;
      st.g = st.g.without_vertices(comp);
      st.trace.push_back(std::move(t));
      return true;
    }
  }
  return false;
}

bool try_twins(KernelState& st) {
  for (const VSet& cls : true_twin_classes(st.g)) {
    if ((int)cls.size() <= st.k + 2) continue;
    if (!st.g.has_edge(cls[0], cls[1])) continue;  // only pairwise-adjacent twins
    VSet extra(cls.begin() + (st.k + 2), cls.end());
    TraceStep t;
    t.rule = "twins";
    t.pivot = cls[0];
    t.removed_vertices = extra;
    t.k_after = st.k;
    t.note = "class of " + std::to_string(cls.size()) + " capped at " +
             std::to_string(st.k + 2);
    st.g = st.g.without_vertices(extra);
    st.trace.push_back(std::move(t));
    return true;
  }
  return false;
}

// Clique whose members see exactly {p, q} outside of it?
bool private_clique(const MultiGraph& g, const VSet& s, int p, int q) {
  const VSet pq = vs_of({p, q});
  for (int x : s)
    if (vs_diff(g.neighbors(x), s) != pq) return false;
  for (size_t i = 0; i < s.size(); ++i)
    for (size_t j = i + 1; j < s.size(); ++j)
      if (!g.has_edge(s[i], s[j])) return false;
  return true;
}

bool try_chain(KernelState& st) {
  const MultiGraph& g = st.g;
  for (auto [a, b, mult] : edge_list(g)) {
    (void)mult;
    for (auto [t2, t3] : {std::pair{a, b}, std::pair{b, a}}) {
      // The middle clique can only be the full common neighborhood.
      VSet sm = vs_intersect(g.neighbors(t2), g.neighbors(t3));
      if (!private_clique(g, sm, t2, t3)) continue;
      VSet n2rest = vs_diff(g.neighbors(t2), sm);
      vs_erase(n2rest, t3);
      VSet n3rest = vs_diff(g.neighbors(t3), sm);
      vs_erase(n3rest, t2);
      if (n2rest.empty() || n3rest.empty()) continue;
      for (int t1 : n2rest) {
        if (g.has_edge(t1, t3)) continue;
        VSet s1 = n2rest;
        vs_erase(s1, t1);
        if (!private_clique(g, s1, t1, t2)) continue;
        for (int t4 : n3rest) {
          if (t4 == t1 || g.has_edge(t2, t4) || g.has_edge(t1, t4)) continue;
          VSet s3 = n3rest;
          vs_erase(s3, t4);
          if (!private_clique(g, s3, t3, t4)) continue;
          TraceStep t;
          t.rule = "chain";
          t.pivot = t2;
          t.removed_vertices = sm;
          t.merged_from_u = t2;
          t.merged_from_v = t3;
          t.k_after = st.k;
          MultiGraph g2 = st.g.without_vertices(sm);
          Contraction con = contract_edge(g2, t2, t3);
          require(con.g.is_simple(),
                  "chain compression created parallel edges");
          t.merged_into = con.merged;
          t.note = "anchors " + std::to_string(t1) + "," + std::to_string(t4);
          st.g = std::move(con.g);
          st.trace.push_back(std::move(t));
          return true;
        }
      }
    }
  }
  return false;
}

// Shared endgame of the forced-vertex rule and the flower case: answer No
// when k+1 disjoint obstructions exist, otherwise the pivot is in every
// solution of size <= k.
void fire_forced(KernelState& st, int v, const std::string& why) {
  auto pack = pack_disjoint_obstructions(st.g, st.k + 1, PackMode::free);
  if ((int)pack.size() >= st.k + 1) {
    std::string reason = "no-instance: " + std::to_string(st.k + 1) +
                         " vertex-disjoint obstructions";
    TraceStep t;
    t.rule = "forced";
    t.pivot = v;
    t.k_after = st.k;
    t.note = reason;
    st.trace.push_back(std::move(t));
    st.decided = true;
    st.feasible = false;
    st.verdict_reason = reason;
    return;
  }
  require(st.k >= 1, "forced deletion with exhausted budget");
  TraceStep t;
  t.rule = "forced";
  t.pivot = v;
  t.removed_vertices = vs_of({v});
  t.k_after = st.k - 1;
  t.note = why;
  st.g = st.g.without_vertex(v);
  st.k -= 1;
  st.trace.push_back(std::move(t));
}

bool try_forced(KernelState& st) {
  for (int v : st.g.vertices()) {
    const VSet nv = st.g.neighbors(v);
    if ((int)nv.size() < 4 * st.k + 2) continue;
    MultiGraph gp = st.g.without_vertex(v);
    for (size_t i = 0; i < nv.size(); ++i)
      for (size_t j = i + 1; j < nv.size(); ++j)
        if (gp.has_edge(nv[i], nv[j])) gp = gp.without_edge(nv[i], nv[j]);
    APathPacking ap = apath_packing(gp, nv, 2 * st.k + 1);
    if ((int)ap.paths.size() < 2 * st.k + 1) continue;
    fire_forced(st, v,
                std::to_string(2 * st.k + 1) + " openly disjoint paths "
                "between neighbors");
    return true;
  }
  return false;
}

void push_verdict(KernelState& st, const std::string& reason) {
  st.decided = true;
  st.feasible = false;
  st.verdict_reason = reason;
  TraceStep t;
  t.rule = "verdict";
  t.k_after = st.k;
  t.note = reason;
  st.trace.push_back(std::move(t));
}

std::optional<std::string> stage_fan(KernelState& st) {
  VSet a = approx_bgvd_4(st.g);
  if ((int)a.size() > 4 * st.k) {
    push_verdict(st, "approximate solution exceeds 4k");
    return std::string("verdict");
  }
  st.approx = a;
  st.guard.clear();

  auto pack = pack_disjoint_obstructions(st.g, st.k + 1, PackMode::free);
  if ((int)pack.size() >= st.k + 1) {
    push_verdict(st, "no-instance: " + std::to_string(st.k + 1) +
                         " vertex-disjoint obstructions");
    return std::string("verdict");
  }

  for (int v : st.g.vertices()) {
    StructureResult sr = structure_at(st.g, v, st.k, &pack);
    if (sr.kind == StructureResult::Kind::flower) {
      fire_forced(st, v, "flower of " + std::to_string(st.k + 1) +
                             " obstructions through the pivot");
      return std::string("forced");
    }
    require(sr.kind == StructureResult::Kind::hitting_set,
            "disjoint pack resurfaced during the fan stage");

    VSet sv;
    if (!vs_contains(a, v)) {
      sv = a;
    } else {
      sv = a;
      vs_erase(sv, v);
      sv = vs_union(sv, sr.hitting);
    }
    require(!vs_contains(sv, v), "guard set contains its pivot");
    require(is_block_graph(st.g.without_vertices(sv)),
            "guard set is not a deletion set");
    if ((int)sr.hitting.size() > 7 * st.k)
      st.warnings.push_back("pivot " + std::to_string(v) +
                            ": hitting set of size " +
                            std::to_string(sr.hitting.size()) +
                            " exceeds 7k");
    st.guard[v] = sv;
    if (sv.empty()) continue;  // a block graph minus nothing has no fans to thin

    VSet blocked = sv;
    vs_insert(blocked, v);
    std::vector<VSet> fans;
    VSet reps;
    std::map<int, VSet> attach;
    for (const VSet& comp : components(st.g.without_vertices(blocked))) {
      if (vs_intersect(st.g.neighbors(v), comp).empty()) continue;
      VSet att;
      for (int s : sv)
        if (!vs_intersect(st.g.neighbors(s), comp).empty()) vs_insert(att, s);
      require(!att.empty(), "fan component lost its guard attachment");
      fans.push_back(comp);
      vs_insert(reps, comp.front());
      attach[comp.front()] = att;
    }
    if ((int)fans.size() <= 3 * (int)sv.size()) continue;

    Expansion exp = find_expansion(sv, reps, attach, 3);
    require(!exp.xs.empty(), "expansion returned no centers");

    TraceStep t;
    t.rule = "fan";
    t.pivot = v;
    t.k_after = st.k;
    std::map<int, const VSet*> by_rep;
    for (const VSet& f : fans) by_rep[f.front()] = &f;
    for (int rep : exp.ys) {
      for (int u : *by_rep.at(rep)) {
        if (!st.g.has_edge(v, u)) continue;
        st.g = st.g.without_edge(v, u);
        t.removed_edges.emplace_back(std::min(u, v), std::max(u, v));
      }
    }
    for (int s : exp.xs) {
      for (int copy = 0; copy < 2; ++copy) {
        int p = st.g.fresh_id();
        st.g.add_vertex(p);
        st.g.add_edge(v, p);
        st.g.add_edge(p, s);
        vs_insert(t.added_vertices, p);
        t.added_edges.emplace_back(std::min(v, p), std::max(v, p));
        t.added_edges.emplace_back(std::min(p, s), std::max(p, s));
      }
    }
    t.note = "detached " + std::to_string(exp.ys.size()) + " of " +
             std::to_string(fans.size()) + " fans; guard size " +
             std::to_string(sv.size());
    st.trace.push_back(std::move(t));
    return std::string("fan");
  }
  return std::nullopt;
}

}  // namespace

StructureResult analyze_obstructions_at(const MultiGraph& g, int v, int k) {
  return structure_at(g, v, k, nullptr);
}

VSet guard_set_at(const MultiGraph& g, int v, int k,
                  const VSet& approx_solution) {
  require(g.has_vertex(v), "guard set: unknown pivot");
  if (!vs_contains(approx_solution, v)) return approx_solution;
  StructureResult sr = analyze_obstructions_at(g, v, k);
  require(sr.kind == StructureResult::Kind::hitting_set,
          "guard set requested where the instance already resolves");
  VSet out = approx_solution;
  vs_erase(out, v);
  return vs_union(out, sr.hitting);
}

std::optional<std::string> apply_next_rule(KernelState& st) {
  if (st.decided) return std::nullopt;
  require(st.g.is_simple(), "kernel state must stay simple");
  if (try_component(st)) return std::string("component");
  if (try_pendant(st)) return std::string("pendant");
  if (try_twins(st)) return std::string("twins");
  if (try_chain(st)) return std::string("chain");
  if (try_forced(st)) return std::string("forced");
  return stage_fan(st);
}

KernelState kernelize(const MultiGraph& g, int k) {
  require(g.is_simple(), "kernelize needs a simple graph");
  require(k >= 0, "kernelize: negative budget");
  KernelState st;
  st.g = g;
  st.k = k;
  const int budget = 200 + 20 * (g.n() + k);
  while (!st.decided) {
    auto fired = apply_next_rule(st);
    if (!fired) break;
    st.iterations += 1;
    require(st.iterations <= budget, "kernelize: iteration budget exceeded");
  }
  if (!st.decided && st.g.n() == 0) {
    st.decided = true;
    st.feasible = true;
    st.verdict_reason = "graph fully reduced";
  }
  return st;
}

}  // namespace bgvd
