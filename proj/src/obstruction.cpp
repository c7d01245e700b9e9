#include "bgvd/obstruction.hpp"

#include <algorithm>
#include <deque>

#include "bgvd/block_forest.hpp"

namespace bgvd {

namespace {

void require_simple(const MultiGraph& g, const char* who) {
  require(g.is_simple(), std::string(who) + ": graph must be simple");
}

std::vector<int> canonical_cycle(std::vector<int> c) {
  auto mn = std::min_element(c.begin(), c.end());
  std::rotate(c.begin(), mn, c.end());
  if (c.size() >= 3 && c[1] > c.back()) std::reverse(c.begin() + 1, c.end());
  return c;
}

Obstruction make_diamond(int a, int b, int x, int y) {
  Obstruction o;
  o.kind = Obstruction::Kind::diamond;
  o.verts = vs_of({a, b, x, y});
  return o;
}

// Shortest x..y path whose interior avoids both `banned` and x,y themselves;
// BFS over sorted adjacency, so the result is deterministic and chordless.
std::optional<std::vector<int>> induced_path(const MultiGraph& g, int x, int y,
                                             const VSet& banned) {
  std::map<int, int> prev;
  std::deque<int> q{x};
  prev[x] = x;
  while (!q.empty()) {
    int v = q.front();
    q.pop_front();
    if (v == y) break;
    for (int u : g.neighbors(v)) {
      if (prev.count(u)) continue;
      if (u != y && (vs_contains(banned, u) || u == x)) continue;
      prev[u] = v;
      q.push_back(u);
    }
  }
  if (!prev.count(y)) return std::nullopt;
  std::vector<int> path{y};
  while (path.back() != x) path.push_back(prev[path.back()]);
  std::reverse(path.begin(), path.end());
  return path;
}

// Diamond with v as one of its degree-3 or degree-2 vertices.
std::optional<Obstruction> anchored_diamond(const MultiGraph& g, int v) {
  const VSet& nv = g.neighbors(v);
  for (size_t i = 0; i < nv.size(); i++)
    for (size_t j = i + 1; j < nv.size(); j++) {
      int a = nv[i], b = nv[j];
      if (!g.has_edge(a, b)) continue;
      // v,a,b triangle; a fourth vertex adjacent to exactly two of {v,a,b}.
      for (size_t l = 0; l < nv.size(); l++) {
        int c = nv[l];  // v-c edge: diamond v,a,b,c missing (a,c) or (b,c)
        if (c == a || c == b) continue;
        if (g.has_edge(c, a) != g.has_edge(c, b)) return make_diamond(v, a, b, c);
      }
      for (int c : vs_intersect(g.neighbors(a), g.neighbors(b)))  // missing (v,c)
        if (c != v && !g.has_edge(c, v)) return make_diamond(v, a, b, c);
    }
  return std::nullopt;
}

std::optional<Obstruction> any_diamond(const MultiGraph& g) {
  for (auto& [e, mult] : g.edges()) {
    VSet common = vs_intersect(g.neighbors(e.first), g.neighbors(e.second));
    for (size_t i = 0; i < common.size(); i++)
      for (size_t j = i + 1; j < common.size(); j++)
        if (!g.has_edge(common[i], common[j]))
          return make_diamond(e.first, e.second, common[i], common[j]);
  }
  return std::nullopt;
}

// Shortest hole through v, if any: for each non-edge x,y inside N(v), the
// shortest x..y path avoiding the rest of N[v] closes a chordless cycle.
std::optional<std::vector<int>> hole_through(const MultiGraph& g, int v, size_t cap) {
  std::optional<std::vector<int>> best;
  const VSet& nv = g.neighbors(v);
  for (size_t i = 0; i < nv.size(); i++)
    for (size_t j = i + 1; j < nv.size(); j++) {
      int x = nv[i], y = nv[j];
      if (g.has_edge(x, y)) continue;
      VSet banned = nv;
      vs_erase(banned, x);
      vs_erase(banned, y);
      vs_insert(banned, v);
      auto p = induced_path(g, x, y, banned);
      if (!p) continue;
      std::vector<int> cyc{v};
      cyc.insert(cyc.end(), p->begin(), p->end());
      if (!best || cyc.size() < best->size()) best = cyc;
      if (best && best->size() <= cap) return best;
    }
  return best;
}

}  // namespace

bool verify_obstruction(const MultiGraph& g, const Obstruction& o) {
  for (int v : o.verts)
    if (!g.has_vertex(v) || g.has_loop(v)) return false;
  VSet vs = vs_of(o.verts);
  if (vs.size() != o.verts.size()) return false;
  if (o.kind == Obstruction::Kind::diamond) {
    if (vs.size() != 4) return false;
    int edges = 0;
    for (size_t i = 0; i < 4; i++)
      for (size_t j = i + 1; j < 4; j++) {
        int c = g.multiplicity(vs[i], vs[j]);
        if (c > 1) return false;
        edges += c;
      }
    return edges == 5;
  }
  size_t L = o.verts.size();
  if (L < 4) return false;
  for (size_t i = 0; i < L; i++)
    for (size_t j = i + 1; j < L; j++) {
      bool consecutive = (j == i + 1) || (i == 0 && j == L - 1);
      int c = g.multiplicity(o.verts[i], o.verts[j]);
      if (consecutive && c != 1) return false;
      if (!consecutive && c != 0) return false;
    }
  return true;
}

bool is_block_graph(const MultiGraph& g) {
  if (!g.is_simple()) return false;
  auto bcf = block_cut_forest(g);
  for (const VSet& blk : bcf.blocks)
    for (size_t i = 0; i < blk.size(); i++)
      for (size_t j = i + 1; j < blk.size(); j++)
        if (!g.has_edge(blk[i], blk[j])) return false;
  return true;
}

std::optional<Obstruction> find_obstruction(const MultiGraph& g, std::optional<int> anchor) {
  require_simple(g, "find_obstruction");
  if (anchor) {
    require(g.has_vertex(*anchor), "find_obstruction: anchor not in graph");
    if (auto d = anchored_diamond(g, *anchor)) {
      require(verify_obstruction(g, *d), "find_obstruction: bad diamond witness");
      return d;
    }
    if (auto h = hole_through(g, *anchor, 4)) {
      Obstruction o{Obstruction::Kind::hole, canonical_cycle(*h)};
      require(verify_obstruction(g, o), "find_obstruction: bad hole witness");
      return o;
    }
    return std::nullopt;
  }
  if (auto d = any_diamond(g)) {
    require(verify_obstruction(g, *d), "find_obstruction: bad diamond witness");
    return d;
  }
  std::optional<std::vector<int>> best;
  for (int v : g.vertices()) {
    auto h = hole_through(g, v, best ? best->size() - 1 : 4);
    if (h && (!best || h->size() < best->size())) best = h;
    if (best && best->size() == 4) break;
  }
  if (!best) return std::nullopt;
  Obstruction o{Obstruction::Kind::hole, canonical_cycle(*best)};
  require(verify_obstruction(g, o), "find_obstruction: bad hole witness");
  return o;
}

std::optional<Obstruction> find_small_obstruction(const MultiGraph& g) {
  require_simple(g, "find_small_obstruction");
  if (auto d = any_diamond(g)) return d;
  // Induced C4: a non-adjacent pair with two non-adjacent common neighbors.
  const VSet& vs = g.vertices();
  for (size_t i = 0; i < vs.size(); i++)
    for (size_t j = i + 1; j < vs.size(); j++) {
      int u = vs[i], w = vs[j];
      if (g.has_edge(u, w)) continue;
      VSet common = vs_intersect(g.neighbors(u), g.neighbors(w));
      for (size_t a = 0; a < common.size(); a++)
        for (size_t b = a + 1; b < common.size(); b++)
          if (!g.has_edge(common[a], common[b])) {
            Obstruction o{Obstruction::Kind::hole,
                          canonical_cycle({u, common[a], w, common[b]})};
            require(verify_obstruction(g, o), "find_small_obstruction: bad C4");
            return o;
          }
    }
  return std::nullopt;
}

std::vector<VSet> maximal_cliques_c4d4_free(const MultiGraph& g) {
  require_simple(g, "maximal_cliques_c4d4_free");
  std::vector<VSet> cliques;
  for (auto& [e, mult] : g.edges()) {
    VSet k = vs_intersect(g.neighbors(e.first), g.neighbors(e.second));
    vs_insert(k, e.first);
    vs_insert(k, e.second);
    for (size_t i = 0; i < k.size(); i++)
      for (size_t j = i + 1; j < k.size(); j++)
        require(g.has_edge(k[i], k[j]),
                "maximal_cliques_c4d4_free: diamond present, clique ill-defined");
    cliques.push_back(k);
  }
  for (int v : g.vertices())
    if (g.neighbors(v).empty()) cliques.push_back({v});
  std::sort(cliques.begin(), cliques.end());
  cliques.erase(std::unique(cliques.begin(), cliques.end()), cliques.end());
  std::map<std::pair<int, int>, int> edge_count;
  for (const VSet& k : cliques)
    for (size_t i = 0; i < k.size(); i++)
      for (size_t j = i + 1; j < k.size(); j++) edge_count[{k[i], k[j]}]++;
  for (auto& [e, c] : edge_count)
    require(c == 1, "maximal_cliques_c4d4_free: an edge lies in two maximal cliques");
  require(edge_count.size() == (size_t)g.m(),
          "maximal_cliques_c4d4_free: clique edges do not cover the graph");
  return cliques;
}

std::vector<Obstruction> pack_disjoint_obstructions(const MultiGraph& g, int limit,
                                                    PackMode mode) {
  require_simple(g, "pack_disjoint_obstructions");
  std::vector<Obstruction> out;
  MultiGraph work = g;
  while ((int)out.size() < limit) {
    auto o = mode == PackMode::small_only ? find_small_obstruction(work)
                                          : find_obstruction(work);
    if (!o) break;
    work = work.without_vertices(o->vertex_set());
    out.push_back(std::move(*o));
  }
  return out;
}

std::vector<Obstruction> pack_flower(const MultiGraph& g, int v, int limit) {
  require_simple(g, "pack_flower");
  require(g.has_vertex(v), "pack_flower: no such vertex");
  std::vector<Obstruction> out;
  MultiGraph work = g;
  while ((int)out.size() < limit) {
    auto o = find_obstruction(work, v);
    if (!o) break;
    VSet drop = o->vertex_set();
    vs_erase(drop, v);
    work = work.without_vertices(drop);
    out.push_back(std::move(*o));
  }
  return out;
}

}  // namespace bgvd
