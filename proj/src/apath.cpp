#include "bgvd/apath.hpp"

#include <algorithm>
#include <deque>

#include "bgvd/matching.hpp"

namespace bgvd {

bool has_apath(const MultiGraph& g, const VSet& a, const VSet& removed) {
  for (int s : a) {
    if (!g.has_vertex(s) || vs_contains(removed, s)) continue;
    // BFS from s through non-terminals only; hitting another live terminal
    // (or a parallel edge back to s... impossible: an A-path needs two ends)
    std::deque<int> q{s};
    VSet seen{s};
    while (!q.empty()) {
      int v = q.front();
      q.pop_front();
      for (int u : g.neighbors(v)) {
        if (vs_contains(removed, u) || vs_contains(seen, u)) continue;
        if (vs_contains(a, u)) {
          if (u > s) return true;  // each pair found from its smaller end
          continue;
        }
        vs_insert(seen, u);
        q.push_back(u);
      }
    }
  }
  return false;
}

APathPacking apath_packing(const MultiGraph& g, const VSet& a, int need) {
  for (int s : a) require(g.has_vertex(s), "apath_packing: terminal not in graph");

  // Compact ids: terminals first, then two copies of each non-terminal.
  std::map<int, int> tid;
  std::map<int, std::pair<int, int>> cid;
  int next = 0;
  for (int s : a) tid[s] = next++;
  VSet rest = vs_diff(g.vertices(), a);
  for (int u : rest) {
    cid[u] = {next, next + 1};
    next += 2;
  }
  std::vector<std::pair<int, int>> edges;
  for (auto& [e, mult] : g.edges()) {
    auto [u, v] = e;
    if (u == v) continue;
    bool ua = vs_contains(a, u), va = vs_contains(a, v);
    if (ua && va) edges.push_back({tid[u], tid[v]});
    else if (ua) edges.push_back({tid[u], cid[v].first}), edges.push_back({tid[u], cid[v].second});
    else if (va) edges.push_back({tid[v], cid[u].first}), edges.push_back({tid[v], cid[u].second});
    else {
      edges.push_back({cid[u].first, cid[v].first});
      edges.push_back({cid[u].second, cid[v].second});
    }
  }
  for (int u : rest) edges.push_back({cid[u].first, cid[u].second});

  Matching m = max_matching(next, edges);

  // Project the matching back: terminal-to-terminal components are the paths.
  std::map<int, VSet> padj;  // projected matching edges on original vertices
  std::map<int, int> back;
  for (auto& [v, t] : tid) back[t] = v;
  for (auto& [v, c] : cid) back[c.first] = v, back[c.second] = v;
  for (int i = 0; i < next; i++) {
    int j = m.mate[i];
    if (j <= i) continue;
    int u = back[i], v = back[j];
    if (u == v) continue;  // self-pairing: vertex unused
    vs_insert(padj[u], v);
    vs_insert(padj[v], u);
  }

  APathPacking out;
  VSet visited;
  for (int s : a) {
    if (vs_contains(visited, s) || !padj.count(s) || padj[s].empty()) continue;
    // walk from this terminal; keep only walks ending at another terminal
    std::vector<int> path{s};
    vs_insert(visited, s);
    int prev = -1, cur = s;
    while (true) {
      int nxt = -1;
      for (int u : padj[cur])
        if (u != prev && !vs_contains(visited, u)) {
          nxt = u;
          break;
        }
      if (nxt == -1) break;
      path.push_back(nxt);
      vs_insert(visited, nxt);
      prev = cur;
      cur = nxt;
      if (vs_contains(a, cur)) break;
    }
    if (path.size() >= 2 && vs_contains(a, path.back())) {
      if (path.front() > path.back()) std::reverse(path.begin(), path.end());
      out.paths.push_back(path);
    }
  }
  std::sort(out.paths.begin(), out.paths.end());

  int internals = (int)rest.size();
  require((int)out.paths.size() == m.size - internals,
          "apath_packing: matching size and extracted paths disagree");

  if ((int)out.paths.size() < need) {
    VSet cover;
    for (auto& p : out.paths)
      for (int v : p) vs_insert(cover, v);
    require(!has_apath(g, a, cover), "apath_packing: packing vertices fail to cover");
    // prune to a minimal cover
    for (int v : VSet(cover)) {
      VSet trial = cover;
      vs_erase(trial, v);
      if (!has_apath(g, a, trial)) cover = trial;
    }
    out.cover = cover;
  }
  return out;
}

}  // namespace bgvd
