#include "bgvd/matching.hpp"

#include <algorithm>
#include <deque>

namespace bgvd {

namespace {

struct Blossom {
  int n;
  std::vector<std::vector<int>> adj;
  std::vector<int> mate, p, base;
  std::vector<bool> used, blossom;

  explicit Blossom(int n_, const std::vector<std::pair<int, int>>& edges)
      : n(n_), adj(n_), mate(n_, -1), p(n_), base(n_), used(n_), blossom(n_) {
    for (auto& [u, v] : edges)
      if (u != v) {
        adj[u].push_back(v);
        adj[v].push_back(u);
      }
    for (auto& a : adj) {
      std::sort(a.begin(), a.end());
      a.erase(std::unique(a.begin(), a.end()), a.end());
    }
  }

  int lca(int a, int b) {
    std::vector<bool> seen(n, false);
    for (;;) {
      a = base[a];
      seen[a] = true;
      if (mate[a] == -1) break;
      a = p[mate[a]];
    }
    for (;;) {
      b = base[b];
      if (seen[b]) return b;
      b = p[mate[b]];
    }
  }

  void mark_path(int v, int b, int child) {
    while (base[v] != b) {
      blossom[base[v]] = true;
      blossom[base[mate[v]]] = true;
      p[v] = child;
      child = mate[v];
      v = p[mate[v]];
    }
  }

  bool augment_from(int root) {
    std::fill(used.begin(), used.end(), false);
    std::fill(p.begin(), p.end(), -1);
    for (int i = 0; i < n; i++) base[i] = i;
    used[root] = true;
    std::deque<int> q{root};
    while (!q.empty()) {
      int v = q.front();
      q.pop_front();
      for (int u : adj[v]) {
        if (base[v] == base[u] || mate[v] == u) continue;
        if (u == root || (mate[u] != -1 && p[mate[u]] != -1)) {
          int b = lca(v, u);
          std::fill(blossom.begin(), blossom.end(), false);
          mark_path(v, b, u);
          mark_path(u, b, v);
          for (int i = 0; i < n; i++)
            if (blossom[base[i]]) {
              base[i] = b;
              if (!used[i]) {
                used[i] = true;
                q.push_back(i);
              }
            }
        } else if (p[u] == -1) {
          p[u] = v;
          if (mate[u] == -1) {
            // augmenting path found; flip it
            while (u != -1) {
              int pv = p[u], ppv = mate[pv];
              mate[u] = pv;
              mate[pv] = u;
              u = ppv;
            }
            return true;
          }
          used[mate[u]] = true;
          q.push_back(mate[u]);
        }
      }
    }
    return false;
  }
};

}  // namespace

Matching max_matching(int n, const std::vector<std::pair<int, int>>& edges) {
  Blossom bl(n, edges);
  // deterministic greedy seed
  for (int v = 0; v < n; v++)
    if (bl.mate[v] == -1)
      for (int u : bl.adj[v])
        if (bl.mate[u] == -1) {
          bl.mate[v] = u;
          bl.mate[u] = v;
          break;
        }
  for (int v = 0; v < n; v++)
    if (bl.mate[v] == -1) bl.augment_from(v);
  Matching m;
  m.mate = bl.mate;
  for (int v = 0; v < n; v++)
    if (bl.mate[v] > v) m.size++;
  return m;
}

}  // namespace bgvd
