#include "bgvd/block_forest.hpp"

#include <algorithm>
#include <functional>

namespace bgvd {

BlockCutForest block_cut_forest(const MultiGraph& g) {
  // Hopcroft-Tarjan lowpoint DFS with an edge stack.
  BlockCutForest out;
  std::map<int, int> num, low;
  std::vector<std::pair<int, int>> estack;
  int timer = 0;

  auto pop_block = [&](std::pair<int, int> top) {
    VSet blk;
    while (true) {
      auto e = estack.back();
      estack.pop_back();
      vs_insert(blk, e.first);
      vs_insert(blk, e.second);
      if (e == top) break;
    }
    out.blocks.push_back(blk);
  };

  std::function<void(int, int)> dfs = [&](int v, int parent) {
    num[v] = low[v] = ++timer;
    int children = 0;
    for (int u : g.neighbors(v)) {
      if (u == parent) continue;  // distinct-neighbor lists hold the parent once
      if (!num.count(u)) {
        children++;
        estack.push_back({v, u});
        dfs(u, v);
        low[v] = std::min(low[v], low[u]);
        if (low[u] >= num[v]) {
          if (num[v] > 1 || children > 1) vs_insert(out.cut_vertices, v);
          pop_block({v, u});
        }
      } else if (num[u] < num[v]) {
        estack.push_back({v, u});
        low[v] = std::min(low[v], num[u]);
      }
    }
  };

  for (int s : g.vertices()) {
    if (num.count(s)) continue;
    timer = 0;
    dfs(s, -2);
  }

  std::sort(out.blocks.begin(), out.blocks.end());
  for (size_t i = 0; i < out.blocks.size(); i++)
    for (int v : out.blocks[i]) out.blocks_of[v].push_back((int)i);
  for (size_t i = 0; i < out.blocks.size(); i++) {
    int cuts = 0;
    for (int v : out.blocks[i])
      if (out.is_cut(v)) cuts++;
    out.kinds.push_back(cuts <= 1   ? BlockCutForest::Kind::leaf
                        : cuts == 2 ? BlockCutForest::Kind::chain
                                    : BlockCutForest::Kind::hub);
  }
  return out;
}

}  // namespace bgvd
