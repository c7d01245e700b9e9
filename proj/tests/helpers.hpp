#pragma once
// Small graph builders shared by the unit test suites.

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "bgvd/multigraph.hpp"
#include "bgvd/rational.hpp"

namespace testutil {

inline bgvd::MultiGraph from_edges(
    int n, const std::vector<std::pair<int, int>>& es) {
  bgvd::MultiGraph g;
  for (int v = 1; v <= n; ++v) g.add_vertex(v);
  for (auto& [u, v] : es) g.add_edge(u, v);
  return g;
}

inline bgvd::MultiGraph path_graph(int n) {
  std::vector<std::pair<int, int>> es;
  for (int i = 1; i < n; ++i) es.push_back({i, i + 1});
  return from_edges(n, es);
}

inline bgvd::MultiGraph cycle_graph(int n) {
  std::vector<std::pair<int, int>> es;
  for (int i = 1; i < n; ++i) es.push_back({i, i + 1});
  es.push_back({n, 1});
  return from_edges(n, es);
}

inline bgvd::MultiGraph clique_graph(int n) {
  std::vector<std::pair<int, int>> es;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) es.push_back({i, j});
  return from_edges(n, es);
}

// K4 minus the 3-4 edge.
inline bgvd::MultiGraph diamond_graph() {
  return from_edges(4, {{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}});
}

// Disjoint union; b's vertices are shifted past a's largest id.
inline bgvd::MultiGraph side_by_side(const bgvd::MultiGraph& a,
                                     const bgvd::MultiGraph& b) {
  bgvd::MultiGraph g = a;
  int off = 0;
  for (int v : a.vertices()) off = std::max(off, v);
  for (int v : b.vertices()) g.add_vertex(v + off);
  for (auto& [e, mult] : b.edges())
    g.add_edge(e.first + off, e.second + off, mult);
  return g;
}

inline bgvd::WeightedGraph unit_weights(const bgvd::MultiGraph& g) {
  bgvd::WeightedGraph wg;
  wg.g = g;
  for (int v : g.vertices()) wg.set_weight(v, 1);
  return wg;
}

inline std::uint64_t rnd(std::mt19937_64& rng, std::uint64_t n) {
  return rng() % n;
}

}  // namespace testutil
