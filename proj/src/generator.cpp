#include "bgvd/generator.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <utility>
#include <vector>

#include "bgvd/errors.hpp"
#include "bgvd/obstruction.hpp"

namespace bgvd {
namespace {

uint64_t rnd(std::mt19937_64& rng, uint64_t n) {
  require(n > 0, "rnd: empty range");
  return rng() % n;
}

double unit(std::mt19937_64& rng) {
  return (double)(rng() >> 11) * (1.0 / 9007199254740992.0);  // 53 bits
}

// slots 0..n-1 relabeled to a permutation of 1..n; slot `fixed` (when >= 0)
// keeps label fixed+1.
Instance finish(int n, const std::set<std::pair<int, int>>& edges,
                std::mt19937_64& rng, bool shuffle, int fixed = -1) {
  std::vector<int> label(n);
  for (int i = 0; i < n; ++i) label[i] = i + 1;
  if (shuffle) {
    int start = fixed == 0 ? 1 : 0;
    require(fixed <= 0, "finish: only slot 0 can stay fixed");
    for (int i = n - 1; i > start; --i) {
      int j = start + (int)rnd(rng, (uint64_t)(i - start + 1));
      std::swap(label[i], label[j]);
    }
  }
  Instance inst;
  inst.problem = Instance::Problem::bgvd;
  for (int i = 1; i <= n; ++i) inst.g.add_vertex(i);
  for (auto [u, v] : edges) inst.g.add_edge(label[u], label[v]);
  return inst;
}

void add_c4(std::set<std::pair<int, int>>& edges, int a, int b, int c, int d) {
  edges.insert({a, b});
  edges.insert({b, c});
  edges.insert({c, d});
  edges.insert({a, d});
}

// A connected block graph over slots [first, first+count): cliques of 1..4
// vertices joined by bridge edges, the first clique bridged to `anchor` when
// anchor >= 0.
void add_block_blob(std::set<std::pair<int, int>>& edges, int first, int count,
                    int anchor, std::mt19937_64& rng) {
  int placed = 0;
  while (placed < count) {
    int size = std::min((int)rnd(rng, 4) + 1, count - placed);
    int lo = first + placed;
    for (int i = 0; i < size; ++i)
      for (int j = i + 1; j < size; ++j) edges.insert({lo + i, lo + j});
    int hook = placed > 0 ? first + (int)rnd(rng, placed) : anchor;
    int target = lo + (int)rnd(rng, size);
    if (hook >= 0)
      edges.insert({std::min(hook, target), std::max(hook, target)});
    placed += size;
  }
}

}  // namespace

Instance gen_random_gnp(int n, double p, uint64_t seed) {
  require(n >= 0, "random-gnp: negative n");
  require(p >= 0.0 && p <= 1.0, "random-gnp: p outside [0,1]");
  std::mt19937_64 rng(seed);
  std::set<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (unit(rng) < p) edges.insert({i, j});
  return finish(n, edges, rng, false);
}

Instance gen_planted_bgvd(int n, int k, uint64_t seed) {
  require(n >= 1, "planted-bgvd: need n >= 1");
  require(k >= 0 && k < n, "planted-bgvd: need 0 <= k < n");
  std::mt19937_64 rng(seed);
  std::set<std::pair<int, int>> edges;
  int base = n - k;
  add_block_blob(edges, 0, base, -1, rng);
  for (int t = 0; t < k; ++t) {
    int v = base + t;
    int d = 2 + (int)rnd(rng, 4);
    for (int i = 0; i < d; ++i) {
      int u = (int)rnd(rng, (uint64_t)v);
      edges.insert({u, v});
    }
  }
  return finish(n, edges, rng, true);
}

Instance gen_flower(int petals, uint64_t seed) {
  require(petals >= 1, "flower: need at least one petal");
  std::mt19937_64 rng(seed);
  std::set<std::pair<int, int>> edges;
  for (int i = 0; i < petals; ++i) {
    int a = 1 + 3 * i, b = a + 1, c = a + 2;
    add_c4(edges, 0, a, b, c);
  }
  return finish(1 + 3 * petals, edges, rng, true, 0);  // hub stays vertex 1
}

Instance gen_disjoint_c4(int t, uint64_t seed) {
  require(t >= 1, "disjoint-c4: need t >= 1");
  std::mt19937_64 rng(seed);
  std::set<std::pair<int, int>> edges;
  for (int i = 0; i < t; ++i)
    add_c4(edges, 4 * i, 4 * i + 1, 4 * i + 2, 4 * i + 3);
  return finish(4 * t, edges, rng, true);
}

Instance gen_random_wfvs(int n, int maxm, int k, uint64_t seed) {
  require(n >= 0, "random-wfvs: negative n");
  require(maxm >= 0, "random-wfvs: negative maxm");
  require(k >= 0, "random-wfvs: negative k");
  std::mt19937_64 rng(seed);
  Instance inst;
  inst.problem = Instance::Problem::wfvs;
  inst.k = k;
  for (int v = 1; v <= n; ++v) inst.g.add_vertex(v);
  int m = n >= 2 ? (int)rnd(rng, (uint64_t)maxm + 1) : 0;
  for (int i = 0; i < m; ++i) {
    int u = 1 + (int)rnd(rng, (uint64_t)n);
    int v = 1 + (int)rnd(rng, (uint64_t)n);
    while (v == u) v = 1 + (int)rnd(rng, (uint64_t)n);
    inst.g.add_edge(u, v);
  }
  for (int v = 1; v <= n; ++v) inst.w[v] = rat(1 + (long)rnd(rng, 9));
  return inst;
}

MultiGraph gen_c4d4_free(int n, double p, uint64_t seed) {
  std::mt19937_64 rng(seed);
  MultiGraph g;
  for (int v = 1; v <= n; ++v) g.add_vertex(v);
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      if (unit(rng) < p) g.add_edge(i, j);
  while (auto o = find_small_obstruction(g)) {
    const VSet vs = o->vertex_set();
    g = g.without_vertex(vs[rnd(rng, vs.size())]);
  }
  return g;
}

Instance gen_rule_instance(const std::string& rule, int k, uint64_t seed) {
  require(k >= 0, "rule instance: negative k");
  std::mt19937_64 rng(seed);
  std::set<std::pair<int, int>> edges;

  if (rule == "component") {
    // A free-floating block blob next to a C4.
    int blob = 3 + (int)rnd(rng, 5);  // 3..7 vertices
    add_block_blob(edges, 0, blob, -1, rng);
    add_c4(edges, blob, blob + 1, blob + 2, blob + 3);
    return finish(blob + 4, edges, rng, true);
  }

  if (rule == "pendant") {
    // A C4 with one or two block-graph hangs bridged onto its vertices.
    add_c4(edges, 0, 1, 2, 3);
    int hang = 2 + (int)rnd(rng, 3);  // 2..4 vertices
    add_block_blob(edges, 4, hang, (int)rnd(rng, 4), rng);
    int total = 4 + hang;
    if (rnd(rng, 2) == 0 && total + 2 <= 12) {
      add_block_blob(edges, total, 2, (int)rnd(rng, 4), rng);
      total += 2;
    }
    return finish(total, edges, rng, true);
  }

  if (rule == "twins") {
    // C4 slots 0-1-2-3 with slot 0 blown up into a class of k+3 mutually
    // adjacent twins, all attached to slots 1 and 3.
    int cls = k + 3;
    std::vector<int> members{0};
    for (int i = 0; i < cls - 1; ++i) members.push_back(4 + i);
    edges.insert({1, 2});
    edges.insert({2, 3});
    for (size_t i = 0; i < members.size(); ++i) {
      for (size_t j = i + 1; j < members.size(); ++j)
        edges.insert({std::min(members[i], members[j]),
                      std::max(members[i], members[j])});
      edges.insert({std::min(members[i], 1), std::max(members[i], 1)});
      edges.insert({std::min(members[i], 3), std::max(members[i], 3)});
    }
    return finish(3 + cls, edges, rng, true);
  }

  if (rule == "chain") {
    // Two C4s joined by an induced path, optionally with a private clique
    // hanging on one middle edge.
    add_c4(edges, 0, 1, 2, 3);
    int len = 2 + (int)rnd(rng, 2);  // 2 or 3 interior vertices
    int first = 4;
    int prev = 0;
    for (int i = 0; i < len; ++i) {
      edges.insert({std::min(prev, first + i), std::max(prev, first + i)});
      prev = first + i;
    }
    int c4b = first + len;
    add_c4(edges, c4b, c4b + 1, c4b + 2, c4b + 3);
    edges.insert({std::min(prev, c4b), std::max(prev, c4b)});
    int total = c4b + 4;
    if (len == 3 && rnd(rng, 2) == 0 && total + 1 <= 12) {
      int bead = total;  // private clique of one vertex on a middle edge
      edges.insert({first + 1, bead});
      edges.insert({std::min(first + 2, bead), std::max(first + 2, bead)});
      total += 1;
    }
    return finish(total, edges, rng, true);
  }

  if (rule == "forced") {
    // A hub on 2k+1 pairwise openly disjoint 4- or 5-cycles. Only k <= 1
    // keeps this inside the oracle range.
    int kk = std::min(k, 1);
    int petals = 2 * kk + 1;
    int next = 1;
    for (int i = 0; i < petals; ++i) {
      bool longer = petals == 3 && i == 0 && rnd(rng, 2) == 0;
      if (longer) {  // 5-cycle petal: the chain rule shrinks it first
        edges.insert({0, next});
        edges.insert({next, next + 1});
        edges.insert({next + 1, next + 2});
        edges.insert({next + 2, next + 3});
        edges.insert({0, next + 3});
        next += 4;
      } else {
        add_c4(edges, 0, next, next + 1, next + 2);
        next += 3;
      }
    }
    return finish(next, edges, rng, true);
  }

  if (rule == "fan") {
    // Two nonadjacent hubs sharing 12 or 13 independent spokes: every
    // earlier rule is quiet, and whichever hub gets scanned first keeps a
    // 3-vertex guard set against 10+ fan components.
    int spokes = 12 + (int)rnd(rng, 2);
    for (int i = 0; i < spokes; ++i) {
      edges.insert({0, 2 + i});
      edges.insert({1, 2 + i});
    }
    return finish(2 + spokes, edges, rng, true);
  }

  throw input_error("unknown rule family '" + rule + "'");
}

Instance gen_theta_wfvs(int poles, int m, int noise, uint64_t seed) {
  require(poles == 2 || poles == 3, "theta-wfvs: poles must be 2 or 3");
  require(m >= 0 && noise >= 0, "theta-wfvs: negative size");
  std::mt19937_64 rng(seed);
  Instance inst;
  inst.problem = Instance::Problem::wfvs;
  inst.k = 0;
  for (int v = 1; v <= poles; ++v) inst.g.add_vertex(v);
  int id = poles + 1;
  for (int j = 0; j < m; ++j) {
    int a = 1 + (int)rnd(rng, (uint64_t)poles);
    int b = 1 + (int)rnd(rng, (uint64_t)poles);
    while (b == a) b = 1 + (int)rnd(rng, (uint64_t)poles);
    inst.g.add_vertex(id);
    inst.g.add_edge(id, a);
    inst.g.add_edge(id, b);
    ++id;
  }
  for (int j = 0; j < noise; ++j) {
    int host = 1 + (int)rnd(rng, (uint64_t)(id - 1));
    inst.g.add_vertex(id);
    inst.g.add_edge(id, host);
    ++id;
  }
  for (int v = 1; v < id; ++v) inst.w[v] = rat(1 + (long)rnd(rng, 9));
  return inst;
}

}  // namespace bgvd
