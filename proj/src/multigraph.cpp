#include "bgvd/multigraph.hpp"

#include <cctype>
#include <functional>

namespace bgvd {

Rat parse_rat(const std::string& s) {
  auto bad = [&] { throw input_error("bad rational '" + s + "'"); };
  if (s.empty()) bad();
  std::string num = s, den = "1";
  if (auto pos = s.find('/'); pos != std::string::npos) {
    num = s.substr(0, pos);
    den = s.substr(pos + 1);
    if (num.empty() || den.empty() || den.find('/') != std::string::npos) bad();
  }
  auto digits = [](const std::string& t, bool sign) {
    if (t.empty()) return false;
    size_t i = (sign && (t[0] == '-' || t[0] == '+')) ? 1 : 0;
    if (i >= t.size()) return false;
    for (; i < t.size(); i++)
      if (!isdigit((unsigned char)t[i])) return false;
    return true;
  };
  if (!digits(num, true) || !digits(den, false)) bad();
  Rat q;
  if (q.set_str(num + "/" + den, 10) != 0) bad();
  if (q.get_den() == 0) throw input_error("rational with zero denominator '" + s + "'");
  q.canonicalize();
  return q;
}

std::string format_rat(const Rat& q) {
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

void MultiGraph::add_vertex(int v) {
  if (!vs_contains(verts_, v)) {
    vs_insert(verts_, v);
    adj_[v];
  }
  reserve_id(v);
}

void MultiGraph::reserve_id(int v) {
  if (v >= next_id_) next_id_ = v + 1;
}

void MultiGraph::add_edge(int u, int v, int mult) {
  require(mult >= 1, "add_edge: multiplicity must be positive");
  add_vertex(u);
  add_vertex(v);
  auto key = std::minmax(u, v);
  mult_[{key.first, key.second}] += mult;
  if (u != v) {
    vs_insert(adj_[u], v);
    vs_insert(adj_[v], u);
  }
}

long long MultiGraph::m() const {
  long long t = 0;
  for (auto& [e, c] : mult_) t += c;
  return t;
}

int MultiGraph::multiplicity(int u, int v) const {
  auto key = std::minmax(u, v);
  auto it = mult_.find({key.first, key.second});
  return it == mult_.end() ? 0 : it->second;
}

int MultiGraph::degree(int v) const {
  int d = 2 * multiplicity(v, v);
  for (int u : neighbors(v)) d += multiplicity(u, v);
  return d;
}

const VSet& MultiGraph::neighbors(int v) const {
  auto it = adj_.find(v);
  require(it != adj_.end(), "neighbors: no such vertex");
  return it->second;
}

bool MultiGraph::is_simple() const {
  for (auto& [e, c] : mult_)
    if (c > 1 || e.first == e.second) return false;
  return true;
}

MultiGraph MultiGraph::without_vertices(const VSet& s) const {
  MultiGraph r;
  r.next_id_ = next_id_;
  for (int v : verts_)
    if (!vs_contains(s, v)) r.add_vertex(v);
  for (auto& [e, c] : mult_)
    if (!vs_contains(s, e.first) && !vs_contains(s, e.second)) r.add_edge(e.first, e.second, c);
  return r;
}

MultiGraph MultiGraph::without_vertex(int v) const { return without_vertices({v}); }

MultiGraph MultiGraph::induced(const VSet& w) const {
  MultiGraph r;
  r.next_id_ = next_id_;
  for (int v : w) {
    require(has_vertex(v), "induced: vertex not in graph");
    r.add_vertex(v);
  }
  for (auto& [e, c] : mult_)
    if (vs_contains(w, e.first) && vs_contains(w, e.second)) r.add_edge(e.first, e.second, c);
  return r;
}

MultiGraph MultiGraph::with_edge(int u, int v, int mult) const {
  MultiGraph r = *this;
  r.add_edge(u, v, mult);
  return r;
}

MultiGraph MultiGraph::without_edge(int u, int v) const {
  MultiGraph r = *this;
  auto key = std::minmax(u, v);
  if (r.mult_.erase({key.first, key.second}) && u != v) {
    vs_erase(r.adj_[u], v);
    vs_erase(r.adj_[v], u);
  }
  return r;
}

MultiGraph MultiGraph::with_multiplicity(int u, int v, int mult) const {
  require(mult >= 0, "with_multiplicity: negative multiplicity");
  MultiGraph r = without_edge(u, v);
  if (mult > 0) r.add_edge(u, v, mult);
  return r;
}

Contraction contract_edge(const MultiGraph& g, int u, int v) {
  require(u != v, "contract_edge: loop contraction");
  require(g.has_edge(u, v), "contract_edge: no such edge");
  require(!g.has_loop(u) && !g.has_loop(v), "contract_edge: loop at an endpoint");
  int z = g.fresh_id();
  MultiGraph r;
  r.reserve_id(z);
  r.add_vertex(z);
  auto map = [&](int x) { return (x == u || x == v) ? z : x; };
  for (int x : g.vertices())
    if (x != u && x != v) r.add_vertex(x);
  bool consumed = false;
  for (auto& [e, c] : g.edges()) {
    int a = map(e.first), b = map(e.second);
    int keep = c;
    if (a == z && b == z && !consumed) {
      keep--;  // the contracted copy disappears; extra parallels become loops
      consumed = true;
    }
    if (keep > 0) r.add_edge(a, b, keep);
  }
  return {std::move(r), z};
}

bool is_forest(const MultiGraph& g) {
  std::map<int, int> parent;
  for (int v : g.vertices()) parent[v] = v;
  std::function<int(int)> find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (auto& [e, c] : g.edges()) {
    if (e.first == e.second || c > 1) return false;
    int a = find(e.first), b = find(e.second);
    if (a == b) return false;
    parent[a] = b;
  }
  return true;
}

std::vector<VSet> components(const MultiGraph& g) {
  std::vector<VSet> out;
  VSet seen;
  for (int s : g.vertices()) {
    if (vs_contains(seen, s)) continue;
    VSet comp, stack{s};
    vs_insert(seen, s);
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      vs_insert(comp, v);
      for (int u : g.neighbors(v))
        if (!vs_contains(seen, u)) {
          vs_insert(seen, u);
          stack.push_back(u);
        }
    }
    out.push_back(comp);
  }
  return out;
}

std::vector<VSet> true_twin_classes(const MultiGraph& g) {
  for (auto& [e, c] : g.edges())
    require(c == 1 && e.first != e.second, "true_twin_classes: graph must be simple");
  // Group by N(u)\{v} = N(v)\{u}. Adjacent twins share closed neighborhoods,
  // non-adjacent ones share open neighborhoods; group by both keys and merge.
  std::vector<VSet> out;
  VSet used;
  for (int v : g.vertices()) {
    if (vs_contains(used, v)) continue;
    VSet cls{v};
    for (int u : g.vertices()) {
      if (u == v || vs_contains(used, u)) continue;
      VSet nu = g.neighbors(u), nv = g.neighbors(v);
      vs_erase(nu, v);
      vs_erase(nv, u);
      if (nu == nv) vs_insert(cls, u);
    }
    for (int u : cls) vs_insert(used, u);
    out.push_back(cls);
  }
  return out;
}

void WeightedGraph::set_weight(int v, const Rat& q) {
  require(g.has_vertex(v), "set_weight: no such vertex");
  w[v] = q;
}

const Rat& WeightedGraph::weight(int v) const {
  auto it = w.find(v);
  require(it != w.end(), "weight: no weight for vertex");
  return it->second;
}

Rat WeightedGraph::weight_of(const VSet& s) const {
  Rat t = 0;
  for (int v : s) t += weight(v);
  return t;
}

void WeightedGraph::check() const {
  require((int)w.size() == g.n(), "WeightedGraph: weight map size mismatch");
  for (int v : g.vertices()) {
    auto it = w.find(v);
    require(it != w.end(), "WeightedGraph: missing weight");
    require(it->second >= 0, "WeightedGraph: negative weight");
  }
}

WeightedGraph WeightedGraph::without_vertices(const VSet& s) const {
  WeightedGraph r{g.without_vertices(s), {}};
  for (auto& [v, q] : w)
    if (!vs_contains(s, v)) r.w[v] = q;
  return r;
}

WeightedGraph WeightedGraph::without_vertex(int v) const { return without_vertices({v}); }

WeightedGraph WeightedGraph::induced(const VSet& s) const {
  WeightedGraph r{g.induced(s), {}};
  for (int v : s) r.w[v] = weight(v);
  return r;
}

}  // namespace bgvd
