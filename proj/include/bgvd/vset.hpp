#pragma once
#include <algorithm>
#include <vector>

namespace bgvd {

// Vertex sets are sorted vectors of distinct ids.
using VSet = std::vector<int>;

inline bool vs_contains(const VSet& s, int v) {
  return std::binary_search(s.begin(), s.end(), v);
}

inline void vs_insert(VSet& s, int v) {
  auto it = std::lower_bound(s.begin(), s.end(), v);
  if (it == s.end() || *it != v) s.insert(it, v);
}

inline void vs_erase(VSet& s, int v) {
  auto it = std::lower_bound(s.begin(), s.end(), v);
  if (it != s.end() && *it == v) s.erase(it);
}

inline VSet vs_union(const VSet& a, const VSet& b) {
  VSet r;
  r.reserve(a.size() + b.size());
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(r));
  return r;
}

inline VSet vs_diff(const VSet& a, const VSet& b) {
  VSet r;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(r));
  return r;
}

inline VSet vs_intersect(const VSet& a, const VSet& b) {
  VSet r;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(r));
  return r;
}

inline VSet vs_of(std::vector<int> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

}  // namespace bgvd
