#pragma once
#include <utility>
#include <vector>

namespace bgvd {

// Maximum matching in a general graph (blossom contraction), vertices 0..n-1.
// Deterministic: adjacency is sorted and roots are scanned in ascending order.
struct Matching {
  std::vector<int> mate;  // mate[v] or -1
  int size = 0;
};

Matching max_matching(int n, const std::vector<std::pair<int, int>>& edges);

}  // namespace bgvd
