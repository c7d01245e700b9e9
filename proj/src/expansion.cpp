#include "bgvd/expansion.hpp"

#include <algorithm>
#include <deque>

#include "bgvd/errors.hpp"
#include "bgvd/matching.hpp"

namespace bgvd {

Expansion find_expansion(const VSet& xs, const VSet& ys,
                         const std::map<int, VSet>& nbrs_of_y, int q) {
  require(q >= 1, "expansion order must be positive");
  require(!xs.empty(), "expansion needs a nonempty left side");
  require(ys.size() >= static_cast<std::size_t>(q) * xs.size(),
          "expansion needs |Y| >= q|X|");
  for (int y : ys) {
    auto it = nbrs_of_y.find(y);
    require(it != nbrs_of_y.end() && !it->second.empty(),
            "every right vertex needs a neighbor");
    for (int x : it->second)
      require(vs_contains(xs, x), "right neighborhoods must stay inside X");
  }

  VSet curx = xs, cury = ys;
  for (;;) {
    require(!curx.empty(), "the left side can never empty out");
    int nx = static_cast<int>(curx.size());
    int ny = static_cast<int>(cury.size());
    // Matching ids: q copies per left vertex first, then the right side.
    auto left_id = [&](int xi, int c) { return xi * q + c; };
    auto right_id = [&](int yi) { return nx * q + yi; };
    auto xpos = [&](int x) {
      return static_cast<int>(
          std::lower_bound(curx.begin(), curx.end(), x) - curx.begin());
    };

    std::vector<std::pair<int, int>> edges;
    std::vector<VSet> radj(ny);  // per right vertex: its left copies
    for (int yi = 0; yi < ny; ++yi) {
      for (int x : nbrs_of_y.at(cury[yi])) {
        if (!vs_contains(curx, x)) continue;
        for (int c = 0; c < q; ++c) {
          edges.emplace_back(left_id(xpos(x), c), right_id(yi));
          radj[yi].push_back(left_id(xpos(x), c));
        }
      }
    }
    Matching m = max_matching(nx * q + ny, edges);

    if (m.size == nx * q) {
      // Saturated: read the assignment off the matching.
      Expansion out;
      out.xs = curx;
      out.ys = cury;
      for (int xi = 0; xi < nx; ++xi) {
        VSet mine;
        for (int c = 0; c < q; ++c) {
          int y = m.mate[left_id(xi, c)];
          require(y >= nx * q, "saturated copies must match right vertices");
          vs_insert(mine, cury[y - nx * q]);
        }
        require(static_cast<int>(mine.size()) == q,
                "private neighbors must be distinct");
        out.owned[curx[xi]] = mine;
      }
      return out;
    }

    // Alternating reachability from the unsaturated copies.
    std::vector<char> seen_left(nx * q, 0), seen_right(ny, 0);
    std::deque<int> bfs;
    for (int l = 0; l < nx * q; ++l)
      if (m.mate[l] == -1) {
        seen_left[l] = 1;
        bfs.push_back(l);
      }
    require(!bfs.empty(), "an unsaturated copy must exist here");
    std::vector<VSet> ladj(nx * q);  // left copy -> right indices
    for (int yi = 0; yi < ny; ++yi)
      for (int l : radj[yi]) ladj[l].push_back(yi);
    while (!bfs.empty()) {
      int l = bfs.front();
      bfs.pop_front();
      for (int yi : ladj[l]) {
        if (seen_right[yi]) continue;
        seen_right[yi] = 1;
        int back = m.mate[right_id(yi)];
        require(back != -1, "a free right vertex would extend the matching");
        if (!seen_left[back]) {
          seen_left[back] = 1;
          bfs.push_back(back);
        }
      }
    }

    VSet dropx, dropy;
    for (int xi = 0; xi < nx; ++xi)
      for (int c = 0; c < q; ++c)
        if (seen_left[left_id(xi, c)]) {
          vs_insert(dropx, curx[xi]);
          break;
        }
    for (int yi = 0; yi < ny; ++yi)
      if (seen_right[yi]) dropy.push_back(cury[yi]);
    require(!dropx.empty(), "the unsaturated vertex itself is dropped");
    require(dropy.size() <= static_cast<std::size_t>(q) * dropx.size(),
            "the discarded region keeps |Y| >= q|X|");

    VSet nextx = vs_diff(curx, dropx), nexty = vs_diff(cury, dropy);
    require(!nextx.empty(), "the left side can never empty out");
    for (int y : nexty) {
      bool ok = false;
      for (int x : nbrs_of_y.at(y)) ok = ok || vs_contains(nextx, x);
      require(ok, "discarding a region never isolates a right vertex");
    }
    curx = std::move(nextx);
    cury = std::move(nexty);
  }
}

}  // namespace bgvd
