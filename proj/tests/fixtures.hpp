#pragma once
// quivers that show up in several suites; vertices (j,l) and arrows (j,l,i,k) are 1-based

#include "twistlab/standard.hpp"

#include <array>
#include <utility>
#include <vector>

namespace fixture {

inline twistlab::StandardQuiver quiver(size_t m, size_t n, std::vector<std::pair<int, int>> verts,
                                       std::vector<std::array<int, 4>> arrows) {
  twistlab::StandardQuiver q;
  q.m = m;
  q.n = n;
  q.vertex.assign(n, std::vector<bool>(m, false));
  for (auto [j, l] : verts) q.vertex[size_t(j - 1)][size_t(l - 1)] = true;
  for (auto a : arrows)
    q.arrows.push_back({size_t(a[0] - 1), size_t(a[1] - 1), size_t(a[2] - 1), size_t(a[3] - 1)});
  return q;
}

// every vertex but one, and one arrow into the missing corner
inline twistlab::StandardQuiver corner_arrow() {
  return quiver(3, 3, {{1, 1}, {1, 2}, {1, 3}, {2, 1}, {2, 2}, {2, 3}, {3, 1}, {3, 2}}, {{3, 3, 2, 2}});
}

inline twistlab::StandardQuiver three_arrows() {
  return quiver(3, 3, {{1, 1}, {2, 1}, {3, 1}, {1, 2}, {2, 2}, {1, 3}}, {{2, 3, 2, 1}, {3, 2, 1, 2}, {3, 3, 1, 1}});
}

// the diagonal quiver with all six cross arrows
inline twistlab::StandardQuiver diagonal_cross() {
  return quiver(3, 3, {{1, 1}, {2, 2}, {3, 3}},
                {{1, 2, 1, 2}, {1, 3, 1, 3}, {2, 1, 2, 1}, {2, 3, 2, 3}, {3, 1, 3, 1}, {3, 2, 3, 2}});
}

}  // namespace fixture
