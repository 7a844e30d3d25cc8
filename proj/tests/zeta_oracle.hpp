#pragma once
// Closed-walk counting by explicit path enumeration. Deliberately naive: it
// never forms a matrix power, so it is independent of the trace computation.

#include <vector>

#include "spgeo/localgroup.hpp"

namespace spgeo::testgen {

// Weighted number of closed walks of length n, i.e. tr(L^n), for a matrix
// with small nonnegative integer entries.
inline long long closed_walks(const QMatrix& L, int n) {
  const int d = L.rows();
  std::vector<std::vector<long long>> w(static_cast<size_t>(d), std::vector<long long>(static_cast<size_t>(d)));
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) w[i][j] = L(i, j).to_long();
  long long total = 0;
  std::vector<int> path(static_cast<size_t>(n) + 1);
  // Depth-first over all vertex sequences path[0..n-1], closing back to path[0].
  auto rec = [&](auto&& self, int depth, long long weight) -> void {
    if (depth == n) {
      total += weight * w[path[n - 1]][path[0]];
      return;
    }
    for (int k = 0; k < d; ++k) {
      long long e = w[path[depth - 1]][k];
      if (e == 0) continue;
      path[depth] = k;
      self(self, depth + 1, weight * e);
    }
  };
  for (int s = 0; s < d; ++s) {
    path[0] = s;
    rec(rec, 1, 1);
  }
  return total;
}

}  // namespace spgeo::testgen
