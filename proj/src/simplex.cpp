#include "wal/simplex.hpp"

namespace wal {

std::optional<std::vector<mpq_class>> feasible_point(const RatMatrix& A,
                                                     const std::vector<mpq_class>& b) {
  const std::size_t m = b.size();
  const std::size_t n = m ? A[0].size() : 0;
  if (m == 0) return std::vector<mpq_class>(n, 0);

  // Columns: n originals, m artificials, then the right-hand side.
  const std::size_t rhs = n + m;
  RatMatrix T(m, std::vector<mpq_class>(rhs + 1, 0));
  std::vector<std::size_t> basis(m);
  for (std::size_t i = 0; i < m; ++i) {
    const int sign = b[i] < 0 ? -1 : 1;
    for (std::size_t j = 0; j < n; ++j) T[i][j] = sign * A[i][j];
    T[i][n + i] = 1;
    T[i][rhs] = sign * b[i];
    basis[i] = n + i;
  }
  // Reduced costs of the phase-one objective (sum of artificials).
  std::vector<mpq_class> cost(rhs + 1, 0);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j <= rhs; ++j)
      if (j < n || j == rhs) cost[j] -= T[i][j];

  // Dantzig pricing until the first degenerate pivot, Bland's rule from then on.
  bool bland = false;
  while (true) {
    std::size_t enter = rhs;
    for (std::size_t j = 0; j < rhs; ++j)
      if (cost[j] < 0 && (enter == rhs || (!bland && cost[j] < cost[enter]))) {
        enter = j;
        if (bland) break;
      }
    if (enter == rhs) break;
    std::size_t leave = m;
    mpq_class best;
    for (std::size_t i = 0; i < m; ++i) {
      if (T[i][enter] <= 0) continue;
      mpq_class ratio = T[i][rhs] / T[i][enter];
      if (leave == m || ratio < best || (ratio == best && basis[i] < basis[leave])) {
        leave = i;
        best = ratio;
      }
    }
    if (leave == m) break;  // unbounded direction; cannot happen for phase one
    if (best == 0) bland = true;

    mpq_class piv = T[leave][enter];
    for (auto& x : T[leave]) x /= piv;
    for (std::size_t i = 0; i < m; ++i) {
      if (i == leave || T[i][enter] == 0) continue;
      mpq_class f = T[i][enter];
      for (std::size_t j = 0; j <= rhs; ++j)
        if (T[leave][j] != 0) T[i][j] -= f * T[leave][j];
    }
    if (cost[enter] != 0) {
      mpq_class f = cost[enter];
      for (std::size_t j = 0; j <= rhs; ++j)
        if (T[leave][j] != 0) cost[j] -= f * T[leave][j];
    }
    basis[leave] = enter;
  }
  if (cost[rhs] != 0) return std::nullopt;  // -(sum of artificials) at optimum

  std::vector<mpq_class> x(n, 0);
  for (std::size_t i = 0; i < m; ++i)
    if (basis[i] < n) x[basis[i]] = T[i][rhs];
  return x;
}

}  // namespace wal
