#include "planeforge/lp.hpp"

#include <cstddef>
#include <stdexcept>

namespace planeforge::lp {

FeasibilityResult solve_equality_feasibility(
    const std::vector<std::vector<Rational>>& A, const std::vector<Rational>& b) {
  const std::size_t m = A.size();
  const std::size_t n = m ? A[0].size() : 0;
  if (b.size() != m) throw std::invalid_argument("A and b sizes disagree");

  // Tableau: n structural columns, m artificial columns, one rhs column.
  // Rows are sign-flipped so the rhs is nonnegative and the artificials form
  // a feasible starting basis.
  const std::size_t cols = n + m + 1;
  std::vector<std::vector<Rational>> T(m, std::vector<Rational>(cols, 0));
  for (std::size_t i = 0; i < m; ++i) {
    const bool flip = b[i] < 0;
    for (std::size_t j = 0; j < n; ++j) T[i][j] = flip ? -A[i][j] : A[i][j];
    T[i][n + i] = 1;
    T[i][cols - 1] = flip ? -b[i] : b[i];
  }
  std::vector<std::size_t> basis(m);
  for (std::size_t i = 0; i < m; ++i) basis[i] = n + i;

  // Reduced cost row for min sum(artificials): z[j] = -sum_i T[i][j] over
  // structural columns; artificial columns start at reduced cost 0.
  std::vector<Rational> z(cols, 0);
  for (std::size_t j = 0; j < cols; ++j) {
    Rational s = 0;
    for (std::size_t i = 0; i < m; ++i) s += T[i][j];
    z[j] = -s;
  }
  for (std::size_t i = 0; i < m; ++i) z[n + i] = 0;

  while (true) {
    // Bland: entering column = smallest index with negative reduced cost.
    std::size_t enter = cols - 1;
    for (std::size_t j = 0; j + 1 < cols; ++j)
      if (z[j] < 0) {
        enter = j;
        break;
      }
    if (enter == cols - 1) break;  // optimal

    // Ratio test; ties broken by smallest basis variable index (Bland).
    std::size_t leave = m;
    Rational best_ratio = 0;
    for (std::size_t i = 0; i < m; ++i) {
      if (T[i][enter] <= 0) continue;
      const Rational ratio = T[i][cols - 1] / T[i][enter];
      if (leave == m || ratio < best_ratio ||
          (ratio == best_ratio && basis[i] < basis[leave])) {
        leave = i;
        best_ratio = ratio;
      }
    }
    if (leave == m)
      throw std::logic_error("phase-1 objective unbounded");  // cannot happen

    // Pivot.
    const Rational piv = T[leave][enter];
    for (auto& v : T[leave]) v /= piv;
    for (std::size_t i = 0; i < m; ++i) {
      if (i == leave || T[i][enter] == 0) continue;
      const Rational f = T[i][enter];
      for (std::size_t j = 0; j < cols; ++j) T[i][j] -= f * T[leave][j];
    }
    if (z[enter] != 0) {
      const Rational f = z[enter];
      for (std::size_t j = 0; j < cols; ++j) z[j] -= f * T[leave][j];
    }
    basis[leave] = enter;
  }

  Rational objective = 0;
  for (std::size_t i = 0; i < m; ++i)
    if (basis[i] >= n) objective += T[i][cols - 1];

  FeasibilityResult res;
  res.feasible = (objective == 0);
  if (res.feasible) {
    res.x.assign(n, 0);
    for (std::size_t i = 0; i < m; ++i)
      if (basis[i] < n) res.x[basis[i]] = T[i][cols - 1];
  }
  return res;
}

}  // namespace planeforge::lp
