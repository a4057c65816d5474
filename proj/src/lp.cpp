#include "latmink/lp.hpp"

#include <optional>
#include <stdexcept>

namespace latmink {

namespace {

// Tableau rows hold [coefficients | rhs]; basis[i] is the basic column of row i.
struct Tableau {
  RationalMatrix t;
  std::vector<std::size_t> basis;
  std::size_t width = 0;  // number of structural + artificial columns

  void pivot(std::size_t row, std::size_t col) {
    const std::size_t cols = t.cols();
    Rational inv = t(row, col).inverse();
    for (std::size_t j = 0; j < cols; ++j)
      if (!t(row, j).is_zero()) t(row, j) *= inv;
    for (std::size_t i = 0; i < t.rows(); ++i) {
      if (i == row || t(i, col).is_zero()) continue;
      Rational f = t(i, col);
      for (std::size_t j = 0; j < cols; ++j)
        if (!t(row, j).is_zero()) t(i, j) -= f * t(row, j);
    }
    basis[row] = col;
  }

  // Reduced cost of column j for objective `cost` restricted to `allowed` columns.
  Rational reduced_cost(const RationalVector& cost, std::size_t j) const {
    Rational r = cost[j];
    for (std::size_t i = 0; i < basis.size(); ++i)
      if (!t(i, j).is_zero() && !cost[basis[i]].is_zero()) r -= cost[basis[i]] * t(i, j);
    return r;
  }

  // Runs simplex iterations; returns false when unbounded.
  bool optimize(const RationalVector& cost, std::size_t allowed_cols) {
    const std::size_t rhs = t.cols() - 1;
    while (true) {
      std::optional<std::size_t> entering;
      for (std::size_t j = 0; j < allowed_cols; ++j) {
        if (reduced_cost(cost, j).sign() < 0) {
          entering = j;  // Bland: lowest index
          break;
        }
      }
      if (!entering) return true;
      std::optional<std::size_t> leaving;
      Rational best;
      for (std::size_t i = 0; i < t.rows(); ++i) {
        if (t(i, *entering).sign() <= 0) continue;
        Rational ratio = t(i, rhs) / t(i, *entering);
        if (!leaving || ratio < best || (ratio == best && basis[i] < basis[*leaving])) {
          leaving = i;
          best = ratio;
        }
      }
      if (!leaving) return false;
      pivot(*leaving, *entering);
    }
  }
};

}  // namespace

LpResult solve_lp(const LinearProgram& lp) {
  const std::size_t m = lp.a.rows();
  const std::size_t n = lp.a.cols();
  if (lp.b.size() != m || lp.c.size() != n) throw std::invalid_argument("solve_lp: shape mismatch");

  Tableau tab;
  tab.width = n + m;
  tab.t = RationalMatrix(m, n + m + 1);
  tab.basis.resize(m);
  for (std::size_t i = 0; i < m; ++i) {
    const bool flip = lp.b[i].sign() < 0;
    for (std::size_t j = 0; j < n; ++j) tab.t(i, j) = flip ? -lp.a(i, j) : lp.a(i, j);
    tab.t(i, n + i) = 1;
    tab.t(i, n + m) = flip ? -lp.b[i] : lp.b[i];
    tab.basis[i] = n + i;
  }

  // Phase 1: drive the artificial variables to zero.
  RationalVector phase1(n + m);
  for (std::size_t i = 0; i < m; ++i) phase1[n + i] = 1;
  tab.optimize(phase1, n + m);
  Rational infeasibility;
  for (std::size_t i = 0; i < m; ++i)
    if (tab.basis[i] >= n) infeasibility += tab.t(i, n + m);
  if (infeasibility.sign() > 0) return LpResult{LpStatus::kInfeasible, {}, {}};

  // Pivot remaining (zero-valued) artificials out of the basis; rows that
  // cannot be cleared are redundant and harmless since their rhs is zero.
  for (std::size_t i = 0; i < m; ++i) {
    if (tab.basis[i] < n) continue;
    for (std::size_t j = 0; j < n; ++j)
      if (!tab.t(i, j).is_zero()) {
        tab.pivot(i, j);
        break;
      }
  }

  RationalVector phase2(n + m);
  for (std::size_t j = 0; j < n; ++j) phase2[j] = lp.c[j];
  if (!tab.optimize(phase2, n)) return LpResult{LpStatus::kUnbounded, {}, {}};

  LpResult result;
  result.status = LpStatus::kOptimal;
  result.x.assign(n, Rational(0));
  for (std::size_t i = 0; i < m; ++i)
    if (tab.basis[i] < n) result.x[tab.basis[i]] = tab.t(i, n + m);
  for (std::size_t j = 0; j < n; ++j)
    if (!lp.c[j].is_zero()) result.objective += lp.c[j] * result.x[j];
  return result;
}

}  // namespace latmink
