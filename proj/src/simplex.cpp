#include "tangentfit/simplex.hpp"

#include <vector>

namespace tangentfit {

namespace {

// Full-tableau simplex state: T is rows x (ncols+1) with the rhs in the last
// column, basis[i] names the basic column of row i.
struct Tableau {
  RationalMatrix T;
  std::vector<int> basis;
  int ncols;

  void pivot(int r, int j) {
    Rational p = T(r, j);
    T.row(r) /= p;
    for (Eigen::Index i = 0; i < T.rows(); ++i) {
      if (i == r || T(i, j) == 0) continue;
      T.row(i) -= T(i, j) * T.row(r);
    }
    basis[r] = j;
  }

  // Bland's rule; entering columns restricted to [0, enter_limit).
  LpStatus run(const RationalVector& obj, int enter_limit, Rational& value) {
    RationalVector red = obj;
    value = 0;
    for (Eigen::Index i = 0; i < T.rows(); ++i) {
      const Rational& cb = obj(basis[i]);
      if (cb == 0) continue;
      red -= cb * T.row(i).head(ncols).transpose();
      value += cb * T(i, ncols);
    }
    while (true) {
      int enter = -1;
      for (int j = 0; j < enter_limit; ++j) {
        if (red(j) > 0) {
          enter = j;
          break;
        }
      }
      if (enter < 0) return LpStatus::Optimal;
      int leave = -1;
      Rational best;
      for (Eigen::Index i = 0; i < T.rows(); ++i) {
        if (T(i, enter) <= 0) continue;
        Rational ratio = T(i, ncols) / T(i, enter);
        if (leave < 0 || ratio < best ||
            (ratio == best && basis[i] < basis[leave])) {
          leave = static_cast<int>(i);
          best = ratio;
        }
      }
      if (leave < 0) return LpStatus::Unbounded;
      Rational rj = red(enter);
      pivot(leave, enter);
      red -= rj * T.row(leave).head(ncols).transpose();
      value += rj * T(leave, ncols);
    }
  }
};

}  // namespace

LpResult lp_maximize(const RationalMatrix& A, const RationalVector& b,
                     const RationalVector& c) {
  const int m = static_cast<int>(A.rows());
  const int n = static_cast<int>(A.cols());
  require(b.size() == m && c.size() == n, "lp_maximize: dimension mismatch");

  std::vector<int> art_of_row(m, -1);
  int na = 0;
  for (int i = 0; i < m; ++i)
    if (b(i) < 0) art_of_row[i] = na++;

  const int nreal = 2 * n + m;
  const int ncols = nreal + na;
  Tableau tab;
  tab.ncols = ncols;
  tab.T = RationalMatrix::Zero(m, ncols + 1);
  tab.basis.assign(m, 0);
  for (int i = 0; i < m; ++i) {
    int sign = b(i) < 0 ? -1 : 1;
    for (int q = 0; q < n; ++q) {
      tab.T(i, q) = sign * A(i, q);
      tab.T(i, n + q) = -sign * A(i, q);
    }
    tab.T(i, 2 * n + i) = sign;
    tab.T(i, ncols) = sign * b(i);
    if (art_of_row[i] >= 0) {
      tab.T(i, nreal + art_of_row[i]) = 1;
      tab.basis[i] = nreal + art_of_row[i];
    } else {
      tab.basis[i] = 2 * n + i;
    }
  }

  if (na > 0) {
    RationalVector obj1 = RationalVector::Zero(ncols);
    for (int j = nreal; j < ncols; ++j) obj1(j) = -1;
    Rational v1;
    LpStatus st = tab.run(obj1, nreal, v1);
    require(st == LpStatus::Optimal, "lp phase 1: unbounded artificial objective");
    if (v1 < 0) return LpResult{LpStatus::Infeasible, Rational(0), {}};
    // Drive leftover zero-valued artificials out of the basis where possible;
    // rows with no real-column support are redundant and stay inert.
    for (int i = 0; i < m; ++i) {
      if (tab.basis[i] < nreal) continue;
      for (int j = 0; j < nreal; ++j) {
        if (tab.T(i, j) != 0) {
          tab.pivot(i, j);
          break;
        }
      }
    }
  }

  RationalVector obj2 = RationalVector::Zero(ncols);
  for (int q = 0; q < n; ++q) {
    obj2(q) = c(q);
    obj2(n + q) = -c(q);
  }
  Rational v2;
  LpStatus st = tab.run(obj2, nreal, v2);
  if (st == LpStatus::Unbounded) return LpResult{LpStatus::Unbounded, Rational(0), {}};

  RationalVector x = RationalVector::Zero(n);
  for (int i = 0; i < m; ++i) {
    int bcol = tab.basis[i];
    if (bcol < n)
      x(bcol) += tab.T(i, ncols);
    else if (bcol < 2 * n)
      x(bcol - n) -= tab.T(i, ncols);
  }
  return LpResult{LpStatus::Optimal, v2, std::move(x)};
}

}  // namespace tangentfit
