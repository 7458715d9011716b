#include "tangentfit/linalg.hpp"

#include <limits>

namespace tangentfit {

RrefResult rref(RationalMatrix A) {
  const Eigen::Index rows = A.rows(), cols = A.cols();
  RrefResult out;
  Eigen::Index r = 0;
  for (Eigen::Index c = 0; c < cols && r < rows; ++c) {
    Eigen::Index p = -1;
    for (Eigen::Index i = r; i < rows; ++i) {
      if (A(i, c) != 0) {
        p = i;
        break;
      }
    }
    if (p < 0) continue;
    if (p != r) A.row(p).swap(A.row(r));
    Rational inv = Rational(1) / A(r, c);
    for (Eigen::Index j = c; j < cols; ++j) A(r, j) *= inv;
    for (Eigen::Index i = 0; i < rows; ++i) {
      if (i == r || A(i, c) == 0) continue;
      Rational f = A(i, c);
      for (Eigen::Index j = c; j < cols; ++j) A(i, j) -= f * A(r, j);
    }
    out.pivot_cols.push_back(static_cast<int>(c));
    ++r;
  }
  out.rank = static_cast<int>(r);
  out.R = std::move(A);
  return out;
}

int rank_of(const RationalMatrix& A) { return rref(A).rank; }

std::vector<RationalVector> nullspace_basis(const RationalMatrix& A) {
  RrefResult rr = rref(A);
  const Eigen::Index cols = A.cols();
  std::vector<bool> is_pivot(cols, false);
  for (int c : rr.pivot_cols) is_pivot[c] = true;
  std::vector<RationalVector> out;
  for (Eigen::Index c = 0; c < cols; ++c) {
    if (is_pivot[c]) continue;
    RationalVector v = RationalVector::Zero(cols);
    v(c) = 1;
    for (int i = 0; i < rr.rank; ++i) {
      int pc = rr.pivot_cols[i];
      v(pc) = -rr.R(i, c);
    }
    out.push_back(std::move(v));
  }
  return out;
}

std::optional<RationalVector> solve_exact(const RationalMatrix& A,
                                          const RationalVector& b) {
  require(A.rows() == b.size(), "solve_exact: dimension mismatch");
  RationalMatrix aug(A.rows(), A.cols() + 1);
  aug.leftCols(A.cols()) = A;
  aug.col(A.cols()) = b;
  RrefResult rr = rref(std::move(aug));
  for (int c : rr.pivot_cols)
    if (c == static_cast<int>(A.cols())) return std::nullopt;
  RationalVector x = RationalVector::Zero(A.cols());
  for (int i = 0; i < rr.rank; ++i) x(rr.pivot_cols[i]) = rr.R(i, A.cols());
  return x;
}

Eigen::VectorXd least_squares_min_norm(const Eigen::MatrixXd& A,
                                       const Eigen::VectorXd& b) {
  require(A.rows() == b.size(), "least_squares: dimension mismatch");
  if (A.cols() == 0) return Eigen::VectorXd(0);
  if (A.rows() == 0) return Eigen::VectorXd::Zero(A.cols());
  Eigen::CompleteOrthogonalDecomposition<Eigen::MatrixXd> cod;
  cod.setThreshold(static_cast<double>(std::max(A.rows(), A.cols())) *
                   std::numeric_limits<double>::epsilon());
  cod.compute(A);
  return cod.solve(b);
}

}  // namespace tangentfit
