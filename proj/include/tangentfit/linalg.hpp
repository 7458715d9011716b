#pragma once

#include <Eigen/Dense>
#include <optional>
#include <vector>

#include "tangentfit/rational.hpp"

namespace tangentfit {

using RationalMatrix = Eigen::Matrix<Rational, Eigen::Dynamic, Eigen::Dynamic>;
using RationalVector = Eigen::Matrix<Rational, Eigen::Dynamic, 1>;

struct RrefResult {
  RationalMatrix R;
  std::vector<int> pivot_cols;
  int rank = 0;
};

// Reduced row echelon form over Q (exact, deterministic: pivots are the first
// nonzero entry down each column, scanned left to right).
RrefResult rref(RationalMatrix A);

int rank_of(const RationalMatrix& A);

// Basis of the right nullspace {x : A x = 0}, one vector per free column in
// column order.
std::vector<RationalVector> nullspace_basis(const RationalMatrix& A);

// Exact solution of A x = b with free variables set to zero; nullopt when the
// system is inconsistent.
std::optional<RationalVector> solve_exact(const RationalMatrix& A,
                                          const RationalVector& b);

// Minimum-norm least-squares solution via a rank-revealing complete orthogonal
// decomposition; rank tolerance max(rows,cols) * machine epsilon relative to
// the largest pivot (the largest column norm).
Eigen::VectorXd least_squares_min_norm(const Eigen::MatrixXd& A,
                                       const Eigen::VectorXd& b);

}  // namespace tangentfit
