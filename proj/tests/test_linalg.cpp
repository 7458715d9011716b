#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "support.hpp"

#include "tangentfit/simplex.hpp"

using namespace tangentfit;

namespace {

RationalMatrix rmat(int rows, int cols, std::vector<std::string> entries) {
  RationalMatrix A(rows, cols);
  int k = 0;
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) A(i, j) = Q(entries[k++]);
  return A;
}

RationalMatrix random_matrix(std::mt19937_64& rng, int rows, int cols) {
  RationalMatrix A(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) A(i, j) = random_rational(rng, 5, 3);
  return A;
}

bool is_rref_canonical(const RrefResult& R) {
  int prev = -1;
  for (int r = 0; r < R.rank; ++r) {
    int p = R.pivot_cols[r];
    if (p <= prev) return false;
    prev = p;
    if (R.R(r, p) != 1) return false;
    for (int i = 0; i < R.R.rows(); ++i)
      if (i != r && R.R(i, p) != 0) return false;
    for (int j = 0; j < p; ++j)
      if (R.R(r, j) != 0) return false;
  }
  for (int r = R.rank; r < R.R.rows(); ++r)
    for (int j = 0; j < R.R.cols(); ++j)
      if (R.R(r, j) != 0) return false;
  return true;
}

// Brute-force 2D LP oracle: enumerate all constraint-pair intersections plus
// feasibility/boundedness checks. Constraints a.x <= b, maximize c.x.
struct Lp2Oracle {
  LpStatus status;
  Rational value;
};

Lp2Oracle solve_2d_by_vertices(const RationalMatrix& A, const RationalVector& b,
                               const RationalVector& c) {
  const int m = static_cast<int>(A.rows());
  auto feasible = [&](const Rational& x, const Rational& y) {
    for (int i = 0; i < m; ++i)
      if (A(i, 0) * x + A(i, 1) * y > b(i)) return false;
    return true;
  };
  std::vector<std::pair<Rational, Rational>> verts;
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j) {
      Rational det = A(i, 0) * A(j, 1) - A(i, 1) * A(j, 0);
      if (det == 0) continue;
      Rational x = (b(i) * A(j, 1) - A(i, 1) * b(j)) / det;
      Rational y = (A(i, 0) * b(j) - b(i) * A(j, 0)) / det;
      if (feasible(x, y)) verts.emplace_back(x, y);
    }
  // feasibility probe: vertices or (when fewer than two independent rows) the
  // origin / deep points along -rows
  bool any_feasible = !verts.empty() || feasible(0, 0);
  if (!any_feasible) {
    // a feasible LP with no two independent active constraints must contain
    // points arbitrarily far along some direction; probe a coarse rational grid
    for (int gx = -40; gx <= 40 && !any_feasible; ++gx)
      for (int gy = -40; gy <= 40 && !any_feasible; ++gy)
        if (feasible(Rational(gx, 2), Rational(gy, 2))) any_feasible = true;
  }
  if (!any_feasible) return {LpStatus::Infeasible, 0};
  // unboundedness: exists direction d with A d <= 0 and c.d > 0. In 2D scan
  // candidate directions: c itself, and each constraint boundary direction.
  std::vector<std::pair<Rational, Rational>> dirs = {{c(0), c(1)}};
  for (int i = 0; i < m; ++i) {
    dirs.emplace_back(-A(i, 1), A(i, 0));
    dirs.emplace_back(A(i, 1), -A(i, 0));
  }
  for (auto& [dx, dy] : dirs) {
    if (c(0) * dx + c(1) * dy <= 0) continue;
    bool recession = true;
    for (int i = 0; i < m; ++i)
      if (A(i, 0) * dx + A(i, 1) * dy > 0) recession = false;
    if (recession) return {LpStatus::Unbounded, 0};
  }
  Rational best;
  bool have = false;
  for (auto& [x, y] : verts) {
    Rational v = c(0) * x + c(1) * y;
    if (!have || v > best) best = v, have = true;
  }
  if (!have) {
    // feasible, bounded, but no vertex (possible when rows are parallel);
    // such problems are excluded by construction in the property test
    return {LpStatus::Unbounded, 0};
  }
  return {LpStatus::Optimal, best};
}

}  // namespace

TEST_CASE("rref canonical form and idempotence") {
  std::mt19937_64 rng(test_seed());
  for (int it = 0; it < 40; ++it) {
    int rows = 1 + static_cast<int>(rng() % 6);
    int cols = 1 + static_cast<int>(rng() % 6);
    RationalMatrix A = random_matrix(rng, rows, cols);
    RrefResult R = rref(A);
    CHECK(is_rref_canonical(R));
    RrefResult R2 = rref(R.R);
    CHECK(R2.R == R.R);
    CHECK(R2.rank == R.rank);
    CHECK(rank_of(A) == R.rank);
    CHECK(rank_of(A.transpose()) == R.rank);
  }
  RrefResult Z = rref(RationalMatrix::Zero(3, 2));
  CHECK(Z.rank == 0);
  CHECK(is_rref_canonical(Z));
}

TEST_CASE("rank bounds under products") {
  std::mt19937_64 rng(test_seed() + 1);
  for (int it = 0; it < 25; ++it) {
    int n = 2 + static_cast<int>(rng() % 4);
    int inner = 1 + static_cast<int>(rng() % 3);
    RationalMatrix U = random_matrix(rng, n, inner);
    RationalMatrix V = random_matrix(rng, inner, n);
    RationalMatrix P = U * V;
    CHECK(rank_of(P) <= inner);
    CHECK(rank_of(P) <= std::min(rank_of(U), rank_of(V)));
  }
  RationalMatrix I = RationalMatrix::Identity(4, 4);
  CHECK(rank_of(I) == 4);
}

TEST_CASE("nullspace vectors annihilate and span the kernel") {
  std::mt19937_64 rng(test_seed() + 2);
  for (int it = 0; it < 30; ++it) {
    int rows = 1 + static_cast<int>(rng() % 5);
    int cols = 1 + static_cast<int>(rng() % 5);
    RationalMatrix A = random_matrix(rng, rows, cols);
    auto ns = nullspace_basis(A);
    CHECK(static_cast<int>(ns.size()) == cols - rank_of(A));
    for (const RationalVector& v : ns) {
      RationalVector Av = A * v;
      for (int i = 0; i < Av.size(); ++i) CHECK(Av(i) == 0);
    }
    if (!ns.empty()) {
      RationalMatrix N(static_cast<int>(ns.size()), cols);
      for (size_t r = 0; r < ns.size(); ++r) N.row(static_cast<int>(r)) = ns[r].transpose();
      CHECK(rank_of(N) == static_cast<int>(ns.size()));
    }
  }
  auto full = nullspace_basis(RationalMatrix::Identity(3, 3));
  CHECK(full.empty());
}

TEST_CASE("solve_exact") {
  RationalMatrix A = rmat(2, 2, {"1", "1", "1", "-1"});
  RationalVector b = rvec({Q("3"), Q("1")});
  auto x = solve_exact(A, b);
  REQUIRE(x.has_value());
  CHECK((*x)(0) == 2);
  CHECK((*x)(1) == 1);

  // inconsistent
  RationalMatrix B = rmat(2, 1, {"1", "1"});
  CHECK(!solve_exact(B, rvec({Q("0"), Q("2")})).has_value());

  // underdetermined: any returned solution must satisfy the system
  std::mt19937_64 rng(test_seed() + 3);
  for (int it = 0; it < 25; ++it) {
    int rows = 1 + static_cast<int>(rng() % 4);
    int cols = 1 + static_cast<int>(rng() % 4);
    RationalMatrix M = random_matrix(rng, rows, cols);
    RationalVector t(cols);
    for (int j = 0; j < cols; ++j) t(j) = random_rational(rng);
    RationalVector rhs = M * t;  // consistent by construction
    auto s = solve_exact(M, rhs);
    REQUIRE(s.has_value());
    RationalVector back = M * *s;
    for (int i = 0; i < rows; ++i) CHECK(back(i) == rhs(i));
  }
}

TEST_CASE("least squares: identity, residual golden, min-norm tie") {
  Eigen::MatrixXd I = Eigen::MatrixXd::Identity(3, 3);
  Eigen::VectorXd b(3);
  b << 1, -2, 5;
  CHECK((least_squares_min_norm(I, b) - b).norm() < 1e-14);

  // two equal rows: best fit is the mean
  Eigen::MatrixXd A(2, 1);
  A << 1, 1;
  Eigen::VectorXd b2(2);
  b2 << 0, 2;
  Eigen::VectorXd c = least_squares_min_norm(A, b2);
  CHECK(c(0) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK((A * c - b2).squaredNorm() == doctest::Approx(2.0).epsilon(1e-14));

  // duplicated column: rank deficient, min-norm splits the weight evenly
  Eigen::MatrixXd D(2, 2);
  D << 1, 1, 2, 2;
  Eigen::VectorXd b3(2);
  b3 << 1, 2;
  Eigen::VectorXd w = least_squares_min_norm(D, b3);
  CHECK(w(0) == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(w(1) == doctest::Approx(0.5).epsilon(1e-12));
  CHECK((D * w - b3).norm() < 1e-12);
}

TEST_CASE("least squares agrees with the normal equations on full-rank systems") {
  std::mt19937_64 rng(test_seed() + 4);
  std::uniform_real_distribution<double> u(-3.0, 3.0);
  for (int it = 0; it < 30; ++it) {
    int rows = 4 + static_cast<int>(rng() % 4);
    int cols = 1 + static_cast<int>(rng() % 3);
    Eigen::MatrixXd A(rows, cols);
    Eigen::VectorXd b(rows);
    for (int i = 0; i < rows; ++i) {
      b(i) = u(rng);
      for (int j = 0; j < cols; ++j) A(i, j) = u(rng);
    }
    if ((A.transpose() * A).fullPivLu().rank() < cols) continue;
    Eigen::VectorXd via_cod = least_squares_min_norm(A, b);
    Eigen::VectorXd via_normal =
        (A.transpose() * A).ldlt().solve(A.transpose() * b);
    CHECK((via_cod - via_normal).norm() < 1e-8 * (1.0 + via_normal.norm()));
  }
}

TEST_CASE("simplex goldens") {
  // max x+y s.t. x<=2, y<=3, x+y<=4  -> 4
  {
    RationalMatrix A = rmat(3, 2, {"1", "0", "0", "1", "1", "1"});
    LpResult r = lp_maximize(A, rvec({Q("2"), Q("3"), Q("4")}), rvec({Q("1"), Q("1")}));
    REQUIRE(r.status == LpStatus::Optimal);
    CHECK(r.value == 4);
    CHECK(r.point(0) + r.point(1) == 4);
    CHECK(r.point(0) <= 2);
    CHECK(r.point(1) <= 3);
  }
  // unbounded: max x s.t. y <= 1
  {
    RationalMatrix A = rmat(1, 2, {"0", "1"});
    LpResult r = lp_maximize(A, rvec({Q("1")}), rvec({Q("1"), Q("0")}));
    CHECK(r.status == LpStatus::Unbounded);
  }
  // infeasible: x <= -1, -x <= -1  (x <= -1 and x >= 1)
  {
    RationalMatrix A = rmat(2, 1, {"1", "-1"});
    LpResult r = lp_maximize(A, rvec({Q("-1"), Q("-1")}), rvec({Q("1")}));
    CHECK(r.status == LpStatus::Infeasible);
  }
  // negative right-hand sides force phase 1:
  // max -x-y s.t. -x<=-3, -y<=-4, x+y<=10  -> optimum -7 at (3,4)
  {
    RationalMatrix A = rmat(3, 2, {"-1", "0", "0", "-1", "1", "1"});
    LpResult r = lp_maximize(A, rvec({Q("-3"), Q("-4"), Q("10")}),
                             rvec({Q("-1"), Q("-1")}));
    REQUIRE(r.status == LpStatus::Optimal);
    CHECK(r.value == -7);
    CHECK(r.point(0) == 3);
    CHECK(r.point(1) == 4);
  }
  // equality pair encoded as two inequalities plus a redundant duplicate row
  {
    RationalMatrix A = rmat(4, 2, {"1", "1", "-1", "-1", "2", "2", "-1", "0"});
    LpResult r = lp_maximize(A, rvec({Q("5"), Q("-5"), Q("10"), Q("0")}),
                             rvec({Q("0"), Q("1")}));
    REQUIRE(r.status == LpStatus::Optimal);
    CHECK(r.value == 5);
  }
  // fractional data stays exact
  {
    RationalMatrix A = rmat(2, 1, {"2/3", "-1/7"});
    LpResult r = lp_maximize(A, rvec({Q("5/9"), Q("1")}), rvec({Q("1")}));
    REQUIRE(r.status == LpStatus::Optimal);
    CHECK(r.value == Q("5/6"));
  }
}

TEST_CASE("random 2D LPs match the vertex-enumeration oracle") {
  std::mt19937_64 rng(test_seed() + 5);
  int checked = 0;
  for (int it = 0; it < 120; ++it) {
    int m = 2 + static_cast<int>(rng() % 4);
    RationalMatrix A(m, 2);
    RationalVector b(m), c(2);
    for (int i = 0; i < m; ++i) {
      A(i, 0) = Rational(static_cast<long>(rng() % 9) - 4);
      A(i, 1) = Rational(static_cast<long>(rng() % 9) - 4);
      b(i) = Rational(static_cast<long>(rng() % 9) - 3);
    }
    c(0) = Rational(static_cast<long>(rng() % 7) - 3);
    c(1) = Rational(static_cast<long>(rng() % 7) - 3);
    // skip degenerate shapes the oracle cannot classify reliably
    bool skip = c(0) == 0 && c(1) == 0;
    int indep = rank_of(A);
    if (indep < 2) skip = true;
    if (skip) continue;
    Lp2Oracle expect = solve_2d_by_vertices(A, b, c);
    LpResult got = lp_maximize(A, b, c);
    // oracle can mislabel feasible-but-vertex-free regions; those were
    // filtered by the rank check above, so statuses must agree here
    CHECK(got.status == expect.status);
    if (got.status == LpStatus::Optimal && expect.status == LpStatus::Optimal) {
      CHECK(got.value == expect.value);
      RationalVector Ax = A * got.point;
      for (int i = 0; i < m; ++i) CHECK(Ax(i) <= b(i));
      ++checked;
    }
  }
  CHECK(checked > 20);
}
