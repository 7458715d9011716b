#include "tangentfit/polytope.hpp"

#include <sstream>

#include "tangentfit/errors.hpp"

namespace tangentfit {

Polynomial Polytope::facet_poly(int i) const {
  require(i >= 0 && i < facet_count(), "facet index out of range");
  const Halfspace& h = halfspaces[i];
  std::vector<Term> terms;
  for (int q = 0; q < d; ++q) {
    if (h.normal(q) == 0) continue;
    Monomial mq = Monomial::one(d);
    mq.set(q, 1);
    terms.push_back({mq, h.normal(q)});
  }
  if (h.offset != 0) terms.push_back({Monomial::one(d), h.offset});
  return Polynomial::from_terms(d, std::move(terms));
}

std::string ValidationReport::summary() const {
  if (ok) return "valid";
  std::ostringstream os;
  os << "invalid polytope:";
  for (const std::string& p : problems) os << "\n  - " << p;
  return os.str();
}

namespace {

bool proportional(const Halfspace& a, const Halfspace& b) {
  const Eigen::Index d = a.normal.size();
  auto at = [d](const Halfspace& h, Eigen::Index q) -> const Rational& {
    return q < d ? h.normal(q) : h.offset;
  };
  for (Eigen::Index p = 0; p <= d; ++p)
    for (Eigen::Index q = p + 1; q <= d; ++q)
      if (at(a, p) * at(b, q) != at(a, q) * at(b, p)) return false;
  return true;
}

}  // namespace

ValidationReport validate_polytope(const Polytope& P, bool check_redundancy) {
  ValidationReport rep;
  auto fail = [&rep](std::string msg) {
    rep.ok = false;
    rep.problems.push_back(std::move(msg));
  };

  if (P.d < 1) fail("ambient dimension must be at least 1");
  if (P.d + 1 > kMaxVars)
    fail("ambient dimension exceeds supported maximum (d <= " +
         std::to_string(kMaxVars - 1) + ")");
  if (!rep.ok) return rep;

  const int m = P.facet_count();
  for (int i = 0; i < m; ++i) {
    const Halfspace& h = P.halfspaces[i];
    if (h.normal.size() != P.d) {
      fail("halfspace " + std::to_string(i + 1) + ": normal has wrong length");
      continue;
    }
    bool all_zero = true;
    for (int q = 0; q < P.d; ++q)
      if (h.normal(q) != 0) all_zero = false;
    if (all_zero) fail("halfspace " + std::to_string(i + 1) + ": zero normal");
  }
  if (!rep.ok) return rep;

  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j)
      if (proportional(P.halfspaces[i], P.halfspaces[j]))
        fail("halfspaces " + std::to_string(i + 1) + " and " +
             std::to_string(j + 1) + " are proportional");
  if (!rep.ok) return rep;

  if (m == 0) return rep;  // P = R^d

  // Interior test: maximize t subject to h_i(x) + t <= 0. Always feasible
  // (t -> -inf); a positive optimum or unboundedness certifies an interior
  // point.
  {
    RationalMatrix A(m, P.d + 1);
    RationalVector b(m), c = RationalVector::Zero(P.d + 1);
    for (int i = 0; i < m; ++i) {
      for (int q = 0; q < P.d; ++q) A(i, q) = P.halfspaces[i].normal(q);
      A(i, P.d) = 1;
      b(i) = -P.halfspaces[i].offset;
    }
    c(P.d) = 1;
    LpResult lr = lp_maximize(A, b, c);
    require(lr.status != LpStatus::Infeasible, "interior LP cannot be infeasible");
    if (lr.status == LpStatus::Optimal && lr.value <= 0) {
      fail("empty interior");
      return rep;
    }
  }

  if (!check_redundancy) return rep;

  for (int j = 0; j < m; ++j) {
    RationalMatrix A(m - 1, P.d);
    RationalVector b(m - 1);
    int r = 0;
    for (int i = 0; i < m; ++i) {
      if (i == j) continue;
      for (int q = 0; q < P.d; ++q) A(r, q) = P.halfspaces[i].normal(q);
      b(r) = -P.halfspaces[i].offset;
      ++r;
    }
    LpResult lr = lp_maximize(A, b, P.halfspaces[j].normal);
    if (lr.status == LpStatus::Unbounded) continue;
    require(lr.status == LpStatus::Optimal, "redundancy LP infeasible despite nonempty P");
    if (lr.value + P.halfspaces[j].offset <= 0) {
      rep.redundant.push_back(j);
      fail("halfspace " + std::to_string(j + 1) +
           " is redundant (it does not cut the intersection of the others)");
    }
  }
  return rep;
}

void require_valid(const Polytope& P, bool check_redundancy) {
  ValidationReport rep = validate_polytope(P, check_redundancy);
  if (!rep.ok) throw ValidationError(rep.summary());
}

std::vector<Rational> facet_values(const Polytope& P, const RationalVector& x) {
  require(x.size() == P.d, "point has wrong dimension");
  std::vector<Rational> vals;
  vals.reserve(P.halfspaces.size());
  for (const Halfspace& h : P.halfspaces) {
    Rational v = h.offset;
    for (int q = 0; q < P.d; ++q) v += h.normal(q) * x(q);
    vals.push_back(v);
  }
  return vals;
}

bool contains(const Polytope& P, const RationalVector& x) {
  for (const Rational& v : facet_values(P, x))
    if (v > 0) return false;
  return true;
}

}  // namespace tangentfit
