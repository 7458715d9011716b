#pragma once

#include <limits>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "tangentfit/monomial.hpp"
#include "tangentfit/rational.hpp"

namespace tangentfit {

// Degree of the zero polynomial.
inline constexpr int kNegInfDegree = std::numeric_limits<int>::min();

struct Term {
  Monomial mono;
  Rational coef;
};

// Sparse multivariate polynomial with exact rational coefficients. Terms are
// kept sorted descending in the structural order with no zero coefficients, so
// equal polynomials have identical term lists.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(int nvars) : nvars_(nvars) {}

  static Polynomial zero(int nvars) { return Polynomial(nvars); }
  static Polynomial constant(int nvars, const Rational& c);
  static Polynomial variable(int nvars, int i);
  static Polynomial monomial(const Monomial& m, const Rational& c);
  // Build from an arbitrary term list (merges duplicates, drops zeros).
  static Polynomial from_terms(int nvars, std::vector<Term> terms);

  int nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  int degree() const { return terms_.empty() ? kNegInfDegree : terms_.front().mono.degree(); }
  const std::vector<Term>& terms() const { return terms_; }
  size_t term_count() const { return terms_.size(); }

  Rational coeff(const Monomial& m) const;
  bool is_homogeneous() const;

  Polynomial operator-() const;
  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial& operator+=(const Polynomial& o) { return *this = *this + o; }
  Polynomial& operator-=(const Polynomial& o) { return *this = *this - o; }
  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }
  Polynomial operator*(const Rational& c) const;
  friend Polynomial operator*(const Rational& c, const Polynomial& p) { return p * c; }

  bool operator==(const Polynomial& o) const {
    if (nvars_ != o.nvars_ || terms_.size() != o.terms_.size()) return false;
    for (size_t i = 0; i < terms_.size(); ++i)
      if (!(terms_[i].mono == o.terms_[i].mono) || terms_[i].coef != o.terms_[i].coef)
        return false;
    return true;
  }

  // Leading term with respect to an explicit order (scan; storage order is
  // structural and may differ).
  const Term& leading_term(const MonomialOrder& ord) const;

  Polynomial diff(int var) const;
  Rational eval(std::span<const Rational> x) const;
  double eval(std::span<const double> x) const;

  // Multiplies by a single term (fast path used by the reduction loops).
  Polynomial times_term(const Monomial& m, const Rational& c) const;

 private:
  int nvars_ = 0;
  std::vector<Term> terms_;
  friend Polynomial normalize_terms(int nvars, std::vector<Term>&& terms);
};

// f in x_1..x_d (indices 0..d-1) -> cone ring with x_0 inserted at index 0,
// each term padded with x_0^(k - deg term). Requires k >= deg f.
Polynomial homogenize(const Polynomial& f, int k);
// Substitutes x_0 = 1 and drops index 0.
Polynomial dehomogenize(const Polynomial& fhat);

// Remainder of f modulo the linear polynomial h, eliminating variable `pivot`
// (whose coefficient in h must be nonzero): substitutes the solved pivot into
// f. The result generates the same class in R[x]/(h); it is zero iff h | f.
Polynomial reduce_mod_linear(const Polynomial& f, const Polynomial& h, int pivot);
// Convenience overload: pivot = lowest-index variable with nonzero coefficient.
Polynomial reduce_mod_linear(const Polynomial& f, const Polynomial& h);

// Exact quotient f / g when g divides f (single-divisor division with zero
// remainder); nullopt if the division leaves a remainder.
std::optional<Polynomial> try_divide(const Polynomial& f, const Polynomial& g);

// Scales by the inverse of the rational content and fixes the sign so the
// structurally-leading coefficient is positive; integer coprime coefficients.
Polynomial content_normalize(const Polynomial& f);

std::string to_string(const Polynomial& f, const std::vector<std::string>& names);

}  // namespace tangentfit
