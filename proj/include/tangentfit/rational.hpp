#pragma once

#include <gmpxx.h>

#include <Eigen/Core>
#include <cstdint>
#include <string>

#include "tangentfit/errors.hpp"

namespace tangentfit {

using Rational = mpq_class;
using Integer = mpz_class;

// Parses "p", "-p" or "p/q" (decimal-free). Throws on malformed input.
inline Rational parse_rational(const std::string& s) {
  bool ok = !s.empty();
  int slashes = 0;
  for (size_t i = 0; ok && i < s.size(); ++i) {
    char c = s[i];
    if (c == '-') {
      ok = i == 0 && s.size() > 1;
    } else if (c == '/') {
      ok = ++slashes == 1 && i > 0 && s[i - 1] != '-' && i + 1 < s.size();
    } else {
      ok = c >= '0' && c <= '9';
    }
  }
  if (!ok) throw AlgebraError("malformed rational literal: '" + s + "'");
  Rational r(s);
  if (r.get_den() == 0) throw AlgebraError("rational literal with zero denominator: '" + s + "'");
  r.canonicalize();
  return r;
}

// Canonical "p" / "p/q" rendering.
inline std::string to_string(const Rational& r) { return r.get_str(); }

// Exact value of an IEEE double (doubles are dyadic rationals).
inline Rational exact_from_double(double x) { return Rational(x); }

inline double to_double(const Rational& r) { return r.get_d(); }

// Best rational approximation of x with denominator <= max_den, computed from
// the continued-fraction expansion of the exact dyadic value of x. The closer
// of the last in-bound convergent and its final semiconvergent is returned;
// ties pick the convergent (smaller denominator).
inline Rational rationalize(double x, long max_den) {
  require(max_den >= 1, "rationalize: max denominator must be positive");
  Rational xq = exact_from_double(x);
  if (xq.get_den() <= max_den) return xq;
  Integer n = xq.get_num(), d = xq.get_den();
  Integer hm2(0), hm1(1), km2(1), km1(0);
  Integer N(max_den);
  while (true) {
    Integer a, h, k;
    mpz_fdiv_q(a.get_mpz_t(), n.get_mpz_t(), d.get_mpz_t());
    h = a * hm1 + hm2;
    k = a * km1 + km2;
    if (k > N) {
      Integer t = (N - km2) / km1;
      Rational semi(hm2 + t * hm1, km2 + t * km1);
      semi.canonicalize();
      Rational conv(hm1, km1);
      conv.canonicalize();
      return abs(xq - semi) < abs(xq - conv) ? semi : conv;
    }
    Integer r = n - a * d;
    hm2 = hm1;
    hm1 = h;
    km2 = km1;
    km1 = k;
    if (r == 0) {
      Rational res(hm1, km1);
      res.canonicalize();
      return res;
    }
    n = d;
    d = r;
  }
}

}  // namespace tangentfit

namespace Eigen {

template <>
struct NumTraits<tangentfit::Rational> : GenericNumTraits<tangentfit::Rational> {
  typedef tangentfit::Rational Real;
  typedef tangentfit::Rational NonInteger;
  typedef tangentfit::Rational Nested;
  static inline Real epsilon() { return Real(0); }
  static inline Real dummy_precision() { return Real(0); }
  static inline int digits10() { return 0; }
  enum {
    IsInteger = 0,
    IsSigned = 1,
    IsComplex = 0,
    RequireInitialization = 1,
    ReadCost = 6,
    AddCost = 150,
    MulCost = 100
  };
};

}  // namespace Eigen
