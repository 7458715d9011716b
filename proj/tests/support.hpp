#pragma once

#include <cstdlib>
#include <random>
#include <string>
#include <vector>

#include "tangentfit/fitting.hpp"
#include "tangentfit/io.hpp"

namespace tf = tangentfit;

inline tf::Rational Q(const std::string& s) { return tf::parse_rational(s); }

inline tf::RationalVector rvec(std::vector<tf::Rational> xs) {
  tf::RationalVector v(static_cast<Eigen::Index>(xs.size()));
  for (size_t i = 0; i < xs.size(); ++i) v(static_cast<Eigen::Index>(i)) = xs[i];
  return v;
}

inline tf::Halfspace hs(std::vector<tf::Rational> normal, tf::Rational offset) {
  return {rvec(std::move(normal)), std::move(offset)};
}

// x_1 <= 0, x_2 <= 0, -x_1-x_2-1 <= 0
inline tf::Polytope make_triangle() {
  tf::Polytope P;
  P.d = 2;
  P.halfspaces = {hs({1, 0}, 0), hs({0, 1}, 0), hs({-1, -1}, -1)};
  return P;
}

// [-1, 0]^2
inline tf::Polytope make_square() {
  tf::Polytope P;
  P.d = 2;
  P.halfspaces = {hs({1, 0}, 0), hs({-1, 0}, -1), hs({0, 1}, 0), hs({0, -1}, -1)};
  return P;
}

// vertices (0,0), (3,0), (2,3), (-1,2)
inline tf::Polytope make_quad() {
  tf::Polytope P;
  P.d = 2;
  P.halfspaces = {hs({0, -1}, 0), hs({3, 1}, -9), hs({-1, 3}, -7), hs({-2, -1}, 0)};
  return P;
}

// [-1, 0]^3
inline tf::Polytope make_box3() {
  tf::Polytope P;
  P.d = 3;
  P.halfspaces = {hs({1, 0, 0}, 0),  hs({-1, 0, 0}, -1), hs({0, 1, 0}, 0),
                  hs({0, -1, 0}, -1), hs({0, 0, 1}, 0),  hs({0, 0, -1}, -1)};
  return P;
}

// x_q <= 0, -x_1-x_2-x_3-1 <= 0
inline tf::Polytope make_simplex3() {
  tf::Polytope P;
  P.d = 3;
  P.halfspaces = {hs({1, 0, 0}, 0), hs({0, 1, 0}, 0), hs({0, 0, 1}, 0),
                  hs({-1, -1, -1}, -1)};
  return P;
}

inline tf::Polytope make_unconstrained(int d) {
  tf::Polytope P;
  P.d = d;
  return P;
}

// {exps -> coef} term list builder, e.g. mkpoly(2, {{{1,1},"1"},{{0,2},"-3/2"}}).
inline tf::Polynomial mkpoly(
    int nvars,
    std::vector<std::pair<std::vector<int>, std::string>> spec) {
  std::vector<tf::Term> terms;
  for (auto& [exps, coef] : spec) {
    tf::Monomial m(nvars);
    for (size_t i = 0; i < exps.size(); ++i) m.set(static_cast<int>(i), exps[i]);
    terms.push_back({m, Q(coef)});
  }
  return tf::Polynomial::from_terms(nvars, std::move(terms));
}

inline uint64_t test_seed() {
  if (const char* s = std::getenv("TANGENTFIT_SEED")) return std::strtoull(s, nullptr, 10);
  return 20260813ull;
}

inline tf::Rational random_rational(std::mt19937_64& rng, int max_num = 9,
                                    int max_den = 9) {
  std::uniform_int_distribution<int> num(-max_num, max_num);
  std::uniform_int_distribution<int> den(1, max_den);
  tf::Rational r(num(rng), den(rng));
  r.canonicalize();
  return r;
}

inline tf::Polynomial random_poly(std::mt19937_64& rng, int nvars, int max_deg) {
  std::vector<tf::Term> terms;
  std::vector<tf::Monomial> monos = tf::monomials_up_to_degree(nvars, max_deg);
  std::uniform_int_distribution<int> pick(0, 1);
  for (const tf::Monomial& m : monos)
    if (pick(rng)) terms.push_back({m, random_rational(rng)});
  return tf::Polynomial::from_terms(nvars, std::move(terms));
}

// Random point strictly inside the standard triangle.
inline tf::RationalVector random_triangle_point(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> num(1, 40);
  while (true) {
    tf::Rational a(num(rng), 64), b(num(rng), 64);
    a.canonicalize();
    b.canonicalize();
    if (a + b < 1) return rvec({-a, -b});
  }
}

// The inverse direction of the syzygy-to-field map, used to certify that the
// round trip is the identity: homogenize the entries to degree k, divide the
// field's action on Q by Q itself, and subtract that multiple of the radial
// field. Only valid for fields tangent to every hyperplane of the cone.
inline tf::ModuleVector phi_map(const std::vector<tf::Polynomial>& xi, int k,
                                const tf::ConeArrangement& C) {
  const int d = C.d;
  const int nv = d + 1;
  tf::ModuleVector xhat(nv, nv);
  for (int q = 0; q < d; ++q) xhat.entries[q + 1] = tf::homogenize(xi[q], k);
  tf::Polynomial action(nv);
  for (int q = 0; q < nv; ++q) action += xhat.entries[q] * C.Q.diff(q);
  auto quot = tf::try_divide(action, C.Q);
  tf::require(quot.has_value(), "phi: field is not tangent to the cone");
  tf::Rational scale(1, C.Q.degree());
  scale.canonicalize();
  tf::ModuleVector out(nv, nv);
  for (int q = 0; q < nv; ++q)
    out.entries[q] =
        xhat.entries[q] - *quot * tf::Polynomial::variable(nv, q) * scale;
  return out;
}

inline std::vector<tf::Polynomial> zero_field(int d) {
  return std::vector<tf::Polynomial>(static_cast<size_t>(d),
                                     tf::Polynomial::zero(d));
}
