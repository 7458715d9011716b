#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "tangentfit/errors.hpp"

namespace tangentfit {

// Dense exponent vector. Index 0 is the homogenizing variable x_0 whenever the
// ambient ring is a cone ring; base-ring polynomials in x_1..x_d use indices
// 0..d-1. Contexts are tracked by callers, the monomial itself only knows its
// variable count.
inline constexpr int kMaxVars = 8;

struct Monomial {
  std::array<int16_t, kMaxVars> e{};
  int8_t n = 0;

  Monomial() = default;
  explicit Monomial(int nvars) : n(static_cast<int8_t>(nvars)) {
    require(nvars >= 0 && nvars <= kMaxVars, "monomial: unsupported variable count");
  }

  int nvars() const { return n; }
  int degree() const {
    int d = 0;
    for (int i = 0; i < n; ++i) d += e[i];
    return d;
  }
  int operator[](int i) const { return e[i]; }
  void set(int i, int v) { e[i] = static_cast<int16_t>(v); }

  bool operator==(const Monomial& o) const { return n == o.n && e == o.e; }

  bool divides(const Monomial& o) const {
    for (int i = 0; i < n; ++i)
      if (e[i] > o.e[i]) return false;
    return true;
  }
  Monomial operator*(const Monomial& o) const {
    Monomial r(n);
    for (int i = 0; i < n; ++i) r.e[i] = static_cast<int16_t>(e[i] + o.e[i]);
    return r;
  }
  // Quotient this / o; caller guarantees o.divides(*this).
  Monomial quotient_by(const Monomial& o) const {
    Monomial r(n);
    for (int i = 0; i < n; ++i) r.e[i] = static_cast<int16_t>(e[i] - o.e[i]);
    return r;
  }
  static Monomial one(int nvars) { return Monomial(nvars); }
  static Monomial lcm(const Monomial& a, const Monomial& b) {
    Monomial r(a.n);
    for (int i = 0; i < a.n; ++i) r.e[i] = std::max(a.e[i], b.e[i]);
    return r;
  }
  static Monomial gcd(const Monomial& a, const Monomial& b) {
    Monomial r(a.n);
    for (int i = 0; i < a.n; ++i) r.e[i] = std::min(a.e[i], b.e[i]);
    return r;
  }
};

// Fixed structural order (graded reverse lexicographic with the identity
// variable permutation); used only for canonical term storage and equality.
int structural_compare(const Monomial& a, const Monomial& b);

struct MonomialOrder {
  enum class Kind { grevlex, grlex };
  Kind kind = Kind::grevlex;
  // perm[pos] = variable index at significance position pos (pos 0 strongest).
  std::vector<int> perm;

  static MonomialOrder grevlex(int nvars);
  static MonomialOrder grlex(int nvars);
  // grevlex with x_0 moved to the least significant tie-break slot; the
  // default order for cone-ring computations.
  static MonomialOrder grevlex_x0_last(int nvars);

  int nvars() const { return static_cast<int>(perm.size()); }
  // >0 if a > b, 0 if equal, <0 if a < b.
  int compare(const Monomial& a, const Monomial& b) const;
};

std::vector<Monomial> monomials_of_degree(int nvars, int deg);
std::vector<Monomial> monomials_up_to_degree(int nvars, int deg);

// names[i] names variable i, e.g. {"x_0","x_1","x_2"}.
std::string to_string(const Monomial& m, const std::vector<std::string>& names);
std::vector<std::string> cone_var_names(int nvars);   // x_0, x_1, ...
std::vector<std::string> base_var_names(int nvars);   // x_1, x_2, ...

}  // namespace tangentfit
