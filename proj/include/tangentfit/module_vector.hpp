#pragma once

#include <memory>
#include <vector>

#include "tangentfit/polynomial.hpp"

namespace tangentfit {

// Element of a free module S^r, stored as one polynomial per component.
struct ModuleVector {
  std::vector<Polynomial> entries;

  ModuleVector() = default;
  ModuleVector(int rank, int nvars)
      : entries(static_cast<size_t>(rank), Polynomial(nvars)) {}
  static ModuleVector basis(int rank, int nvars, int comp,
                            const Polynomial& p) {
    ModuleVector v(rank, nvars);
    v.entries[comp] = p;
    return v;
  }

  int rank() const { return static_cast<int>(entries.size()); }
  int nvars() const { return entries.empty() ? 0 : entries[0].nvars(); }
  bool is_zero() const {
    for (const auto& p : entries)
      if (!p.is_zero()) return false;
    return true;
  }

  ModuleVector operator+(const ModuleVector& o) const;
  ModuleVector operator-(const ModuleVector& o) const;
  ModuleVector operator-() const;
  ModuleVector operator*(const Rational& c) const;
  ModuleVector times_poly(const Polynomial& p) const;
  ModuleVector times_term(const Monomial& m, const Rational& c) const;
  bool operator==(const ModuleVector& o) const { return entries == o.entries; }

  // Sum_q entries[q] * F[q].
  Polynomial dot(const std::vector<Polynomial>& F) const;
  // Sum_q entries[q] * T[q] for a module tuple T.
  ModuleVector dot(const std::vector<ModuleVector>& T) const;

  // Degree with per-component grade shifts: deg(entries[q]) + shifts[q], which
  // must agree across nonzero components (checked); kNegInfDegree when zero.
  int graded_degree(const std::vector<int>& shifts) const;
  bool is_homogeneous(const std::vector<int>& shifts) const;
};

struct ModuleMonomial {
  Monomial mono;
  int comp = 0;
  bool operator==(const ModuleMonomial& o) const {
    return comp == o.comp && mono == o.mono;
  }
};

// Order on module monomials m*e_comp. POT compares the component first (lower
// index greater), TOP the monomial first. The Schreyer order is induced by the
// leading module monomials of a tuple over the order of the previous level:
// m*e_q maps to (m * leads[q].mono, leads[q].comp), compared with prev; ties
// break to the lower component index.
class ModuleOrder {
 public:
  enum class Kind { POT, TOP, Schreyer };

  static ModuleOrder pot(MonomialOrder base);
  static ModuleOrder top(MonomialOrder base);
  static ModuleOrder schreyer(std::shared_ptr<const ModuleOrder> prev,
                              std::vector<ModuleMonomial> leads);

  Kind kind() const { return kind_; }
  const MonomialOrder& base() const;
  // >0 if a > b.
  int compare(const ModuleMonomial& a, const ModuleMonomial& b) const;

 private:
  Kind kind_ = Kind::TOP;
  MonomialOrder base_;
  std::shared_ptr<const ModuleOrder> prev_;
  std::vector<ModuleMonomial> leads_;
};

}  // namespace tangentfit
