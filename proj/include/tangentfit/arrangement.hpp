#pragma once

#include <vector>

#include "tangentfit/polytope.hpp"

namespace tangentfit {

// Central arrangement in d+1 variables obtained by homogenizing the facet
// forms and appending x_0 itself: forms[0] = x_0, forms[i] = homogenized
// h_i, each content-normalized. Q is the product of all forms.
struct ConeArrangement {
  int d = 0;                      // base dimension; cone ring has d+1 vars
  std::vector<Polynomial> forms;  // size m+1, homogeneous degree 1
  Polynomial Q;                   // homogeneous of degree m+1, squarefree
};

struct JacobianTuple {
  std::vector<Polynomial> partials;  // (d_0 Q, ..., d_d Q)
  int q_degree = 0;                  // deg Q
};

struct TangencyReport {
  bool all_tangent = true;
  std::vector<bool> tangent;        // per facet
  std::vector<Polynomial> residues; // zero iff tangent; nonzero residue is the witness
};

ConeArrangement build_cone(const Polytope& P);

// Rank of the (m+1) x (d+1) coefficient matrix of the forms equals d+1, i.e.
// the hyperplanes intersect only at the origin.
bool is_essential(const ConeArrangement& C);

// Partial derivatives of Q with an exact Euler identity assertion
// sum_q x_q * d_q Q = deg(Q) * Q. With check_essential the non-essential case
// is rejected (the partials are then not known to generate minimally).
JacobianTuple jacobian(const ConeArrangement& C, bool check_essential = true);

// For each facet i, reduces <xi, alpha_i> modulo h_i and reports whether the
// residue vanishes; xi has d entries over x_1..x_d.
TangencyReport facet_tangency_check(const std::vector<Polynomial>& xi,
                                    const Polytope& P);

}  // namespace tangentfit
