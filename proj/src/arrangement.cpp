#include "tangentfit/arrangement.hpp"

#include "tangentfit/errors.hpp"

namespace tangentfit {

ConeArrangement build_cone(const Polytope& P) {
  const int nv = P.d + 1;
  ConeArrangement C;
  C.d = P.d;
  C.forms.push_back(Polynomial::variable(nv, 0));
  for (int i = 0; i < P.facet_count(); ++i) {
    const Halfspace& h = P.halfspaces[i];
    std::vector<Term> terms;
    if (h.offset != 0) {
      Monomial m0 = Monomial::one(nv);
      m0.set(0, 1);
      terms.push_back({m0, h.offset});
    }
    for (int q = 0; q < P.d; ++q) {
      if (h.normal(q) == 0) continue;
      Monomial mq = Monomial::one(nv);
      mq.set(q + 1, 1);
      terms.push_back({mq, h.normal(q)});
    }
    Polynomial form = Polynomial::from_terms(nv, std::move(terms));
    require(!form.is_zero(), "build_cone: zero facet form");
    C.forms.push_back(content_normalize(form));
  }
  for (size_t i = 0; i < C.forms.size(); ++i)
    for (size_t j = i + 1; j < C.forms.size(); ++j)
      if (C.forms[i] == C.forms[j])
        throw ValidationError("proportional facet forms: cone polynomial would not be squarefree");
  C.Q = Polynomial::constant(nv, 1);
  for (const Polynomial& f : C.forms) C.Q *= f;
  return C;
}

bool is_essential(const ConeArrangement& C) {
  const int nv = C.d + 1;
  RationalMatrix M(static_cast<Eigen::Index>(C.forms.size()), nv);
  for (size_t i = 0; i < C.forms.size(); ++i) {
    for (int q = 0; q < nv; ++q) {
      Monomial mq = Monomial::one(nv);
      mq.set(q, 1);
      M(static_cast<Eigen::Index>(i), q) = C.forms[i].coeff(mq);
    }
  }
  return rank_of(M) == nv;
}

JacobianTuple jacobian(const ConeArrangement& C, bool check_essential) {
  if (check_essential && !is_essential(C))
    throw ValidationError(
        "non-essential arrangement: the cone forms do not span the dual space; "
        "the partial derivatives are not known to generate the Jacobian ideal "
        "minimally");
  const int nv = C.d + 1;
  JacobianTuple J;
  J.q_degree = C.Q.degree();
  Polynomial euler = Polynomial::zero(nv);
  for (int q = 0; q < nv; ++q) {
    J.partials.push_back(C.Q.diff(q));
    euler += Polynomial::variable(nv, q) * J.partials.back();
  }
  require(euler == C.Q * Rational(J.q_degree), "jacobian: Euler identity failed");
  return J;
}

TangencyReport facet_tangency_check(const std::vector<Polynomial>& xi,
                                    const Polytope& P) {
  require(static_cast<int>(xi.size()) == P.d, "field tuple has wrong arity");
  TangencyReport rep;
  for (int i = 0; i < P.facet_count(); ++i) {
    Polynomial s = Polynomial::zero(P.d);
    for (int q = 0; q < P.d; ++q) {
      if (P.halfspaces[i].normal(q) == 0) continue;
      s += xi[q] * P.halfspaces[i].normal(q);
    }
    Polynomial residue = reduce_mod_linear(s, P.facet_poly(i));
    bool tang = residue.is_zero();
    rep.all_tangent = rep.all_tangent && tang;
    rep.tangent.push_back(tang);
    rep.residues.push_back(std::move(residue));
  }
  return rep;
}

}  // namespace tangentfit
