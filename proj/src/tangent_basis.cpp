#include "tangentfit/tangent_basis.hpp"

#include <algorithm>
#include <map>

#include "tangentfit/errors.hpp"

namespace tangentfit {

namespace {

struct StructLess {
  bool operator()(const Monomial& a, const Monomial& b) const {
    return structural_compare(a, b) < 0;
  }
};

std::vector<Polynomial> normalize_field(std::vector<Polynomial> field) {
  ModuleVector v;
  v.entries = std::move(field);
  return module_content_normalize(v).entries;
}

}  // namespace

TangentPipeline::TangentPipeline(Polytope P, bool allow_nonessential,
                                 std::ostream* trace)
    : P_(std::move(P)), trace_(trace) {
  require_valid(P_);
  trivial_ = P_.facet_count() == 0;
  cone_ = build_cone(P_);
  cone_ord_ = MonomialOrder::grevlex_x0_last(P_.d + 1);
  if (!trivial_) jac_ = jacobian(cone_, !allow_nonessential);
}

const SyzygyTuple& TangentPipeline::syzygies() {
  require(!trivial_, "no syzygy stage for the unconstrained domain");
  if (!syz_) syz_ = syzygies_of_tuple(jac_.partials, cone_ord_, true, trace_);
  return *syz_;
}

const FreeResolution& TangentPipeline::resolution() {
  require(!trivial_, "no resolution stage for the unconstrained domain");
  if (!res_) res_ = free_resolution(jac_.partials, cone_ord_, trace_);
  return *res_;
}

std::vector<int> TangentPipeline::generator_entry_degrees() {
  const SyzygyTuple& S = syzygies();
  std::vector<int> out;
  for (int deg : S.degrees) out.push_back(deg - m());
  return out;
}

std::vector<ModuleVector> TangentPipeline::syzygy_degree_component(int k) {
  const SyzygyTuple& S = syzygies();
  const int nv = P_.d + 1;
  const int rank = nv;
  std::vector<ModuleVector> chosen;
  if (k < 0) return chosen;

  std::vector<Monomial> monos = monomials_of_degree(nv, k);
  std::sort(monos.begin(), monos.end(), [this](const Monomial& a, const Monomial& b) {
    return cone_ord_.compare(a, b) > 0;
  });
  std::map<Monomial, int, StructLess> col_of;
  for (size_t j = 0; j < monos.size(); ++j)
    col_of[monos[j]] = static_cast<int>(j) * rank;
  const Eigen::Index ncols = static_cast<Eigen::Index>(monos.size()) * rank;

  // Echelon rows found so far, keyed by pivot column.
  std::vector<std::pair<Eigen::Index, RationalVector>> pivots;
  auto try_accept = [&](const ModuleVector& cand) {
    RationalVector v = RationalVector::Zero(ncols);
    for (int q = 0; q < rank; ++q)
      for (const Term& t : cand.entries[q].terms())
        v(col_of.at(t.mono) + q) = t.coef;
    for (const auto& [pc, row] : pivots)
      if (v(pc) != 0) v -= v(pc) * row;
    Eigen::Index lead = -1;
    for (Eigen::Index c = 0; c < ncols; ++c)
      if (v(c) != 0) {
        lead = c;
        break;
      }
    if (lead < 0) return false;
    v /= v(lead);
    pivots.emplace_back(lead, std::move(v));
    return true;
  };

  const std::vector<int> entdeg = generator_entry_degrees();
  for (size_t t = 0; t < S.tuple.gens.size(); ++t) {
    if (entdeg[t] > k) continue;
    for (const Monomial& mu : monomials_of_degree(nv, k - entdeg[t])) {
      ModuleVector cand = S.tuple.gens[t].times_term(mu, Rational(1));
      if (try_accept(cand)) chosen.push_back(std::move(cand));
    }
  }
  return chosen;
}

TangentBasis TangentPipeline::tangent_basis(int k) {
  if (k < 0) throw ValidationError("degree bound must be non-negative");
  TangentBasis B;
  B.k = k;
  B.d = P_.d;
  if (trivial_) {
    for (int q = 0; q < P_.d; ++q)
      for (const Monomial& mu : monomials_up_to_degree(P_.d, k)) {
        std::vector<Polynomial> field(P_.d, Polynomial::zero(P_.d));
        field[q] = Polynomial::monomial(mu, Rational(1));
        B.fields.push_back(std::move(field));
      }
    return B;
  }
  for (ModuleVector& G : syzygy_degree_component(k)) {
    ModuleVector psi = psi_map(G);
    std::vector<Polynomial> field;
    for (int q = 1; q <= P_.d; ++q) field.push_back(dehomogenize(psi.entries[q]));
    B.fields.push_back(normalize_field(std::move(field)));
    B.homogeneous_preimages.push_back(std::move(G));
  }
  RationalMatrix M = field_coeff_matrix(B.fields, P_.d, k);
  require(rank_of(M) == static_cast<Eigen::Index>(B.fields.size()),
          "dehomogenized tangent fields must stay independent");
  return B;
}

long TangentPipeline::dimension_by_resolution(int k) {
  if (k < 0) return 0;
  if (trivial_) return static_cast<long>(P_.d) * binom(P_.d + k, P_.d);
  return dimension_from_resolution(resolution(), k);
}

ModuleVector psi_map(const ModuleVector& G) {
  const int nv = G.nvars();
  require(G.rank() == nv, "psi: expected one entry per cone variable");
  auto quot = try_divide(G.entries[0], Polynomial::variable(nv, 0));
  require(quot.has_value(), "psi: 0-th entry must be divisible by x_0");
  ModuleVector out(nv, nv);
  for (int q = 0; q < nv; ++q)
    out.entries[q] = G.entries[q] - *quot * Polynomial::variable(nv, q);
  require(out.entries[0].is_zero(), "psi: 0-th entry must cancel");
  return out;
}

TangentBasis tangent_basis(const Polytope& P, int k) {
  TangentPipeline pipe(P);
  return pipe.tangent_basis(k);
}

long dimension_by_resolution(const Polytope& P, int k) {
  TangentPipeline pipe(P);
  return pipe.dimension_by_resolution(k);
}

TangentBasis oracle_tangent_basis(const Polytope& P, int k) {
  require_valid(P);
  if (k < 0) throw ValidationError("degree bound must be non-negative");
  const int d = P.d;
  std::vector<Monomial> monos = monomials_up_to_degree(d, k);
  const int M = static_cast<int>(monos.size());
  std::map<Monomial, int, StructLess> row_of;
  for (int j = 0; j < M; ++j) row_of[monos[j]] = j;

  const Eigen::Index ncols = static_cast<Eigen::Index>(d) * M;
  RationalMatrix A = RationalMatrix::Zero(
      static_cast<Eigen::Index>(P.facet_count()) * M, ncols);
  for (int i = 0; i < P.facet_count(); ++i) {
    Polynomial h = P.facet_poly(i);
    for (int q = 0; q < d; ++q) {
      const Rational& aq = P.halfspaces[i].normal(q);
      if (aq == 0) continue;
      for (int j = 0; j < M; ++j) {
        Polynomial s = Polynomial::monomial(monos[j], aq);
        Polynomial residue = reduce_mod_linear(s, h);
        for (const Term& t : residue.terms())
          A(static_cast<Eigen::Index>(i) * M + row_of.at(t.mono),
            static_cast<Eigen::Index>(q) * M + j) += t.coef;
      }
    }
  }

  TangentBasis B;
  B.k = k;
  B.d = d;
  for (const RationalVector& v : nullspace_basis(A)) {
    std::vector<Polynomial> field;
    for (int q = 0; q < d; ++q) {
      std::vector<Term> terms;
      for (int j = 0; j < M; ++j)
        if (v(static_cast<Eigen::Index>(q) * M + j) != 0)
          terms.push_back({monos[j], v(static_cast<Eigen::Index>(q) * M + j)});
      field.push_back(Polynomial::from_terms(d, std::move(terms)));
    }
    B.fields.push_back(normalize_field(std::move(field)));
  }
  return B;
}

RationalMatrix field_coeff_matrix(
    const std::vector<std::vector<Polynomial>>& fields, int d, int k) {
  std::vector<Monomial> monos = monomials_up_to_degree(d, k);
  const int M = static_cast<int>(monos.size());
  std::map<Monomial, int, StructLess> col_of;
  for (int j = 0; j < M; ++j) col_of[monos[j]] = j;
  RationalMatrix A = RationalMatrix::Zero(
      static_cast<Eigen::Index>(fields.size()), static_cast<Eigen::Index>(d) * M);
  for (size_t r = 0; r < fields.size(); ++r) {
    require(static_cast<int>(fields[r].size()) == d, "field tuple has wrong arity");
    for (int q = 0; q < d; ++q) {
      require(fields[r][q].degree() <= k, "field degree exceeds the bound");
      for (const Term& t : fields[r][q].terms())
        A(static_cast<Eigen::Index>(r),
          static_cast<Eigen::Index>(q) * M + col_of.at(t.mono)) = t.coef;
    }
  }
  return A;
}

bool span_contains(const std::vector<std::vector<Polynomial>>& hay,
                   const std::vector<Polynomial>& needle, int d, int k) {
  std::vector<std::vector<Polynomial>> all = hay;
  all.push_back(needle);
  RationalMatrix big = field_coeff_matrix(all, d, k);
  return rank_of(big.topRows(big.rows() - 1)) == rank_of(big);
}

SpanComparison compare_spans(const std::vector<std::vector<Polynomial>>& a,
                             const std::vector<std::vector<Polynomial>>& b,
                             int d, int k) {
  SpanComparison out;
  RationalMatrix A = field_coeff_matrix(a, d, k);
  RationalMatrix B = field_coeff_matrix(b, d, k);
  out.dim_a = rank_of(A);
  out.dim_b = rank_of(B);
  RationalMatrix AB(A.rows() + B.rows(), A.cols());
  AB.topRows(A.rows()) = A;
  AB.bottomRows(B.rows()) = B;
  long joint = rank_of(AB);
  out.equal = joint == out.dim_a && joint == out.dim_b;
  if (out.equal) return out;
  if (joint > out.dim_a) {
    for (const auto& f : b)
      if (!span_contains(a, f, d, k)) {
        out.witness = f;
        out.witness_from_a = false;
        break;
      }
  } else {
    for (const auto& f : a)
      if (!span_contains(b, f, d, k)) {
        out.witness = f;
        out.witness_from_a = true;
        break;
      }
  }
  return out;
}

}  // namespace tangentfit
