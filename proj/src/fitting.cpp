#include "tangentfit/fitting.hpp"

#include <algorithm>
#include <span>

#include "tangentfit/errors.hpp"

namespace tangentfit {

namespace {

constexpr double kOutsideTol = 1e-9;

std::span<const Rational> point_span(const RationalVector& x) {
  return {x.data(), static_cast<size_t>(x.size())};
}

int scalar_rows(const Observation& o, int d) {
  return o.op == ObsOp::value ? d : 1;
}

Rational target_norm_sq(const Observation& o) {
  Rational s = 0;
  for (Eigen::Index i = 0; i < o.target.size(); ++i) s += o.target(i) * o.target(i);
  return s;
}

std::vector<Polynomial> constraint_polys(const std::vector<Polynomial>& field,
                                         ConstraintKind kind, int d) {
  std::vector<Polynomial> out;
  switch (kind) {
    case ConstraintKind::none:
      break;
    case ConstraintKind::divergence_free: {
      Polynomial div = Polynomial::zero(d);
      for (int q = 0; q < d; ++q) div += field[q].diff(q);
      out.push_back(std::move(div));
      break;
    }
    case ConstraintKind::rotation_free:
      for (int p = 0; p < d; ++p)
        for (int q = p + 1; q < d; ++q)
          out.push_back(field[q].diff(p) - field[p].diff(q));
      break;
    case ConstraintKind::harmonic:
      for (int q = 0; q < d; ++q) {
        Polynomial lap = Polynomial::zero(d);
        for (int p = 0; p < d; ++p) lap += field[q].diff(p).diff(p);
        out.push_back(std::move(lap));
      }
      break;
  }
  return out;
}

FitResult zero_field_result(int d, const std::vector<Observation>& obs,
                            ConstraintKind kind) {
  FitResult R;
  R.degree_used = 0;
  R.constraint = kind;
  R.field.assign(d, Polynomial::zero(d));
  Rational err = 0;
  for (const Observation& o : obs) {
    Rational t = target_norm_sq(o);
    R.residuals.push_back(to_double(t));
    err += t;
  }
  R.error = to_double(err);
  R.exact = err == 0;
  return R;
}

void finish_residuals(FitResult& R, const std::vector<Observation>& obs) {
  Rational err = 0;
  R.residuals.clear();
  for (const Observation& o : obs) {
    RationalVector got = apply_operator(R.field, o);
    Rational s = 0;
    for (Eigen::Index i = 0; i < got.size(); ++i) {
      Rational diff = got(i) - o.target(i);
      s += diff * diff;
    }
    R.residuals.push_back(to_double(s));
    err += s;
  }
  R.error = to_double(err);
  R.exact = err == 0;
}

std::vector<Polynomial> combine_fields(
    const std::vector<std::vector<Polynomial>>& fields,
    const std::vector<Rational>& c, int d) {
  std::vector<Polynomial> out(d, Polynomial::zero(d));
  for (size_t j = 0; j < fields.size(); ++j) {
    if (c[j] == 0) continue;
    for (int q = 0; q < d; ++q) out[q] += fields[j][q] * c[j];
  }
  return out;
}

// Canonical coprime-integer fields can carry coefficients far beyond double
// range (rationalized facet data inflates them), so the numeric solve works
// on fields rescaled by their largest coefficient. Rescaling is exact and
// changes neither the span nor tangency.
std::vector<std::vector<Polynomial>> rescale_fields(
    std::vector<std::vector<Polynomial>> fields) {
  for (auto& f : fields) {
    Rational s = 0;
    for (const auto& p : f)
      for (const Term& t : p.terms()) {
        Rational a = abs(t.coef);
        if (a > s) s = a;
      }
    if (s != 0 && s != 1) {
      Rational inv = Rational(1) / s;
      for (auto& p : f) p = p * inv;
    }
  }
  return fields;
}

FitResult fit_restricted(const TangentBasis& restricted, int d,
                         const std::vector<Observation>& obs,
                         ConstraintKind kind) {
  RationalMatrix A;
  RationalVector b;
  std::vector<std::vector<Polynomial>> fields = rescale_fields(restricted.fields);
  design_system(fields, obs, A, b);
  Eigen::MatrixXd Ad(A.rows(), A.cols());
  Eigen::VectorXd bd(b.size());
  for (Eigen::Index i = 0; i < A.rows(); ++i)
    for (Eigen::Index j = 0; j < A.cols(); ++j) Ad(i, j) = to_double(A(i, j));
  for (Eigen::Index i = 0; i < b.size(); ++i) bd(i) = to_double(b(i));
  Eigen::VectorXd c = least_squares_min_norm(Ad, bd);

  FitResult R;
  R.degree_used = restricted.k;
  R.constraint = kind;
  R.basis_fields = fields;
  std::vector<Rational> cq;
  for (Eigen::Index j = 0; j < c.size(); ++j) {
    R.coefficients.push_back(c(j));
    cq.push_back(exact_from_double(c(j)));
  }
  R.field = combine_fields(fields, cq, d);
  finish_residuals(R, obs);
  return R;
}

FitResult fit_core(TangentPipeline& pipe, int k,
                   const std::vector<Observation>& obs, ConstraintKind kind) {
  TangentBasis restricted = constraint_nullspace(pipe.tangent_basis(k), kind);
  return fit_restricted(restricted, pipe.polytope().d, obs, kind);
}

// Exact consistency solve; engaged for eps = 0.
std::optional<FitResult> fit_exact(TangentPipeline& pipe, int k,
                                   const std::vector<Observation>& obs,
                                   ConstraintKind kind) {
  const int d = pipe.polytope().d;
  TangentBasis restricted = constraint_nullspace(pipe.tangent_basis(k), kind);
  RationalMatrix A;
  RationalVector b;
  std::vector<std::vector<Polynomial>> fields = rescale_fields(restricted.fields);
  design_system(fields, obs, A, b);
  std::optional<RationalVector> c = solve_exact(A, b);
  if (!c) return std::nullopt;
  FitResult R;
  R.degree_used = k;
  R.constraint = kind;
  R.basis_fields = fields;
  std::vector<Rational> cq;
  for (Eigen::Index j = 0; j < c->size(); ++j) {
    R.coefficients.push_back(to_double((*c)(j)));
    cq.push_back((*c)(j));
  }
  R.field = combine_fields(fields, cq, d);
  finish_residuals(R, obs);
  require(R.exact, "exact fit must have zero residual");
  return R;
}

}  // namespace

std::vector<Polynomial> operator_polys(const std::vector<Polynomial>& field,
                                       ObsOp op, int comp, int d) {
  require(static_cast<int>(field.size()) == d, "field tuple has wrong arity");
  switch (op) {
    case ObsOp::value:
      return field;
    case ObsOp::divergence: {
      Polynomial div = Polynomial::zero(d);
      for (int q = 0; q < d; ++q) div += field[q].diff(q);
      return {div};
    }
    case ObsOp::curl2d:
      if (d != 2) throw ValidationError("curl2d observations require d = 2");
      return {field[1].diff(0) - field[0].diff(1)};
    case ObsOp::component:
      if (comp < 0 || comp >= d)
        throw ValidationError("component observation index out of range");
      return {field[comp]};
  }
  throw AlgebraError("unreachable operator kind");
}

RationalVector apply_operator(const std::vector<Polynomial>& field,
                              const Observation& o) {
  const int d = static_cast<int>(field.size());
  std::vector<Polynomial> polys = operator_polys(field, o.op, o.comp, d);
  RationalVector out(static_cast<Eigen::Index>(polys.size()));
  for (size_t i = 0; i < polys.size(); ++i)
    out(static_cast<Eigen::Index>(i)) = polys[i].eval(point_span(o.x));
  return out;
}

void check_observations(const Polytope& P, const std::vector<Observation>& obs,
                        bool allow_outside, std::ostream* log) {
  for (size_t s = 0; s < obs.size(); ++s) {
    const Observation& o = obs[s];
    if (o.x.size() != P.d)
      throw ValidationError("observation " + std::to_string(s + 1) +
                            ": point has wrong dimension");
    if (o.op == ObsOp::curl2d && P.d != 2)
      throw ValidationError("observation " + std::to_string(s + 1) +
                            ": curl2d requires d = 2");
    if (o.op == ObsOp::component && (o.comp < 0 || o.comp >= P.d))
      throw ValidationError("observation " + std::to_string(s + 1) +
                            ": component index out of range");
    Eigen::Index want = o.op == ObsOp::value ? P.d : 1;
    if (o.target.size() != want)
      throw ValidationError("observation " + std::to_string(s + 1) +
                            ": target has wrong length");
    std::vector<Rational> vals = facet_values(P, o.x);
    for (size_t i = 0; i < vals.size(); ++i) {
      if (vals[i] <= 0 || to_double(vals[i]) <= kOutsideTol) continue;
      std::string msg = "observation " + std::to_string(s + 1) +
                        " lies outside the domain: halfspace " +
                        std::to_string(i + 1) + " violated by " +
                        std::to_string(to_double(vals[i]));
      if (!allow_outside) throw OutsideDomainError(msg);
      if (log) *log << "warning: " << msg << "\n";
    }
  }
}

void design_system(const std::vector<std::vector<Polynomial>>& fields,
                   const std::vector<Observation>& obs, RationalMatrix& A,
                   RationalVector& b) {
  int d = fields.empty() ? -1 : static_cast<int>(fields[0].size());
  Eigen::Index rows = 0;
  for (const Observation& o : obs) {
    if (d < 0) d = static_cast<int>(o.x.size());
    rows += scalar_rows(o, d);
  }
  A = RationalMatrix::Zero(rows, static_cast<Eigen::Index>(fields.size()));
  b = RationalVector::Zero(rows);
  Eigen::Index row = 0;
  for (const Observation& o : obs) {
    int nr = scalar_rows(o, d);
    for (int r = 0; r < nr; ++r) b(row + r) = o.target(r);
    for (size_t j = 0; j < fields.size(); ++j) {
      RationalVector vals = apply_operator(fields[j], o);
      for (int r = 0; r < nr; ++r) A(row + r, static_cast<Eigen::Index>(j)) = vals(r);
    }
    row += nr;
  }
}

TangentBasis constraint_nullspace(const TangentBasis& basis, ConstraintKind kind) {
  if (kind == ConstraintKind::none) return basis;
  const int d = basis.d;
  const int n = basis.dim();
  std::vector<std::vector<Polynomial>> cps;
  cps.reserve(n);
  for (const auto& f : basis.fields) cps.push_back(constraint_polys(f, kind, d));

  std::vector<Monomial> monos = monomials_up_to_degree(d, basis.k);
  const int M = static_cast<int>(monos.size());
  auto row_of = [&monos](const Monomial& m) {
    for (size_t j = 0; j < monos.size(); ++j)
      if (monos[j] == m) return static_cast<int>(j);
    throw AlgebraError("constraint polynomial exceeds the degree bound");
  };
  const int npolys = n == 0 ? 0 : static_cast<int>(cps[0].size());
  RationalMatrix C = RationalMatrix::Zero(
      static_cast<Eigen::Index>(npolys) * M, static_cast<Eigen::Index>(n));
  for (int j = 0; j < n; ++j)
    for (int p = 0; p < npolys; ++p)
      for (const Term& t : cps[j][p].terms())
        C(static_cast<Eigen::Index>(p) * M + row_of(t.mono), j) = t.coef;

  TangentBasis out;
  out.k = basis.k;
  out.d = d;
  const bool with_pre =
      basis.homogeneous_preimages.size() == basis.fields.size();
  for (const RationalVector& w : nullspace_basis(C)) {
    std::vector<Polynomial> f(d, Polynomial::zero(d));
    for (int j = 0; j < n; ++j) {
      if (w(j) == 0) continue;
      for (int q = 0; q < d; ++q) f[q] += basis.fields[j][q] * w(j);
    }
    ModuleVector mv;
    mv.entries = std::move(f);
    out.fields.push_back(module_content_normalize(mv).entries);
    if (with_pre) {
      ModuleVector pre(basis.homogeneous_preimages[0].rank(),
                       basis.homogeneous_preimages[0].nvars());
      for (int j = 0; j < n; ++j)
        if (w(j) != 0) pre = pre + basis.homogeneous_preimages[j] * w(j);
      out.homogeneous_preimages.push_back(std::move(pre));
    }
  }
  return out;
}

FitResult fit_with_degree(TangentPipeline& pipe, int k,
                          const std::vector<Observation>& obs,
                          ConstraintKind kind, bool allow_outside,
                          std::ostream* log) {
  check_observations(pipe.polytope(), obs, allow_outside, log);
  return fit_core(pipe, k, obs, kind);
}

FitResult fit_with_degree(const Polytope& P, int k,
                          const std::vector<Observation>& obs,
                          ConstraintKind kind, bool allow_outside,
                          std::ostream* log) {
  TangentPipeline pipe(P);
  return fit_with_degree(pipe, k, obs, kind, allow_outside, log);
}

FitResult fit_with_basis(const Polytope& P, const TangentBasis& basis,
                         const std::vector<Observation>& obs,
                         ConstraintKind kind, bool allow_outside,
                         std::ostream* log) {
  check_observations(P, obs, allow_outside, log);
  TangentBasis restricted = constraint_nullspace(basis, kind);
  return fit_restricted(restricted, P.d, obs, kind);
}

FitResult fit_with_error_bound(const Polytope& P, double eps,
                               const std::vector<Observation>& obs,
                               ConstraintKind kind, std::optional<int> kmax,
                               bool allow_outside, std::ostream* log) {
  if (!(eps >= 0)) throw ValidationError("error bound must be non-negative");
  TangentPipeline pipe(P);
  check_observations(P, obs, allow_outside, log);

  bool value_only = true;
  for (const Observation& o : obs) value_only = value_only && o.op == ObsOp::value;
  int cap;
  if (kmax) {
    if (*kmax < 0) throw ValidationError("degree cap must be non-negative");
    cap = *kmax;
  } else if (value_only) {
    cap = obs.empty() ? 0
                      : 2 * (static_cast<int>(obs.size()) - 1) + P.facet_count();
  } else {
    throw ValidationError(
        "operator observations carry no termination guarantee: pass an explicit "
        "degree cap");
  }

  FitResult zero = zero_field_result(P.d, obs, kind);
  if (zero.error <= eps) return zero;

  std::optional<FitResult> best;
  for (int k = 0; k <= cap; ++k) {
    if (log) *log << "degree " << k << ": fitting\n";
    if (eps == 0.0) {
      std::optional<FitResult> ex = fit_exact(pipe, k, obs, kind);
      if (ex) return *ex;
    }
    FitResult R = fit_core(pipe, k, obs, kind);
    if (log) *log << "degree " << k << ": error " << R.error << "\n";
    if (eps > 0.0 && R.error <= eps) return R;
    if (!best || R.error < best->error) best = std::move(R);
  }
  if (!best) best = zero;
  best->converged = false;
  return *best;
}

std::vector<Polynomial> exact_interpolant(const Polytope& P,
                                          const std::vector<Observation>& obs) {
  const int d = P.d;
  for (size_t s = 0; s < obs.size(); ++s) {
    const Observation& o = obs[s];
    if (o.op != ObsOp::value)
      throw ValidationError("exact interpolation needs value observations");
    if (o.x.size() != d || o.target.size() != d)
      throw ValidationError("observation " + std::to_string(s + 1) +
                            ": wrong dimensions");
    for (size_t t = 0; t < s; ++t)
      if (obs[t].x == o.x)
        throw ValidationError("observations " + std::to_string(t + 1) + " and " +
                              std::to_string(s + 1) + " share a point");
  }

  // Tangency gate on boundary points, exact.
  std::vector<std::vector<Rational>> vals;
  for (size_t s = 0; s < obs.size(); ++s) {
    vals.push_back(facet_values(P, obs[s].x));
    for (size_t i = 0; i < vals[s].size(); ++i) {
      if (vals[s][i] > 0)
        throw OutsideDomainError("observation " + std::to_string(s + 1) +
                                 " lies outside the domain");
      if (vals[s][i] == 0) {
        Rational dot = 0;
        for (int q = 0; q < d; ++q)
          dot += P.halfspaces[i].normal(q) * obs[s].target(q);
        if (dot != 0)
          throw ValidationError(
              "observation " + std::to_string(s + 1) + " lies on facet " +
              std::to_string(i + 1) + " but its target is not tangent to it");
      }
    }
  }

  std::vector<Polynomial> xi(d, Polynomial::zero(d));
  for (size_t s = 0; s < obs.size(); ++s) {
    Polynomial bump = Polynomial::constant(d, 1);
    Rational scale = 1;
    for (size_t t = 0; t < obs.size(); ++t) {
      if (t == s) continue;
      Polynomial norm2 = Polynomial::zero(d);
      Rational at_s = 0;
      for (int q = 0; q < d; ++q) {
        Polynomial diffq = Polynomial::variable(d, q) -
                           Polynomial::constant(d, obs[t].x(q));
        norm2 += diffq * diffq;
        Rational c = obs[s].x(q) - obs[t].x(q);
        at_s += c * c;
      }
      bump *= norm2;
      scale *= at_s;  // nonzero: points are distinct
    }
    for (size_t i = 0; i < vals[s].size(); ++i)
      if (vals[s][i] != 0) {
        bump *= P.facet_poly(static_cast<int>(i));
        scale *= vals[s][i];
      }
    Rational inv = Rational(1) / scale;
    for (int q = 0; q < d; ++q) {
      if (obs[s].target(q) == 0) continue;
      xi[q] += bump * (inv * obs[s].target(q));
    }
  }
  return xi;
}

FitResult interpolation_result(const Polytope& P,
                               const std::vector<Observation>& obs) {
  FitResult R;
  R.field = exact_interpolant(P, obs);
  R.degree_used = 0;
  for (const Polynomial& p : R.field)
    R.degree_used = std::max(R.degree_used, p.degree());
  finish_residuals(R, obs);
  require(R.exact, "interpolant must reproduce every observation");
  return R;
}

}  // namespace tangentfit
