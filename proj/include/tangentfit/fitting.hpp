#pragma once

#include <optional>
#include <ostream>
#include <vector>

#include "tangentfit/tangent_basis.hpp"

namespace tangentfit {

enum class ObsOp { value, divergence, curl2d, component };

struct Observation {
  RationalVector x;       // length d
  ObsOp op = ObsOp::value;
  int comp = -1;          // only for ObsOp::component
  RationalVector target;  // length d for value, length 1 for scalar operators
};

enum class ConstraintKind { none, divergence_free, rotation_free, harmonic };

struct FitResult {
  int degree_used = 0;
  ConstraintKind constraint = ConstraintKind::none;
  std::vector<double> coefficients;                   // per restricted basis field
  std::vector<std::vector<Polynomial>> basis_fields;  // restricted basis used
  std::vector<Polynomial> field;  // exact-coefficient d-tuple, sum c_j phi^j
  double error = 0.0;             // sum of squared residuals of `field`
  std::vector<double> residuals;  // squared residual per observation
  bool converged = true;
  bool exact = false;  // residuals vanish as exact rationals
};

// Scalar polynomials the operator extracts from a field: the d components for
// value, the divergence, the planar curl, or one chosen component.
std::vector<Polynomial> operator_polys(const std::vector<Polynomial>& field,
                                       ObsOp op, int comp, int d);

RationalVector apply_operator(const std::vector<Polynomial>& field,
                              const Observation& o);

// Shape/operator validation plus the containment gate: a point is outside
// when some h_i exceeds 1e-9; by default that throws OutsideDomainError,
// with allow_outside it only warns on `log`.
void check_observations(const Polytope& P, const std::vector<Observation>& obs,
                        bool allow_outside = false, std::ostream* log = nullptr);

// Exact stacked system: one row per scalar residual component, columns are
// the fields.
void design_system(const std::vector<std::vector<Polynomial>>& fields,
                   const std::vector<Observation>& obs, RationalMatrix& A,
                   RationalVector& b);

// Restricts to the subspace whose constraint polynomials vanish identically,
// by an exact nullspace over the coefficient representation.
TangentBasis constraint_nullspace(const TangentBasis& basis, ConstraintKind kind);

// Fit over an already computed basis (e.g. re-read from a basis file).
FitResult fit_with_basis(const Polytope& P, const TangentBasis& basis,
                         const std::vector<Observation>& obs,
                         ConstraintKind kind = ConstraintKind::none,
                         bool allow_outside = false, std::ostream* log = nullptr);

FitResult fit_with_degree(TangentPipeline& pipe, int k,
                          const std::vector<Observation>& obs,
                          ConstraintKind kind = ConstraintKind::none,
                          bool allow_outside = false, std::ostream* log = nullptr);
FitResult fit_with_degree(const Polytope& P, int k,
                          const std::vector<Observation>& obs,
                          ConstraintKind kind = ConstraintKind::none,
                          bool allow_outside = false, std::ostream* log = nullptr);

// Degree escalation from k = 0 until error <= eps or the cap is passed.
// Default cap 2(|O|-1)+m applies to value-only observations; operator
// observations need an explicit cap. eps = 0 switches the inner solve to an
// exact consistency test so termination does not hinge on float rounding.
FitResult fit_with_error_bound(const Polytope& P, double eps,
                               const std::vector<Observation>& obs,
                               ConstraintKind kind = ConstraintKind::none,
                               std::optional<int> kmax = std::nullopt,
                               bool allow_outside = false,
                               std::ostream* log = nullptr);

// Closed-form tangential interpolant through value observations: products of
// squared-distance bump factors times the facet forms missing at each point.
// Degree <= 2(|O|-1) + m. Boundary observations must have exactly tangent
// targets.
std::vector<Polynomial> exact_interpolant(const Polytope& P,
                                          const std::vector<Observation>& obs);

// exact_interpolant wrapped as a FitResult with verified zero residuals.
FitResult interpolation_result(const Polytope& P,
                               const std::vector<Observation>& obs);

}  // namespace tangentfit
