#pragma once

#include <optional>
#include <ostream>
#include <vector>

#include "tangentfit/arrangement.hpp"
#include "tangentfit/groebner.hpp"

namespace tangentfit {

struct TangentBasis {
  int k = 0;
  int d = 0;
  // Linearly independent d-tuples over x_1..x_d, each entry of degree <= k;
  // every member is tangent to every facet.
  std::vector<std::vector<Polynomial>> fields;
  // The degree-k syzygies the fields came from (cone ring, rank d+1). Empty
  // for the unconstrained m=0 domain, which has no syzygy stage.
  std::vector<ModuleVector> homogeneous_preimages;

  int dim() const { return static_cast<int>(fields.size()); }
};

// Caches the cone, Jacobian tuple, syzygy generators and free resolution of
// one validated polytope so repeated degree queries reuse the algebra.
class TangentPipeline {
 public:
  explicit TangentPipeline(Polytope P, bool allow_nonessential = false,
                           std::ostream* trace = nullptr);

  const Polytope& polytope() const { return P_; }
  const ConeArrangement& cone() const { return cone_; }
  const JacobianTuple& jac() const { return jac_; }
  int m() const { return P_.facet_count(); }
  // m == 0: no boundary, every polynomial field qualifies.
  bool trivial() const { return trivial_; }

  const SyzygyTuple& syzygies();
  const FreeResolution& resolution();
  // Degrees of the syzygy generators measured on their entries (graded degree
  // minus the common degree m of the Jacobian partials).
  std::vector<int> generator_entry_degrees();

  // R-basis of the homogeneous component of Syz(J(Q)) whose entries have
  // degree k: generator multiples by complementary-degree monomials, thinned
  // to a maximal independent subset by exact elimination (pivot columns
  // ordered by decreasing monomial, then component).
  std::vector<ModuleVector> syzygy_degree_component(int k);

  TangentBasis tangent_basis(int k);
  long dimension_by_resolution(int k);

 private:
  Polytope P_;
  bool trivial_ = false;
  ConeArrangement cone_;
  JacobianTuple jac_;
  MonomialOrder cone_ord_;
  std::ostream* trace_ = nullptr;
  std::optional<SyzygyTuple> syz_;
  std::optional<FreeResolution> res_;
};

// Subtracts (g_0/x_0) * (x_0,...,x_d) so the 0-th entry vanishes while the
// syzygy relation is preserved up to the Euler field. Requires x_0 | g_0.
ModuleVector psi_map(const ModuleVector& G);

TangentBasis tangent_basis(const Polytope& P, int k);
long dimension_by_resolution(const Polytope& P, int k);

// Independent construction bypassing the syzygy machinery: generic degree-<=k
// coefficients, one exact linear condition per facet and residue monomial.
TangentBasis oracle_tangent_basis(const Polytope& P, int k);

// One row per field; columns run over (component, monomial of degree <= k).
RationalMatrix field_coeff_matrix(
    const std::vector<std::vector<Polynomial>>& fields, int d, int k);

bool span_contains(const std::vector<std::vector<Polynomial>>& hay,
                   const std::vector<Polynomial>& needle, int d, int k);

struct SpanComparison {
  bool equal = false;
  long dim_a = 0, dim_b = 0;
  // When unequal: a field on one side missing from the other side's span.
  std::optional<std::vector<Polynomial>> witness;
  bool witness_from_a = false;
};

SpanComparison compare_spans(const std::vector<std::vector<Polynomial>>& a,
                             const std::vector<std::vector<Polynomial>>& b,
                             int d, int k);

}  // namespace tangentfit
