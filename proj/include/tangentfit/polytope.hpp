#pragma once

#include <string>
#include <vector>

#include "tangentfit/linalg.hpp"
#include "tangentfit/polynomial.hpp"
#include "tangentfit/simplex.hpp"

namespace tangentfit {

// One closed halfspace h(x) = <normal, x> + offset <= 0; the interior of the
// domain is on the non-positive side.
struct Halfspace {
  RationalVector normal;
  Rational offset;
};

struct Polytope {
  int d = 0;
  std::vector<Halfspace> halfspaces;

  int facet_count() const { return static_cast<int>(halfspaces.size()); }
  // h_i as an affine polynomial in x_1..x_d (nvars = d).
  Polynomial facet_poly(int i) const;
};

struct ValidationReport {
  bool ok = true;
  std::vector<int> redundant;         // 0-based indices into halfspaces
  std::vector<std::string> problems;  // diagnostics, 1-based facet numbering
  std::string summary() const;
};

// Structural checks (dimension bounds, nonzero normals, proportional pairs),
// then exact LPs for interior nonemptiness and, when requested, per-halfspace
// redundancy: halfspace j is redundant iff max h_j over the others is <= 0.
ValidationReport validate_polytope(const Polytope& P, bool check_redundancy = true);

// Throws ValidationError carrying the report summary when anything fails.
void require_valid(const Polytope& P, bool check_redundancy = true);

std::vector<Rational> facet_values(const Polytope& P, const RationalVector& x);

bool contains(const Polytope& P, const RationalVector& x);

}  // namespace tangentfit
