#pragma once

#include "tangentfit/linalg.hpp"

namespace tangentfit {

enum class LpStatus { Optimal, Unbounded, Infeasible };

struct LpResult {
  LpStatus status = LpStatus::Infeasible;
  Rational value;
  RationalVector point;  // an optimal point when status == Optimal
};

// Exact rational two-phase simplex with Bland's rule:
// maximize c.x subject to A x <= b, x free.
LpResult lp_maximize(const RationalMatrix& A, const RationalVector& b,
                     const RationalVector& c);

}  // namespace tangentfit
