#pragma once

#include <stdexcept>
#include <string>

namespace tangentfit {

// Thrown when an input polytope fails validation (zero normal, redundant
// halfspace, empty interior, unsupported dimension, ...).
struct ValidationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Thrown when an observation lies outside the domain.
struct OutsideDomainError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Thrown when a degree-escalation loop exhausts its cap without converging.
struct DegreeCapError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Violated precondition or internal invariant of the algebra kernels.
struct AlgebraError : std::logic_error {
  using std::logic_error::logic_error;
};

inline void require(bool cond, const std::string& msg) {
  if (!cond) throw AlgebraError(msg);
}

}  // namespace tangentfit
