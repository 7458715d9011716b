#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "tangentfit/fitting.hpp"

namespace tangentfit {

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

// {"d": int, "halfspaces": [{"normal": ["p/q" | number, ...],
//                            "offset": "p/q" | number}]}
// Float entries are replaced by their best rational approximation with
// denominator <= max_denominator; every replacement is logged.
Polytope polytope_from_json(const std::string& text, long max_denominator = 1000000,
                            std::ostream* log = nullptr);
std::string polytope_to_json(const Polytope& P);
Polytope load_polytope(const std::string& path, long max_denominator = 1000000,
                       std::ostream* log = nullptr);

// {"observations": [{"x": [...], "op": "value|div|curl2d|component",
//                    "comp": int (component only), "target": [...] | scalar}]}
// Float coordinates and targets become exact dyadic rationals.
std::vector<Observation> observations_from_json(const std::string& text);
std::vector<Observation> load_observations(const std::string& path);
std::string observations_to_json(const std::vector<Observation>& obs);

// {"k": int, "dim": int, "fields": [[poly, ..., poly], ...]} with each poly a
// list of {"exps": [...], "coef": "p/q"}. d disambiguates an empty basis.
std::string basis_to_json(const TangentBasis& B);
TangentBasis basis_from_json(const std::string& text, int d);
void save_basis(const std::string& path, const TangentBasis& B);
TangentBasis load_basis(const std::string& path, int d);

std::string fit_to_json(const FitResult& R);
// Reads back just the fitted field of a fit JSON file.
std::vector<Polynomial> field_from_fit_json(const std::string& text, int d);

// Lattice of res points per axis over the exact bounding box, rows kept only
// when every h_i(x) <= 0 holds exactly. Returns the number of emitted points.
// Unbounded directions are clamped to [-10, 10] with a warning on log.
long write_grid_csv(std::ostream& out, const Polytope& P,
                    const std::vector<Polynomial>& field, int res,
                    std::ostream* log = nullptr);

const char* to_string(ConstraintKind kind);
ConstraintKind constraint_from_string(const std::string& s);

}  // namespace tangentfit
