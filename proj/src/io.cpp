#include "tangentfit/io.hpp"

#include <fstream>
#include <iomanip>
#include <sstream>

#include "json.hpp"
#include "tangentfit/errors.hpp"

namespace tangentfit {

using nlohmann::json;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ValidationError("cannot open file: " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ValidationError("cannot write file: " + path);
  out << content;
}

namespace {

json parse_json(const std::string& text, const char* what) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw ValidationError(std::string(what) + ": " + e.what());
  }
}

// Strings stay exact; integers are exact; floats are rationalized when a
// denominator bound is given and taken as exact dyadic values otherwise.
Rational rational_from_json(const json& v, const char* what, long max_den,
                            std::ostream* log) {
  if (v.is_string()) {
    try {
      return parse_rational(v.get<std::string>());
    } catch (const AlgebraError& e) {
      throw ValidationError(std::string(what) + ": " + e.what());
    }
  }
  if (v.is_number_integer()) return Rational(v.get<long>());
  if (v.is_number_float()) {
    double x = v.get<double>();
    if (max_den <= 0) return exact_from_double(x);
    Rational r = rationalize(x, max_den);
    if (log)
      *log << "rationalized " << std::setprecision(17) << x << " -> "
           << to_string(r) << " (denominator " << r.get_den().get_str() << ")\n";
    return r;
  }
  throw ValidationError(std::string(what) + ": expected a number or \"p/q\" string");
}

json poly_to_json(const Polynomial& p) {
  json terms = json::array();
  for (const Term& t : p.terms()) {
    json exps = json::array();
    for (int i = 0; i < p.nvars(); ++i) exps.push_back(t.mono[i]);
    terms.push_back(json{{"exps", exps}, {"coef", to_string(t.coef)}});
  }
  return terms;
}

Polynomial poly_from_json(const json& j, int nvars, const char* what) {
  if (!j.is_array()) throw ValidationError(std::string(what) + ": expected a term list");
  std::vector<Term> terms;
  for (const json& tj : j) {
    const json& exps = tj.at("exps");
    if (static_cast<int>(exps.size()) != nvars)
      throw ValidationError(std::string(what) + ": exponent list has wrong length");
    Monomial m(nvars);
    for (int i = 0; i < nvars; ++i) {
      int e = exps[i].get<int>();
      if (e < 0) throw ValidationError(std::string(what) + ": negative exponent");
      m.set(i, e);
    }
    terms.push_back({m, rational_from_json(tj.at("coef"), what, 0, nullptr)});
  }
  return Polynomial::from_terms(nvars, std::move(terms));
}

}  // namespace

Polytope polytope_from_json(const std::string& text, long max_denominator,
                            std::ostream* log) {
  json j = parse_json(text, "polytope");
  try {
    Polytope P;
    P.d = j.at("d").get<int>();
    if (P.d < 1 || P.d + 1 > kMaxVars)
      throw ValidationError("polytope: dimension out of range");
    for (const json& hj : j.at("halfspaces")) {
      Halfspace h;
      const json& nj = hj.at("normal");
      h.normal = RationalVector(static_cast<Eigen::Index>(nj.size()));
      for (size_t q = 0; q < nj.size(); ++q)
        h.normal(static_cast<Eigen::Index>(q)) =
            rational_from_json(nj[q], "polytope normal", max_denominator, log);
      h.offset = rational_from_json(hj.at("offset"), "polytope offset",
                                    max_denominator, log);
      P.halfspaces.push_back(std::move(h));
    }
    return P;
  } catch (const json::exception& e) {
    throw ValidationError(std::string("polytope: ") + e.what());
  }
}

std::string polytope_to_json(const Polytope& P) {
  json hs = json::array();
  for (const Halfspace& h : P.halfspaces) {
    json normal = json::array();
    for (Eigen::Index q = 0; q < h.normal.size(); ++q)
      normal.push_back(to_string(h.normal(q)));
    hs.push_back(json{{"normal", normal}, {"offset", to_string(h.offset)}});
  }
  return json{{"d", P.d}, {"halfspaces", hs}}.dump(2) + "\n";
}

Polytope load_polytope(const std::string& path, long max_denominator,
                       std::ostream* log) {
  return polytope_from_json(read_file(path), max_denominator, log);
}

std::vector<Observation> observations_from_json(const std::string& text) {
  json j = parse_json(text, "observations");
  std::vector<Observation> out;
  try {
    for (const json& oj : j.at("observations")) {
      Observation o;
      const json& xj = oj.at("x");
      o.x = RationalVector(static_cast<Eigen::Index>(xj.size()));
      for (size_t q = 0; q < xj.size(); ++q)
        o.x(static_cast<Eigen::Index>(q)) =
            rational_from_json(xj[q], "observation point", 0, nullptr);
      std::string op = oj.value("op", "value");
      if (op == "value")
        o.op = ObsOp::value;
      else if (op == "div")
        o.op = ObsOp::divergence;
      else if (op == "curl2d")
        o.op = ObsOp::curl2d;
      else if (op == "component")
        o.op = ObsOp::component;
      else
        throw ValidationError("observation: unknown op '" + op + "'");
      if (o.op == ObsOp::component) o.comp = oj.at("comp").get<int>();
      const json& tj = oj.at("target");
      if (o.op == ObsOp::value) {
        if (!tj.is_array())
          throw ValidationError("observation: value target must be a vector");
        o.target = RationalVector(static_cast<Eigen::Index>(tj.size()));
        for (size_t q = 0; q < tj.size(); ++q)
          o.target(static_cast<Eigen::Index>(q)) =
              rational_from_json(tj[q], "observation target", 0, nullptr);
      } else {
        o.target = RationalVector(1);
        o.target(0) = rational_from_json(tj, "observation target", 0, nullptr);
      }
      out.push_back(std::move(o));
    }
  } catch (const json::exception& e) {
    throw ValidationError(std::string("observations: ") + e.what());
  }
  return out;
}

std::vector<Observation> load_observations(const std::string& path) {
  return observations_from_json(read_file(path));
}

std::string observations_to_json(const std::vector<Observation>& obs) {
  json arr = json::array();
  for (const Observation& o : obs) {
    json oj;
    json xj = json::array();
    for (Eigen::Index q = 0; q < o.x.size(); ++q) xj.push_back(to_string(o.x(q)));
    oj["x"] = xj;
    switch (o.op) {
      case ObsOp::value: oj["op"] = "value"; break;
      case ObsOp::divergence: oj["op"] = "div"; break;
      case ObsOp::curl2d: oj["op"] = "curl2d"; break;
      case ObsOp::component:
        oj["op"] = "component";
        oj["comp"] = o.comp;
        break;
    }
    if (o.op == ObsOp::value) {
      json tj = json::array();
      for (Eigen::Index q = 0; q < o.target.size(); ++q)
        tj.push_back(to_string(o.target(q)));
      oj["target"] = tj;
    } else {
      oj["target"] = to_string(o.target(0));
    }
    arr.push_back(std::move(oj));
  }
  return json{{"observations", arr}}.dump(2) + "\n";
}

std::string basis_to_json(const TangentBasis& B) {
  json fields = json::array();
  for (const auto& f : B.fields) {
    json tuple = json::array();
    for (const Polynomial& p : f) tuple.push_back(poly_to_json(p));
    fields.push_back(std::move(tuple));
  }
  return json{{"k", B.k}, {"dim", B.dim()}, {"fields", fields}}.dump(2) + "\n";
}

TangentBasis basis_from_json(const std::string& text, int d) {
  json j = parse_json(text, "basis");
  try {
    TangentBasis B;
    B.k = j.at("k").get<int>();
    B.d = d;
    for (const json& fj : j.at("fields")) {
      if (static_cast<int>(fj.size()) != d)
        throw ValidationError("basis: field tuple has wrong arity");
      std::vector<Polynomial> f;
      for (const json& pj : fj) f.push_back(poly_from_json(pj, d, "basis field"));
      B.fields.push_back(std::move(f));
    }
    if (j.at("dim").get<int>() != B.dim())
      throw ValidationError("basis: dim does not match the field count");
    return B;
  } catch (const json::exception& e) {
    throw ValidationError(std::string("basis: ") + e.what());
  }
}

void save_basis(const std::string& path, const TangentBasis& B) {
  write_file(path, basis_to_json(B));
}

TangentBasis load_basis(const std::string& path, int d) {
  return basis_from_json(read_file(path), d);
}

std::string fit_to_json(const FitResult& R) {
  json field = json::array();
  for (const Polynomial& p : R.field) field.push_back(poly_to_json(p));
  json basis = json::array();
  for (const auto& f : R.basis_fields) {
    json tuple = json::array();
    for (const Polynomial& p : f) tuple.push_back(poly_to_json(p));
    basis.push_back(std::move(tuple));
  }
  return json{{"degree", R.degree_used},
              {"constraint", to_string(R.constraint)},
              {"coefficients", R.coefficients},
              {"basis_dim", static_cast<int>(R.basis_fields.size())},
              {"field", field},
              {"error", R.error},
              {"residuals", R.residuals},
              {"converged", R.converged},
              {"exact", R.exact}}
             .dump(2) +
         "\n";
}

std::vector<Polynomial> field_from_fit_json(const std::string& text, int d) {
  json j = parse_json(text, "fit result");
  try {
    std::vector<Polynomial> field;
    for (const json& pj : j.at("field"))
      field.push_back(poly_from_json(pj, d, "fit field"));
    if (static_cast<int>(field.size()) != d)
      throw ValidationError("fit result: field tuple has wrong arity");
    return field;
  } catch (const json::exception& e) {
    throw ValidationError(std::string("fit result: ") + e.what());
  }
}

long write_grid_csv(std::ostream& out, const Polytope& P,
                    const std::vector<Polynomial>& field, int res,
                    std::ostream* log) {
  if (res < 1) throw ValidationError("grid resolution must be at least 1");
  require(static_cast<int>(field.size()) == P.d, "field tuple has wrong arity");
  const int d = P.d;
  const int m = P.facet_count();

  RationalMatrix A(m, d);
  RationalVector b(m);
  for (int i = 0; i < m; ++i) {
    for (int q = 0; q < d; ++q) A(i, q) = P.halfspaces[i].normal(q);
    b(i) = -P.halfspaces[i].offset;
  }
  std::vector<Rational> lo(d), hi(d);
  for (int q = 0; q < d; ++q) {
    RationalVector c = RationalVector::Zero(d);
    c(q) = 1;
    LpResult up = lp_maximize(A, b, c);
    c(q) = -1;
    LpResult down = lp_maximize(A, b, c);
    if (up.status == LpStatus::Optimal) {
      hi[q] = up.value;
    } else {
      hi[q] = 10;
      if (log) *log << "warning: unbounded in +x_" << q + 1 << ", clamping to 10\n";
    }
    if (down.status == LpStatus::Optimal) {
      lo[q] = -down.value;
    } else {
      lo[q] = -10;
      if (log) *log << "warning: unbounded in -x_" << q + 1 << ", clamping to -10\n";
    }
  }

  out << std::setprecision(17);
  for (int q = 0; q < d; ++q) out << "x_" << q + 1 << ",";
  for (int q = 0; q < d; ++q) out << "f_" << q + 1 << (q + 1 < d ? "," : "\n");

  long count = 0;
  std::vector<int> idx(d, 0);
  RationalVector x(d);
  while (true) {
    for (int q = 0; q < d; ++q) {
      Rational t = res == 1 ? Rational(1, 2) : Rational(idx[q], res - 1);
      t.canonicalize();
      x(q) = lo[q] + (hi[q] - lo[q]) * t;
    }
    if (contains(P, x)) {
      ++count;
      for (int q = 0; q < d; ++q) out << to_double(x(q)) << ",";
      std::span<const Rational> xs(x.data(), static_cast<size_t>(x.size()));
      for (int q = 0; q < d; ++q)
        out << to_double(field[q].eval(xs)) << (q + 1 < d ? "," : "\n");
    }
    int q = 0;
    while (q < d && ++idx[q] == res) idx[q++] = 0;
    if (q == d) break;
  }
  if (count == 0 && log) *log << "warning: no lattice point lies in the domain\n";
  return count;
}

const char* to_string(ConstraintKind kind) {
  switch (kind) {
    case ConstraintKind::none: return "none";
    case ConstraintKind::divergence_free: return "div";
    case ConstraintKind::rotation_free: return "rot";
    case ConstraintKind::harmonic: return "harm";
  }
  return "none";
}

ConstraintKind constraint_from_string(const std::string& s) {
  if (s == "none") return ConstraintKind::none;
  if (s == "div") return ConstraintKind::divergence_free;
  if (s == "rot") return ConstraintKind::rotation_free;
  if (s == "harm") return ConstraintKind::harmonic;
  throw ValidationError("unknown constraint kind '" + s + "' (use none, div, rot, harm)");
}

}  // namespace tangentfit
