#include "tangentfit/monomial.hpp"

#include <algorithm>
#include <numeric>

namespace tangentfit {

int structural_compare(const Monomial& a, const Monomial& b) {
  require(a.n == b.n, "monomial compare: variable count mismatch");
  int da = a.degree(), db = b.degree();
  if (da != db) return da < db ? -1 : 1;
  for (int i = a.n - 1; i >= 0; --i) {
    int diff = a.e[i] - b.e[i];
    if (diff != 0) return diff < 0 ? 1 : -1;
  }
  return 0;
}

MonomialOrder MonomialOrder::grevlex(int nvars) {
  MonomialOrder o;
  o.kind = Kind::grevlex;
  o.perm.resize(nvars);
  std::iota(o.perm.begin(), o.perm.end(), 0);
  return o;
}

MonomialOrder MonomialOrder::grlex(int nvars) {
  MonomialOrder o = grevlex(nvars);
  o.kind = Kind::grlex;
  return o;
}

MonomialOrder MonomialOrder::grevlex_x0_last(int nvars) {
  MonomialOrder o;
  o.kind = Kind::grevlex;
  o.perm.reserve(nvars);
  for (int i = 1; i < nvars; ++i) o.perm.push_back(i);
  o.perm.push_back(0);
  return o;
}

int MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
  require(a.n == b.n && a.n == nvars(), "monomial compare: variable count mismatch");
  int da = a.degree(), db = b.degree();
  if (da != db) return da < db ? -1 : 1;
  if (kind == Kind::grlex) {
    for (size_t p = 0; p < perm.size(); ++p) {
      int diff = a.e[perm[p]] - b.e[perm[p]];
      if (diff != 0) return diff > 0 ? 1 : -1;
    }
    return 0;
  }
  for (size_t p = perm.size(); p-- > 0;) {
    int diff = a.e[perm[p]] - b.e[perm[p]];
    if (diff != 0) return diff < 0 ? 1 : -1;
  }
  return 0;
}

namespace {
void enumerate(int nvars, int var, int remaining, Monomial& cur,
               std::vector<Monomial>& out) {
  if (var == nvars - 1) {
    cur.set(var, remaining);
    out.push_back(cur);
    cur.set(var, 0);
    return;
  }
  for (int k = remaining; k >= 0; --k) {
    cur.set(var, k);
    enumerate(nvars, var + 1, remaining - k, cur, out);
  }
  cur.set(var, 0);
}
}  // namespace

std::vector<Monomial> monomials_of_degree(int nvars, int deg) {
  require(nvars >= 1 && nvars <= kMaxVars, "monomial enumeration: bad variable count");
  require(deg >= 0, "monomial enumeration: negative degree");
  std::vector<Monomial> out;
  Monomial cur(nvars);
  enumerate(nvars, 0, deg, cur, out);
  return out;
}

std::vector<Monomial> monomials_up_to_degree(int nvars, int deg) {
  std::vector<Monomial> out;
  for (int k = deg; k >= 0; --k) {
    auto part = monomials_of_degree(nvars, k);
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

std::string to_string(const Monomial& m, const std::vector<std::string>& names) {
  std::string s;
  for (int i = 0; i < m.nvars(); ++i) {
    if (m[i] == 0) continue;
    if (!s.empty()) s += "*";
    s += names[i];
    if (m[i] > 1) s += "^" + std::to_string(m[i]);
  }
  return s.empty() ? "1" : s;
}

std::vector<std::string> cone_var_names(int nvars) {
  std::vector<std::string> v;
  for (int i = 0; i < nvars; ++i) v.push_back("x_" + std::to_string(i));
  return v;
}

std::vector<std::string> base_var_names(int nvars) {
  std::vector<std::string> v;
  for (int i = 0; i < nvars; ++i) v.push_back("x_" + std::to_string(i + 1));
  return v;
}

}  // namespace tangentfit
