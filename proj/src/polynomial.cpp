#include "tangentfit/polynomial.hpp"

#include <algorithm>
#include <map>

namespace tangentfit {

namespace {
struct StructuralGreater {
  bool operator()(const Monomial& a, const Monomial& b) const {
    return structural_compare(a, b) > 0;
  }
};
}  // namespace

Polynomial normalize_terms(int nvars, std::vector<Term>&& terms) {
  std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) {
    return structural_compare(a.mono, b.mono) > 0;
  });
  Polynomial p(nvars);
  for (auto& t : terms) {
    if (t.coef == 0) continue;
    if (!p.terms_.empty() && p.terms_.back().mono == t.mono) {
      p.terms_.back().coef += t.coef;
      if (p.terms_.back().coef == 0) p.terms_.pop_back();
    } else {
      p.terms_.push_back(std::move(t));
    }
  }
  return p;
}

Polynomial Polynomial::constant(int nvars, const Rational& c) {
  Polynomial p(nvars);
  if (c != 0) p.terms_.push_back({Monomial(nvars), c});
  return p;
}

Polynomial Polynomial::variable(int nvars, int i) {
  require(i >= 0 && i < nvars, "variable index out of range");
  Monomial m(nvars);
  m.set(i, 1);
  return monomial(m, Rational(1));
}

Polynomial Polynomial::monomial(const Monomial& m, const Rational& c) {
  Polynomial p(m.nvars());
  if (c != 0) p.terms_.push_back({m, c});
  return p;
}

Polynomial Polynomial::from_terms(int nvars, std::vector<Term> terms) {
  return normalize_terms(nvars, std::move(terms));
}

Rational Polynomial::coeff(const Monomial& m) const {
  for (const auto& t : terms_)
    if (t.mono == m) return t.coef;
  return Rational(0);
}

bool Polynomial::is_homogeneous() const {
  if (terms_.empty()) return true;
  int d = terms_.front().mono.degree();
  for (const auto& t : terms_)
    if (t.mono.degree() != d) return false;
  return true;
}

Polynomial Polynomial::operator-() const {
  Polynomial p(nvars_);
  p.terms_ = terms_;
  for (auto& t : p.terms_) t.coef = -t.coef;
  return p;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  require(nvars_ == o.nvars_, "polynomial add: variable count mismatch");
  Polynomial p(nvars_);
  p.terms_.reserve(terms_.size() + o.terms_.size());
  size_t i = 0, j = 0;
  while (i < terms_.size() && j < o.terms_.size()) {
    int c = structural_compare(terms_[i].mono, o.terms_[j].mono);
    if (c > 0) {
      p.terms_.push_back(terms_[i++]);
    } else if (c < 0) {
      p.terms_.push_back(o.terms_[j++]);
    } else {
      Rational s = terms_[i].coef + o.terms_[j].coef;
      if (s != 0) p.terms_.push_back({terms_[i].mono, std::move(s)});
      ++i;
      ++j;
    }
  }
  for (; i < terms_.size(); ++i) p.terms_.push_back(terms_[i]);
  for (; j < o.terms_.size(); ++j) p.terms_.push_back(o.terms_[j]);
  return p;
}

Polynomial Polynomial::operator-(const Polynomial& o) const { return *this + (-o); }

Polynomial Polynomial::operator*(const Polynomial& o) const {
  require(nvars_ == o.nvars_, "polynomial mul: variable count mismatch");
  std::map<Monomial, Rational, StructuralGreater> acc;
  for (const auto& a : terms_)
    for (const auto& b : o.terms_) {
      Monomial m = a.mono * b.mono;
      auto [it, fresh] = acc.try_emplace(m, Rational(0));
      it->second += a.coef * b.coef;
    }
  Polynomial p(nvars_);
  for (auto& [m, c] : acc)
    if (c != 0) p.terms_.push_back({m, std::move(c)});
  return p;
}

Polynomial Polynomial::operator*(const Rational& c) const {
  if (c == 0) return Polynomial(nvars_);
  Polynomial p(nvars_);
  p.terms_ = terms_;
  for (auto& t : p.terms_) t.coef *= c;
  return p;
}

Polynomial Polynomial::times_term(const Monomial& m, const Rational& c) const {
  if (c == 0) return Polynomial(nvars_);
  Polynomial p(nvars_);
  p.terms_.reserve(terms_.size());
  for (const auto& t : terms_) p.terms_.push_back({t.mono * m, t.coef * c});
  // Multiplying by a fixed monomial preserves the structural order.
  return p;
}

const Term& Polynomial::leading_term(const MonomialOrder& ord) const {
  require(!terms_.empty(), "leading term of the zero polynomial");
  const Term* best = &terms_[0];
  for (size_t i = 1; i < terms_.size(); ++i)
    if (ord.compare(terms_[i].mono, best->mono) > 0) best = &terms_[i];
  return *best;
}

Polynomial Polynomial::diff(int var) const {
  require(var >= 0 && var < nvars_, "diff: variable index out of range");
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) {
    int e = t.mono[var];
    if (e == 0) continue;
    Monomial m = t.mono;
    m.set(var, e - 1);
    out.push_back({m, t.coef * e});
  }
  return normalize_terms(nvars_, std::move(out));
}

Rational Polynomial::eval(std::span<const Rational> x) const {
  require(static_cast<int>(x.size()) == nvars_, "eval: point dimension mismatch");
  Rational acc(0);
  for (const auto& t : terms_) {
    Rational v = t.coef;
    for (int i = 0; i < nvars_; ++i)
      for (int k = 0; k < t.mono[i]; ++k) v *= x[i];
    acc += v;
  }
  return acc;
}

double Polynomial::eval(std::span<const double> x) const {
  require(static_cast<int>(x.size()) == nvars_, "eval: point dimension mismatch");
  double acc = 0;
  for (const auto& t : terms_) {
    double v = to_double(t.coef);
    for (int i = 0; i < nvars_; ++i)
      for (int k = 0; k < t.mono[i]; ++k) v *= x[i];
    acc += v;
  }
  return acc;
}

Polynomial homogenize(const Polynomial& f, int k) {
  require(f.nvars() + 1 <= kMaxVars, "homogenize: too many variables");
  require(f.is_zero() || k >= f.degree(), "homogenize: target degree below deg f");
  std::vector<Term> out;
  out.reserve(f.term_count());
  for (const auto& t : f.terms()) {
    Monomial m(f.nvars() + 1);
    m.set(0, k - t.mono.degree());
    for (int i = 0; i < f.nvars(); ++i) m.set(i + 1, t.mono[i]);
    out.push_back({m, t.coef});
  }
  return normalize_terms(f.nvars() + 1, std::move(out));
}

Polynomial dehomogenize(const Polynomial& fhat) {
  require(fhat.nvars() >= 1, "dehomogenize: no variables");
  std::vector<Term> out;
  out.reserve(fhat.term_count());
  for (const auto& t : fhat.terms()) {
    Monomial m(fhat.nvars() - 1);
    for (int i = 1; i < fhat.nvars(); ++i) m.set(i - 1, t.mono[i]);
    out.push_back({m, t.coef});
  }
  return normalize_terms(fhat.nvars() - 1, std::move(out));
}

Polynomial reduce_mod_linear(const Polynomial& f, const Polynomial& h, int pivot) {
  require(h.degree() <= 1 && !h.is_zero(), "reduce_mod_linear: modulus must be linear");
  require(pivot >= 0 && pivot < f.nvars(), "reduce_mod_linear: pivot out of range");
  Monomial xp(h.nvars());
  xp.set(pivot, 1);
  Rational c = h.coeff(xp);
  require(c != 0, "reduce_mod_linear: pivot coefficient is zero");
  // x_pivot = rest where rest = -(h - c*x_pivot)/c.
  Polynomial rest = (Polynomial::monomial(xp, c) - h) * (Rational(1) / c);
  int max_e = 0;
  for (const auto& t : f.terms()) max_e = std::max(max_e, t.mono[pivot]);
  std::vector<Polynomial> pow;
  pow.push_back(Polynomial::constant(f.nvars(), Rational(1)));
  for (int k = 1; k <= max_e; ++k) pow.push_back(pow.back() * rest);
  Polynomial out(f.nvars());
  for (const auto& t : f.terms()) {
    Monomial m = t.mono;
    int e = m[pivot];
    m.set(pivot, 0);
    out += pow[e].times_term(m, t.coef);
  }
  return out;
}

Polynomial reduce_mod_linear(const Polynomial& f, const Polynomial& h) {
  for (int i = 0; i < h.nvars(); ++i) {
    Monomial xi(h.nvars());
    xi.set(i, 1);
    if (h.coeff(xi) != 0) return reduce_mod_linear(f, h, i);
  }
  throw AlgebraError("reduce_mod_linear: modulus has no linear part");
}

std::optional<Polynomial> try_divide(const Polynomial& f, const Polynomial& g) {
  require(!g.is_zero(), "try_divide: division by zero polynomial");
  MonomialOrder ord = MonomialOrder::grevlex(f.nvars());
  Polynomial rem = f;
  Polynomial quot(f.nvars());
  const Term& lg = g.leading_term(ord);
  while (!rem.is_zero()) {
    const Term& lr = rem.leading_term(ord);
    if (!lg.mono.divides(lr.mono)) return std::nullopt;
    Monomial q = lr.mono.quotient_by(lg.mono);
    Rational c = lr.coef / lg.coef;
    quot += Polynomial::monomial(q, c);
    rem -= g.times_term(q, c);
  }
  return quot;
}

Polynomial content_normalize(const Polynomial& f) {
  if (f.is_zero()) return f;
  Integer num_gcd(0), den_lcm(1);
  for (const auto& t : f.terms()) {
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), t.coef.get_num().get_mpz_t());
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), t.coef.get_den().get_mpz_t());
  }
  Rational content(num_gcd, den_lcm);
  content.canonicalize();
  if (f.terms().front().coef < 0) content = -content;
  return f * (Rational(1) / content);
}

std::string to_string(const Polynomial& f, const std::vector<std::string>& names) {
  if (f.is_zero()) return "0";
  std::string s;
  for (const auto& t : f.terms()) {
    Rational a = abs(t.coef);
    bool neg = t.coef < 0;
    if (s.empty()) {
      if (neg) s += "-";
    } else {
      s += neg ? " - " : " + ";
    }
    std::string ms = to_string(t.mono, names);
    if (a != 1 || ms == "1") {
      s += to_string(a);
      if (ms != "1") s += "*";
    }
    if (ms != "1") s += ms;
  }
  return s;
}

}  // namespace tangentfit
