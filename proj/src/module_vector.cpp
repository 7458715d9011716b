#include "tangentfit/module_vector.hpp"

namespace tangentfit {

ModuleVector ModuleVector::operator+(const ModuleVector& o) const {
  require(rank() == o.rank(), "module add: rank mismatch");
  ModuleVector v = *this;
  for (int q = 0; q < rank(); ++q) v.entries[q] += o.entries[q];
  return v;
}

ModuleVector ModuleVector::operator-(const ModuleVector& o) const {
  require(rank() == o.rank(), "module sub: rank mismatch");
  ModuleVector v = *this;
  for (int q = 0; q < rank(); ++q) v.entries[q] -= o.entries[q];
  return v;
}

ModuleVector ModuleVector::operator-() const {
  ModuleVector v = *this;
  for (auto& p : v.entries) p = -p;
  return v;
}

ModuleVector ModuleVector::operator*(const Rational& c) const {
  ModuleVector v = *this;
  for (auto& p : v.entries) p = p * c;
  return v;
}

ModuleVector ModuleVector::times_poly(const Polynomial& p) const {
  ModuleVector v = *this;
  for (auto& q : v.entries) q = q * p;
  return v;
}

ModuleVector ModuleVector::times_term(const Monomial& m, const Rational& c) const {
  ModuleVector v = *this;
  for (auto& q : v.entries) q = q.times_term(m, c);
  return v;
}

Polynomial ModuleVector::dot(const std::vector<Polynomial>& F) const {
  require(F.size() == entries.size(), "module dot: rank mismatch");
  Polynomial acc(nvars());
  for (size_t q = 0; q < F.size(); ++q) acc += entries[q] * F[q];
  return acc;
}

ModuleVector ModuleVector::dot(const std::vector<ModuleVector>& T) const {
  require(T.size() == entries.size(), "module dot: rank mismatch");
  require(!T.empty(), "module dot: empty tuple");
  ModuleVector acc(T[0].rank(), nvars());
  for (size_t q = 0; q < T.size(); ++q)
    acc = acc + T[q].times_poly(entries[q]);
  return acc;
}

int ModuleVector::graded_degree(const std::vector<int>& shifts) const {
  require(shifts.size() == entries.size(), "graded degree: shift count mismatch");
  int deg = kNegInfDegree;
  for (size_t q = 0; q < entries.size(); ++q) {
    if (entries[q].is_zero()) continue;
    int dq = entries[q].degree() + shifts[q];
    if (deg == kNegInfDegree) deg = dq;
    require(deg == dq, "graded degree: entries disagree (not homogeneous)");
  }
  return deg;
}

bool ModuleVector::is_homogeneous(const std::vector<int>& shifts) const {
  if (shifts.size() != entries.size()) return false;
  int deg = kNegInfDegree;
  for (size_t q = 0; q < entries.size(); ++q) {
    if (entries[q].is_zero()) continue;
    if (!entries[q].is_homogeneous()) return false;
    int dq = entries[q].degree() + shifts[q];
    if (deg == kNegInfDegree) deg = dq;
    if (deg != dq) return false;
  }
  return true;
}

ModuleOrder ModuleOrder::pot(MonomialOrder base) {
  ModuleOrder o;
  o.kind_ = Kind::POT;
  o.base_ = std::move(base);
  return o;
}

ModuleOrder ModuleOrder::top(MonomialOrder base) {
  ModuleOrder o;
  o.kind_ = Kind::TOP;
  o.base_ = std::move(base);
  return o;
}

ModuleOrder ModuleOrder::schreyer(std::shared_ptr<const ModuleOrder> prev,
                                  std::vector<ModuleMonomial> leads) {
  require(prev != nullptr, "schreyer order: missing previous level");
  require(!leads.empty(), "schreyer order: empty inducing tuple");
  ModuleOrder o;
  o.kind_ = Kind::Schreyer;
  o.base_ = prev->base();
  o.prev_ = std::move(prev);
  o.leads_ = std::move(leads);
  return o;
}

const MonomialOrder& ModuleOrder::base() const { return base_; }

int ModuleOrder::compare(const ModuleMonomial& a, const ModuleMonomial& b) const {
  switch (kind_) {
    case Kind::POT: {
      if (a.comp != b.comp) return a.comp < b.comp ? 1 : -1;
      return base_.compare(a.mono, b.mono);
    }
    case Kind::TOP: {
      int c = base_.compare(a.mono, b.mono);
      if (c != 0) return c;
      if (a.comp != b.comp) return a.comp < b.comp ? 1 : -1;
      return 0;
    }
    case Kind::Schreyer: {
      require(a.comp >= 0 && a.comp < static_cast<int>(leads_.size()) &&
                  b.comp >= 0 && b.comp < static_cast<int>(leads_.size()),
              "schreyer compare: component out of range");
      ModuleMonomial la{a.mono * leads_[a.comp].mono, leads_[a.comp].comp};
      ModuleMonomial lb{b.mono * leads_[b.comp].mono, leads_[b.comp].comp};
      int c = prev_->compare(la, lb);
      if (c != 0) return c;
      if (a.comp != b.comp) return a.comp < b.comp ? 1 : -1;
      return 0;
    }
  }
  return 0;
}

}  // namespace tangentfit
