#include "tangentfit/groebner.hpp"

#include <algorithm>
#include <array>
#include <set>

namespace tangentfit {

namespace {

struct WTerm {
  Monomial mono;
  int comp;
  Rational coef;
};

struct WPoly {
  std::vector<WTerm> t;
  bool empty() const { return t.empty(); }
};

ModuleMonomial mm(const WTerm& t) { return {t.mono, t.comp}; }

WPoly to_w(const ModuleVector& v, const ModuleOrder& ord) {
  WPoly w;
  for (int q = 0; q < v.rank(); ++q)
    for (const auto& t : v.entries[q].terms()) w.t.push_back({t.mono, q, t.coef});
  std::sort(w.t.begin(), w.t.end(), [&](const WTerm& a, const WTerm& b) {
    return ord.compare(mm(a), mm(b)) > 0;
  });
  return w;
}

ModuleVector from_w(const WPoly& w, int rank, int nvars) {
  std::vector<std::vector<Term>> per(rank);
  for (const auto& t : w.t) per[t.comp].push_back({t.mono, t.coef});
  ModuleVector v(rank, nvars);
  for (int q = 0; q < rank; ++q)
    v.entries[q] = Polynomial::from_terms(nvars, std::move(per[q]));
  return v;
}

WPoly scaled(const WPoly& b, const Monomial& m, const Rational& c) {
  WPoly r;
  r.t.reserve(b.t.size());
  for (const auto& t : b.t) r.t.push_back({t.mono * m, t.comp, t.coef * c});
  return r;
}

// a.t[a_from:] - s, both sorted descending; the result stays sorted.
WPoly sub_from(const WPoly& a, size_t a_from, const WPoly& s, const ModuleOrder& ord) {
  WPoly r;
  r.t.reserve(a.t.size() - a_from + s.t.size());
  size_t i = a_from, j = 0;
  while (i < a.t.size() && j < s.t.size()) {
    int c = ord.compare(mm(a.t[i]), mm(s.t[j]));
    if (c > 0) {
      r.t.push_back(a.t[i++]);
    } else if (c < 0) {
      r.t.push_back(s.t[j]);
      r.t.back().coef = -r.t.back().coef;
      ++j;
    } else {
      Rational d = a.t[i].coef - s.t[j].coef;
      if (d != 0) r.t.push_back({a.t[i].mono, a.t[i].comp, std::move(d)});
      ++i;
      ++j;
    }
  }
  for (; i < a.t.size(); ++i) r.t.push_back(a.t[i]);
  for (; j < s.t.size(); ++j) {
    r.t.push_back(s.t[j]);
    r.t.back().coef = -r.t.back().coef;
  }
  return r;
}

// Full normal form of f against divisors with known leads/lead coefficients.
// quot, when given, must be pre-sized to G.size().
WPoly w_normal_form(WPoly f, const std::vector<const WPoly*>& G,
                    const std::vector<ModuleMonomial>& leads,
                    const std::vector<Rational>& lead_coefs, const ModuleOrder& ord,
                    int nvars, std::vector<Polynomial>* quot) {
  WPoly out;
  size_t head = 0;
  while (head < f.t.size()) {
    const WTerm lt = f.t[head];
    int hit = -1;
    for (size_t g = 0; g < G.size(); ++g) {
      if (leads[g].comp == lt.comp && leads[g].mono.divides(lt.mono)) {
        hit = static_cast<int>(g);
        break;
      }
    }
    if (hit < 0) {
      out.t.push_back(lt);
      ++head;
      continue;
    }
    Monomial q = lt.mono.quotient_by(leads[hit].mono);
    Rational c = lt.coef / lead_coefs[hit];
    if (quot) (*quot)[hit] += Polynomial::monomial(q, c);
    f = sub_from(f, head, scaled(*G[hit], q, c), ord);
    head = 0;
  }
  return out;
}

std::string mm_to_string(const ModuleMonomial& m, int rank) {
  std::string s = to_string(m.mono, cone_var_names(m.mono.nvars()));
  if (rank > 1) s += "*e_" + std::to_string(m.comp);
  return s;
}

class Engine {
 public:
  Engine(int rank, int nvars, std::shared_ptr<const ModuleOrder> ord, bool track,
         std::ostream* trace)
      : rank_(rank), nvars_(nvars), ord_(std::move(ord)), track_(track), trace_(trace) {}

  int size() const { return static_cast<int>(b_.size()); }

  // Adds a generator verbatim (monic-normalized) and queues its pairs.
  void add_raw(const ModuleVector& v, int input_index) {
    if (v.is_zero()) return;
    WPoly w = to_w(v, *ord_);
    Rational lc = w.t[0].coef;
    for (auto& t : w.t) t.coef /= lc;
    ModuleVector rep;
    if (track_) {
      rep = ModuleVector::basis(n_inputs_, nvars_, input_index,
                                Polynomial::constant(nvars_, Rational(1) / lc));
    }
    push_elem(std::move(w), std::move(rep));
  }

  void set_input_count(int n) { n_inputs_ = n; }

  void saturate() {
    while (!queue_.empty()) {
      auto [deg, i, j] = *queue_.begin();
      queue_.erase(queue_.begin());
      process_pair(i, j);
    }
  }

  // Full normal form against the current basis.
  ModuleVector nf(const ModuleVector& v, std::vector<Polynomial>* quot = nullptr) const {
    std::vector<const WPoly*> G;
    std::vector<ModuleMonomial> leads;
    std::vector<Rational> lcs;
    for (const auto& e : b_) {
      G.push_back(&e.w);
      leads.push_back(e.lead);
      lcs.push_back(Rational(1));
    }
    if (quot) quot->assign(b_.size(), Polynomial(nvars_));
    WPoly r = w_normal_form(to_w(v, *ord_), G, leads, lcs, *ord_, nvars_, quot);
    return from_w(r, v.rank(), nvars_);
  }

  void reduce_basis() {
    // Drop elements whose lead is divisible by another kept element's lead;
    // equal leads keep the earlier index.
    std::vector<bool> drop(b_.size(), false);
    for (size_t t = 0; t < b_.size(); ++t) {
      for (size_t s = 0; s < b_.size(); ++s) {
        if (s == t || drop[s]) continue;
        if (b_[s].lead.comp != b_[t].lead.comp) continue;
        if (!b_[s].lead.mono.divides(b_[t].lead.mono)) continue;
        if (b_[s].lead.mono == b_[t].lead.mono && s > t) continue;
        drop[t] = true;
        break;
      }
    }
    std::vector<Elem> kept;
    for (size_t t = 0; t < b_.size(); ++t)
      if (!drop[t]) kept.push_back(std::move(b_[t]));
    b_ = std::move(kept);

    // Tail-reduce each element against the others (leads are untouched since
    // no lead divides another).
    for (size_t t = 0; t < b_.size(); ++t) {
      std::vector<const WPoly*> G;
      std::vector<ModuleMonomial> leads;
      std::vector<Rational> lcs;
      std::vector<size_t> idx;
      for (size_t s = 0; s < b_.size(); ++s) {
        if (s == t) continue;
        G.push_back(&b_[s].w);
        leads.push_back(b_[s].lead);
        lcs.push_back(Rational(1));
        idx.push_back(s);
      }
      std::vector<Polynomial> quot(G.size(), Polynomial(nvars_));
      WPoly r = w_normal_form(b_[t].w, G, leads, lcs, *ord_,
                              nvars_, track_ ? &quot : nullptr);
      require(!r.empty() && mm(r.t[0]) == b_[t].lead,
              "buchberger: tail reduction moved a leading term");
      if (track_) {
        ModuleVector rep = b_[t].rep;
        for (size_t g = 0; g < idx.size(); ++g)
          rep = rep - b_[idx[g]].rep.times_poly(quot[g]);
        b_[t].rep = std::move(rep);
      }
      b_[t].w = std::move(r);
    }

    std::vector<size_t> perm(b_.size());
    for (size_t i = 0; i < perm.size(); ++i) perm[i] = i;
    std::sort(perm.begin(), perm.end(), [&](size_t a, size_t b) {
      return ord_->compare(b_[a].lead, b_[b].lead) > 0;
    });
    std::vector<Elem> sorted;
    sorted.reserve(b_.size());
    for (size_t i : perm) sorted.push_back(std::move(b_[i]));
    b_ = std::move(sorted);
  }

  // Re-reduces every same-component pair of the final basis, recording the
  // division transcript (all must reduce to zero for a Groebner basis).
  std::vector<SPairTranscript> record_transcripts() {
    std::vector<SPairTranscript> out;
    std::vector<const WPoly*> G;
    std::vector<ModuleMonomial> leads;
    std::vector<Rational> lcs;
    for (const auto& e : b_) {
      G.push_back(&e.w);
      leads.push_back(e.lead);
      lcs.push_back(Rational(1));
    }
    for (size_t i = 0; i < b_.size(); ++i) {
      for (size_t j = i + 1; j < b_.size(); ++j) {
        if (b_[i].lead.comp != b_[j].lead.comp) continue;
        Monomial L = Monomial::lcm(b_[i].lead.mono, b_[j].lead.mono);
        Monomial ui = L.quotient_by(b_[i].lead.mono);
        Monomial uj = L.quotient_by(b_[j].lead.mono);
        WPoly s = sub_from(scaled(b_[i].w, ui, Rational(1)), 0,
                           scaled(b_[j].w, uj, Rational(1)), *ord_);
        std::vector<Polynomial> quot(b_.size(), Polynomial(nvars_));
        WPoly r = w_normal_form(std::move(s), G, leads, lcs, *ord_, nvars_, &quot);
        require(r.empty(), "buchberger: S-pair of the final basis did not reduce to zero");
        out.push_back({static_cast<int>(i), static_cast<int>(j), ui, uj, std::move(quot)});
      }
    }
    return out;
  }

  GroebnerBasis finish(bool with_transcripts) {
    GroebnerBasis gb;
    gb.order = ord_;
    gb.rank = rank_;
    gb.nvars = nvars_;
    for (const auto& e : b_) {
      gb.elems.push_back(from_w(e.w, rank_, nvars_));
      gb.leads.push_back(e.lead);
      if (track_) gb.reps.push_back(e.rep);
    }
    if (with_transcripts) gb.transcripts = record_transcripts();
    return gb;
  }

 private:
  struct Elem {
    WPoly w;  // monic
    ModuleMonomial lead;
    ModuleVector rep;
  };

  void push_elem(WPoly w, ModuleVector rep) {
    Elem e;
    e.w = std::move(w);
    e.lead = mm(e.w.t[0]);
    e.rep = std::move(rep);
    int t = static_cast<int>(b_.size());
    for (int s = 0; s < t; ++s) {
      if (b_[s].lead.comp != e.lead.comp) continue;
      Monomial L = Monomial::lcm(b_[s].lead.mono, e.lead.mono);
      queue_.insert({L.degree(), s, t});
    }
    b_.push_back(std::move(e));
  }

  void process_pair(int i, int j) {
    const ModuleMonomial &li = b_[i].lead, &lj = b_[j].lead;
    Monomial L = Monomial::lcm(li.mono, lj.mono);
    if (rank_ == 1 && Monomial::gcd(li.mono, lj.mono).degree() == 0) {
      // Coprime leading monomials: the S-polynomial reduces to zero.
      if (trace_)
        *trace_ << "pair (" << i << "," << j << ") lcm="
                << mm_to_string({L, li.comp}, rank_) << " reduced_to=zero\n";
      return;
    }
    Monomial ui = L.quotient_by(li.mono);
    Monomial uj = L.quotient_by(lj.mono);
    WPoly s = sub_from(scaled(b_[i].w, ui, Rational(1)), 0,
                       scaled(b_[j].w, uj, Rational(1)), *ord_);
    std::vector<const WPoly*> G;
    std::vector<ModuleMonomial> leads;
    std::vector<Rational> lcs;
    for (const auto& e : b_) {
      G.push_back(&e.w);
      leads.push_back(e.lead);
      lcs.push_back(Rational(1));
    }
    std::vector<Polynomial> quot(b_.size(), Polynomial(nvars_));
    WPoly r = w_normal_form(std::move(s), G, leads, lcs, *ord_, nvars_,
                            track_ ? &quot : nullptr);
    if (r.empty()) {
      if (trace_)
        *trace_ << "pair (" << i << "," << j << ") lcm="
                << mm_to_string({L, li.comp}, rank_) << " reduced_to=zero\n";
      return;
    }
    Rational lc = r.t[0].coef;
    for (auto& t : r.t) t.coef /= lc;
    ModuleVector rep;
    if (track_) {
      rep = b_[i].rep.times_term(ui, Rational(1)) -
            b_[j].rep.times_term(uj, Rational(1));
      for (size_t g = 0; g < quot.size(); ++g)
        rep = rep - b_[g].rep.times_poly(quot[g]);
      rep = rep * (Rational(1) / lc);
    }
    if (trace_)
      *trace_ << "pair (" << i << "," << j << ") lcm="
              << mm_to_string({L, li.comp}, rank_) << " reduced_to=new gen "
              << b_.size() << "\n";
    push_elem(std::move(r), std::move(rep));
  }

  int rank_, nvars_;
  std::shared_ptr<const ModuleOrder> ord_;
  bool track_;
  std::ostream* trace_;
  int n_inputs_ = 0;
  std::vector<Elem> b_;
  std::set<std::array<int, 3>> queue_;
};

}  // namespace

ModuleVector normal_form(const ModuleVector& f, const std::vector<ModuleVector>& G,
                         const ModuleOrder& ord, std::vector<Polynomial>* quotients) {
  int nvars = f.nvars();
  std::vector<WPoly> gw;
  std::vector<const WPoly*> gp;
  std::vector<ModuleMonomial> leads;
  std::vector<Rational> lcs;
  std::vector<size_t> idx;
  for (size_t g = 0; g < G.size(); ++g) {
    if (G[g].is_zero()) continue;
    gw.push_back(to_w(G[g], ord));
    idx.push_back(g);
  }
  for (auto& w : gw) {
    gp.push_back(&w);
    leads.push_back(mm(w.t[0]));
    lcs.push_back(w.t[0].coef);
  }
  std::vector<Polynomial> quot(gp.size(), Polynomial(nvars));
  WPoly r = w_normal_form(to_w(f, ord), gp, leads, lcs, ord, nvars,
                          quotients ? &quot : nullptr);
  if (quotients) {
    quotients->assign(G.size(), Polynomial(nvars));
    for (size_t g = 0; g < idx.size(); ++g) (*quotients)[idx[g]] = quot[g];
  }
  return from_w(r, f.rank(), nvars);
}

Polynomial normal_form(const Polynomial& f, const std::vector<Polynomial>& G,
                       const MonomialOrder& ord, std::vector<Polynomial>* quotients) {
  ModuleVector fv(1, f.nvars());
  fv.entries[0] = f;
  std::vector<ModuleVector> Gv;
  for (const auto& g : G) {
    ModuleVector v(1, f.nvars());
    v.entries[0] = g;
    Gv.push_back(std::move(v));
  }
  auto mord = ModuleOrder::top(ord);
  return normal_form(fv, Gv, mord, quotients).entries[0];
}

GroebnerBasis buchberger(const std::vector<ModuleVector>& gens,
                         std::shared_ptr<const ModuleOrder> ord, std::ostream* trace,
                         bool with_transcripts) {
  int rank = 1, nvars = 0;
  for (const auto& g : gens) {
    if (!g.is_zero()) {
      rank = g.rank();
      nvars = g.nvars();
      break;
    }
  }
  Engine e(rank, nvars, std::move(ord), /*track=*/true, trace);
  e.set_input_count(static_cast<int>(gens.size()));
  for (size_t i = 0; i < gens.size(); ++i)
    e.add_raw(gens[i], static_cast<int>(i));
  e.saturate();
  e.reduce_basis();
  return e.finish(with_transcripts);
}

GroebnerBasis buchberger(const std::vector<Polynomial>& gens, const MonomialOrder& ord,
                         std::ostream* trace, bool with_transcripts) {
  std::vector<ModuleVector> gv;
  for (const auto& g : gens) {
    ModuleVector v(1, g.nvars());
    v.entries[0] = g;
    gv.push_back(std::move(v));
  }
  auto mord = std::make_shared<ModuleOrder>(ModuleOrder::top(ord));
  return buchberger(gv, mord, trace, with_transcripts);
}

std::vector<Polynomial> ring_elements(const GroebnerBasis& G) {
  require(G.rank == 1, "ring_elements: basis is not rank 1");
  std::vector<Polynomial> out;
  for (const auto& e : G.elems) out.push_back(e.entries[0]);
  return out;
}

std::vector<ModuleVector> schreyer_syzygies(const GroebnerBasis& G) {
  int t = static_cast<int>(G.elems.size());
  int nvars = G.nvars;
  std::vector<ModuleVector> out;
  for (const auto& tr : G.transcripts) {
    ModuleVector s(t, nvars);
    s.entries[tr.i] += Polynomial::monomial(tr.ui, Rational(1));
    s.entries[tr.j] -= Polynomial::monomial(tr.uj, Rational(1));
    for (int k = 0; k < t; ++k) s.entries[k] -= tr.quotients[k];
    out.push_back(std::move(s));
  }
  return out;
}

ModuleTuple tuple_of(const std::vector<Polynomial>& F, const MonomialOrder& ord) {
  ModuleTuple T;
  for (const auto& f : F) {
    ModuleVector v(1, f.nvars());
    v.entries[0] = f;
    T.gens.push_back(std::move(v));
  }
  T.shifts = {0};
  T.order = std::make_shared<ModuleOrder>(ModuleOrder::top(ord));
  return T;
}

namespace {

// Degree-ascending membership prune: keeps a generator iff it is not in the
// submodule generated by the ones accepted before it.
std::vector<ModuleVector> minimize_generators(
    std::vector<ModuleVector> cand, const std::vector<int>& degrees_in,
    std::shared_ptr<const ModuleOrder> ord, int rank, int nvars,
    std::vector<int>* degrees_out) {
  std::vector<size_t> idx(cand.size());
  for (size_t i = 0; i < idx.size(); ++i) idx[i] = i;
  std::stable_sort(idx.begin(), idx.end(), [&](size_t a, size_t b) {
    return degrees_in[a] < degrees_in[b];
  });
  Engine e(rank, nvars, ord, /*track=*/false, nullptr);
  std::vector<ModuleVector> accepted;
  if (degrees_out) degrees_out->clear();
  for (size_t i : idx) {
    if (!e.nf(cand[i]).is_zero()) {
      accepted.push_back(cand[i]);
      if (degrees_out) degrees_out->push_back(degrees_in[i]);
      e.add_raw(cand[i], 0);
      e.saturate();
    }
  }
  return accepted;
}

// A zero generator imposes no relation, so its slot contributes the free unit
// syzygy e_i and everything else is Syz of the nonzero subtuple with zero
// entries re-inserted. A zero generator has no degree of its own; it borrows
// the common graded degree of the nonzero generators (0 when they disagree or
// when every generator vanishes).
SyzygyTuple syzygies_with_zero_slots(const ModuleTuple& T, bool minimize,
                                     std::ostream* trace) {
  const int s = static_cast<int>(T.gens.size());
  const int nvars = T.gens[0].nvars();
  std::vector<int> live;
  for (int i = 0; i < s; ++i)
    if (!T.gens[i].is_zero()) live.push_back(i);

  bool graded = true;
  for (const auto& g : T.gens)
    if (!g.is_homogeneous(T.shifts)) graded = false;

  int borrowed = 0;
  if (graded && !live.empty()) {
    borrowed = T.gens[live[0]].graded_degree(T.shifts);
    for (int i : live)
      if (T.gens[i].graded_degree(T.shifts) != borrowed) {
        borrowed = 0;
        break;
      }
  }
  std::vector<int> gdeg(s, borrowed);
  if (graded)
    for (int i : live) gdeg[i] = T.gens[i].graded_degree(T.shifts);

  std::vector<ModuleVector> gens;
  std::vector<int> degs;
  for (int i = 0; i < s; ++i)
    if (T.gens[i].is_zero()) {
      gens.push_back(ModuleVector::basis(
          s, nvars, i, Polynomial::constant(nvars, Rational(1))));
      degs.push_back(gdeg[i]);
    }
  if (!live.empty()) {
    ModuleTuple sub;
    for (int i : live) sub.gens.push_back(T.gens[i]);
    sub.shifts = T.shifts;
    sub.order = T.order;
    SyzygyTuple inner = syzygies_of_tuple(sub, minimize, trace);
    for (size_t t = 0; t < inner.tuple.gens.size(); ++t) {
      ModuleVector v(s, nvars);
      for (size_t j = 0; j < live.size(); ++j)
        v.entries[live[j]] = inner.tuple.gens[t].entries[j];
      gens.push_back(std::move(v));
      if (graded) degs.push_back(inner.degrees[t]);
    }
  }

  std::vector<ModuleMonomial> tuple_leads;
  for (const auto& g : T.gens) {
    if (g.is_zero()) {
      tuple_leads.push_back({Monomial(nvars), 0});
    } else {
      WPoly w = to_w(g, *T.order);
      tuple_leads.push_back(mm(w.t[0]));
    }
  }

  SyzygyTuple out;
  out.tuple.gens = std::move(gens);
  for (auto& v : out.tuple.gens) v = module_content_normalize(v);
  out.tuple.shifts = gdeg;
  out.tuple.order = std::make_shared<ModuleOrder>(
      ModuleOrder::schreyer(T.order, std::move(tuple_leads)));
  if (graded) out.degrees = std::move(degs);
  return out;
}

}  // namespace

SyzygyTuple syzygies_of_tuple(const ModuleTuple& T, bool minimize,
                              std::ostream* trace) {
  require(!T.gens.empty(), "syzygies_of_tuple: empty tuple");
  int s = static_cast<int>(T.gens.size());
  int nvars = T.gens[0].nvars();
  for (const auto& g : T.gens)
    if (g.is_zero()) return syzygies_with_zero_slots(T, minimize, trace);

  bool graded = true;
  std::vector<int> gdeg(s, 0);
  for (int i = 0; i < s; ++i) {
    if (!T.gens[i].is_homogeneous(T.shifts)) {
      graded = false;
      break;
    }
    gdeg[i] = T.gens[i].graded_degree(T.shifts);
  }

  GroebnerBasis gb = buchberger(T.gens, T.order, trace, /*with_transcripts=*/true);
  int t = static_cast<int>(gb.elems.size());

  // F = B . G, one row per input.
  std::vector<std::vector<Polynomial>> B(s);
  for (int i = 0; i < s; ++i) {
    std::vector<Polynomial> quot;
    ModuleVector r = normal_form(T.gens[i], gb.elems, *gb.order, &quot);
    require(r.is_zero(), "syzygies_of_tuple: input does not reduce to zero by its basis");
    B[i] = std::move(quot);
  }

  // Schreyer generators of Syz(G), pushed through G = A . F, plus the rows of
  // I - B*A.
  std::vector<ModuleVector> cand;
  for (const auto& sg : schreyer_syzygies(gb)) {
    ModuleVector v(s, nvars);
    for (int k = 0; k < t; ++k)
      if (!sg.entries[k].is_zero()) v = v + gb.reps[k].times_poly(sg.entries[k]);
    cand.push_back(std::move(v));
  }
  for (int i = 0; i < s; ++i) {
    ModuleVector v = ModuleVector::basis(s, nvars, i, Polynomial::constant(nvars, Rational(1)));
    for (int k = 0; k < t; ++k)
      if (!B[i][k].is_zero()) v = v - gb.reps[k].times_poly(B[i][k]);
    cand.push_back(std::move(v));
  }

  std::vector<ModuleVector> nonzero;
  std::vector<int> cdeg;
  for (auto& v : cand) {
    if (v.is_zero()) continue;
    ModuleVector check(T.gens[0].rank(), nvars);
    for (int q = 0; q < s; ++q) check = check + T.gens[q].times_poly(v.entries[q]);
    require(check.is_zero(), "syzygies_of_tuple: lifted candidate is not a syzygy");
    if (graded) {
      require(v.is_homogeneous(gdeg), "syzygies_of_tuple: syzygy of graded input not homogeneous");
      cdeg.push_back(v.graded_degree(gdeg));
    }
    nonzero.push_back(std::move(v));
  }
  if (!graded) cdeg.assign(nonzero.size(), 0);

  std::vector<ModuleMonomial> tuple_leads;
  for (const auto& g : T.gens) {
    WPoly w = to_w(g, *T.order);
    tuple_leads.push_back(mm(w.t[0]));
  }
  auto syz_ord = std::make_shared<ModuleOrder>(
      ModuleOrder::schreyer(T.order, tuple_leads));

  SyzygyTuple out;
  std::vector<int> deg_out;
  if (minimize) {
    out.tuple.gens = minimize_generators(std::move(nonzero), cdeg, syz_ord, s,
                                         nvars, &deg_out);
  } else {
    out.tuple.gens = std::move(nonzero);
    deg_out = cdeg;
  }
  for (auto& v : out.tuple.gens) v = module_content_normalize(v);
  out.tuple.shifts = gdeg;
  out.tuple.order = syz_ord;
  if (graded) out.degrees = deg_out;
  return out;
}

SyzygyTuple syzygies_of_tuple(const std::vector<Polynomial>& F,
                              const MonomialOrder& ord, bool minimize,
                              std::ostream* trace) {
  return syzygies_of_tuple(tuple_of(F, ord), minimize, trace);
}

FreeResolution free_resolution(const std::vector<Polynomial>& F,
                               const MonomialOrder& ord, std::ostream* trace) {
  require(!F.empty(), "free_resolution: empty input");
  int nvars = F[0].nvars();
  int common = kNegInfDegree;
  bool uniform = true;
  for (const auto& f : F) {
    if (f.is_zero()) continue;
    require(f.is_homogeneous(), "free_resolution: input not homogeneous");
    if (common == kNegInfDegree) common = f.degree();
    uniform = uniform && f.degree() == common;
  }
  require(common != kNegInfDegree, "free_resolution: every entry is zero");
  std::vector<int> a1;
  for (const auto& f : F) {
    if (f.is_zero()) {
      // a zero entry only has a well-defined shift when the rest agree on one
      require(uniform, "free_resolution: cannot infer a degree for a zero entry");
      a1.push_back(common);
    } else {
      a1.push_back(f.degree());
    }
  }
  FreeResolution R;
  R.f = F;
  R.degrees.push_back(a1);
  ModuleTuple cur = tuple_of(F, ord);
  for (int level = 2; level <= nvars + 2; ++level) {
    SyzygyTuple S = syzygies_of_tuple(cur, /*minimize=*/true, trace);
    if (S.tuple.gens.empty()) return R;
    R.maps.push_back(S.tuple.gens);
    R.degrees.push_back(S.degrees);
    cur = S.tuple;
  }
  throw AlgebraError("free_resolution: did not terminate within the variable-count bound");
}

long binom(long n, long r) {
  if (r < 0 || n < r) return 0;
  Integer b;
  mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n),
               static_cast<unsigned long>(r));
  require(b.fits_slong_p(), "binom: overflow");
  return b.get_si();
}

long dimension_from_resolution(const FreeResolution& R, int k) {
  require(!R.f.empty(), "dimension_from_resolution: empty resolution");
  int nv = R.f[0].nvars();
  int m = R.degrees[0][0];
  for (int a : R.degrees[0])
    require(a == m, "dimension_from_resolution: level-1 degrees not uniform");
  long kappa = k + m;
  long acc = 0;
  for (int p = 2; p <= R.length(); ++p) {
    long sign = (p % 2 == 0) ? 1 : -1;
    for (int a : R.degrees[p - 1]) acc += sign * binom(kappa - a + nv - 1, nv - 1);
  }
  require(acc >= 0, "dimension_from_resolution: negative dimension");
  return acc;
}

bool in_module_span(const ModuleVector& v, const std::vector<ModuleVector>& gens,
                    std::shared_ptr<const ModuleOrder> ord) {
  if (v.is_zero()) return true;
  if (gens.empty()) return false;
  GroebnerBasis gb = buchberger(gens, std::move(ord), nullptr, /*with_transcripts=*/false);
  return normal_form(v, gb.elems, *gb.order).is_zero();
}

bool same_module_span(const std::vector<ModuleVector>& a,
                      const std::vector<ModuleVector>& b,
                      std::shared_ptr<const ModuleOrder> ord) {
  for (const auto& v : a)
    if (!in_module_span(v, b, ord)) return false;
  for (const auto& v : b)
    if (!in_module_span(v, a, ord)) return false;
  return true;
}

ModuleVector module_content_normalize(const ModuleVector& v) {
  Integer num_gcd(0), den_lcm(1);
  for (const auto& p : v.entries)
    for (const auto& t : p.terms()) {
      mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), t.coef.get_num().get_mpz_t());
      mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), t.coef.get_den().get_mpz_t());
    }
  if (num_gcd == 0) return v;
  Rational content(num_gcd, den_lcm);
  content.canonicalize();
  for (const auto& p : v.entries) {
    if (p.is_zero()) continue;
    if (p.terms().front().coef < 0) content = -content;
    break;
  }
  return v * (Rational(1) / content);
}

}  // namespace tangentfit
