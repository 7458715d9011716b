#pragma once

#include <memory>
#include <ostream>
#include <vector>

#include "tangentfit/module_vector.hpp"

namespace tangentfit {

// Division record for one S-pair of a finished basis:
// u_i * g_i - u_j * g_j = sum_k quotients[k] * g_k, remainder zero.
struct SPairTranscript {
  int i = 0, j = 0;
  Monomial ui, uj;
  std::vector<Polynomial> quotients;
};

struct GroebnerBasis {
  std::vector<ModuleVector> elems;  // reduced, monic, sorted by decreasing lead
  std::shared_ptr<const ModuleOrder> order;
  int rank = 1;
  int nvars = 0;
  std::vector<ModuleMonomial> leads;
  // elems[t] = reps[t] . input tuple (tracked through the whole run).
  std::vector<ModuleVector> reps;
  // One record per same-component pair (i < j) of the finished basis.
  std::vector<SPairTranscript> transcripts;
};

// Full reduction (leading and tail terms). With quotients != nullptr the
// division transcript is returned: f = sum_k quotients[k] * G[k] + result.
ModuleVector normal_form(const ModuleVector& f, const std::vector<ModuleVector>& G,
                         const ModuleOrder& ord,
                         std::vector<Polynomial>* quotients = nullptr);
Polynomial normal_form(const Polynomial& f, const std::vector<Polynomial>& G,
                       const MonomialOrder& ord,
                       std::vector<Polynomial>* quotients = nullptr);

// Buchberger with normal pair selection (smallest lcm degree first), the
// coprime-lead shortcut in the ring case, full inter-reduction of the final
// basis, and transcripts re-recorded against the reduced basis.
GroebnerBasis buchberger(const std::vector<ModuleVector>& gens,
                         std::shared_ptr<const ModuleOrder> ord,
                         std::ostream* trace = nullptr,
                         bool with_transcripts = true);
GroebnerBasis buchberger(const std::vector<Polynomial>& gens, const MonomialOrder& ord,
                         std::ostream* trace = nullptr,
                         bool with_transcripts = true);

// Extracts the polynomial entries of a rank-1 basis.
std::vector<Polynomial> ring_elements(const GroebnerBasis& G);

// Syzygy generators of Syz(G.elems), one per transcript, each of rank
// |G.elems|; by Schreyer's theorem they form a Groebner basis of the syzygy
// module under the order induced by G's leading terms.
std::vector<ModuleVector> schreyer_syzygies(const GroebnerBasis& G);

// A tuple of module elements together with its ambient free module data.
struct ModuleTuple {
  std::vector<ModuleVector> gens;
  std::vector<int> shifts;  // ambient grade shifts, size = ambient rank
  std::shared_ptr<const ModuleOrder> order;
};

// Wraps ring polynomials as a rank-1 tuple (ambient shift 0).
ModuleTuple tuple_of(const std::vector<Polynomial>& F, const MonomialOrder& ord);

struct SyzygyTuple {
  // Generators of Syz(T.gens): ambient rank = |T.gens|, ambient shifts = the
  // graded degrees of T.gens, ambient order = Schreyer order induced by T.
  ModuleTuple tuple;
  // Graded degrees of the generators (empty when input was not homogeneous).
  std::vector<int> degrees;
};

// Generators of the full syzygy module of the tuple (not of its Groebner
// basis): Schreyer generators are lifted back through the change-of-basis
// matrices, and the identity rows I - B*A are appended. With minimize=true a
// degree-ascending membership prune reduces them to a minimal generating set.
// A zero generator imposes no relation and contributes the free unit syzygy
// on its slot; its shift is borrowed from the nonzero generators when those
// share a common graded degree (0 otherwise).
SyzygyTuple syzygies_of_tuple(const ModuleTuple& T, bool minimize = true,
                              std::ostream* trace = nullptr);
SyzygyTuple syzygies_of_tuple(const std::vector<Polynomial>& F,
                              const MonomialOrder& ord, bool minimize = true,
                              std::ostream* trace = nullptr);

// Graded free resolution of S/(F) computed by iterated syzygies of the chosen
// generating sets: S^{r_L} -> ... -> S^{r_2} -> S^{|F|} -> S. degrees[p-1]
// holds the true graded shifts a_{p,j}; maps[p-2] holds the columns of phi_p
// for p >= 2 (phi_1 is F itself).
struct FreeResolution {
  std::vector<Polynomial> f;
  std::vector<std::vector<ModuleVector>> maps;
  std::vector<std::vector<int>> degrees;
  int length() const { return static_cast<int>(degrees.size()); }
};

FreeResolution free_resolution(const std::vector<Polynomial>& F,
                               const MonomialOrder& ord,
                               std::ostream* trace = nullptr);

// Alternating sum of Hilbert-function values of the resolution tail: the
// dimension of the degree-(k + m) graded piece of Syz(F), where m is the
// common degree of the f_j (entry-degree k component of the syzygy module).
long dimension_from_resolution(const FreeResolution& R, int k);

// Exact binomial, zero when n < r or r < 0.
long binom(long n, long r);

// Membership and span comparison for submodules of S^r, via Buchberger.
bool in_module_span(const ModuleVector& v, const std::vector<ModuleVector>& gens,
                    std::shared_ptr<const ModuleOrder> ord);
bool same_module_span(const std::vector<ModuleVector>& a,
                      const std::vector<ModuleVector>& b,
                      std::shared_ptr<const ModuleOrder> ord);

// Scales a module vector to integer coprime coefficients with positive leading
// coefficient of the first nonzero entry.
ModuleVector module_content_normalize(const ModuleVector& v);

}  // namespace tangentfit
