#ifndef ARTINV_ARTIN_HPP
#define ARTINV_ARTIN_HPP

#include "artinv/quotient.hpp"

/*
 * The Artin invariant: for regular tau, inv_Q(tau) is the conjugacy class
 * C_gamma in G with v^q = gamma(v) for every v in Q^{-1}(tau).
 *
 * The general engine is formula-free: tau is regular iff h = f - tau g is
 * squarefree, and the class of gamma = (a b; c d) matches iff
 * gcd(h, (cx+d) x^q - (ax+b) mod h) is nontrivial.  Every closed form from
 * the source material is implemented independently and must agree.
 */

namespace artinv {

struct ArtinResult {
  bool regular = false;
  ConjClass cls;  // meaningful only when regular

  bool same_class(const ArtinResult& o) const {
    if (regular != o.regular) return false;
    return !regular || cls.rep == o.cls.rep;
  }
};

ArtinResult inv_general(const QuotientMap& Q, const ProjPoint& tau);
// same engine with the conjugacy-class partition precomputed by the caller
ArtinResult inv_general(const QuotientMap& Q, const ProjPoint& tau,
                        const std::vector<ConjClass>& classes);

// closed-form dispatcher; the group and its preferred quotient map are
// implied by the spec
ArtinResult closed_form(FieldRef f, const GroupSpec& spec,
                        const ProjPoint& tau);

// explicit-root oracle: locate v with Q(v) = tau in F_{q^t} and read off
// gamma by scanning the group action
ArtinResult inv_brute_oracle(const QuotientMap& Q, const ProjPoint& tau);

// Z/3-valued symbol with v^q = beta^{[tau/q]}(v); throws on irregular tau
int tripartite_symbol(FieldRef f, uint64_t tau);
// recompute with the other primitive cube root (for independence tests)
int tripartite_symbol_alt(FieldRef f, uint64_t tau);

struct Census {
  std::vector<std::pair<ConjClass, long>> counts;  // per conjugacy class
  long regular_count = 0;
  std::vector<ProjPoint> irregular_taus;  // within F_q u {inf}
  bool infinity_regular = false;
};
Census census(const QuotientMap& Q);

// inv_{aQ+b}(a tau + b) = inv_Q(tau); returns both sides, throws CheckFail
// on disagreement
std::pair<ArtinResult, ArtinResult> affine_transport(const QuotientMap& Q,
                                                     uint64_t a, uint64_t b,
                                                     const ProjPoint& tau);

// inv_{Q2}(beta(tau)) = alpha inv_{Q1}(tau) alpha^{-1}; throws on mismatch
void conjugation_transport(const QuotientMap& Q1, const Mat& alpha,
                           const ProjPoint& tau);

struct SubgroupTransport {
  ConjClass class_in_H;
  ConjClass class_in_G;
  Mat common_delta;
};
SubgroupTransport subgroup_transport(const QuotientMap& QH,
                                     const QuotientMap& QG,
                                     const ProjPoint& tau);
// same, with the relation h = relate(QH, QG) precomputed
SubgroupTransport subgroup_transport(const QuotientMap& QH,
                                     const QuotientMap& QG, const RatFunc& h,
                                     const ProjPoint& tau);

// h(tau) = infinity when the invariant is the identity class, iota(gamma)
// otherwise
bool iota_theorem_check(const QuotientMap& QH, const RatFunc& h,
                        const ProjPoint& tau);

struct BijectionRow {
  uint64_t tau = 0;
  Mat rep;
  int order = 0;
};
// Theorem: iota is a bijection from classes of order >= 3 onto F_q^x,
// with inv_Q as inverse; throws CheckFail if any direction fails
std::vector<BijectionRow> pgl2_bijection(FieldRef f);

// single full-orbit structure of Q^{-1}(tau) for regular tau, via one
// explicit root; throws CheckFail if violated
void check_preimage_full_orbit(const QuotientMap& Q, const ProjPoint& tau);

}  // namespace artinv

#endif
