#ifndef ARTINV_DETAIL_VPOLY_HPP
#define ARTINV_DETAIL_VPOLY_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "artinv/ff.hpp"

/*
 * Low-level dense univariate polynomial kernels over a FieldCtx.
 * Coefficients ascending, no trailing zeros, empty vector = 0.
 * The public Poly type in poly.hpp wraps these; ff.cpp uses them directly
 * for modulus search and embeddings.
 */

namespace artinv::detail {

using VP = std::vector<uint64_t>;

void vp_trim(VP& a);
inline int vp_deg(const VP& a) { return static_cast<int>(a.size()) - 1; }

VP vp_add(FieldRef f, const VP& a, const VP& b);
VP vp_sub(FieldRef f, const VP& a, const VP& b);
VP vp_scale(FieldRef f, const VP& a, uint64_t k);
VP vp_mul(FieldRef f, const VP& a, const VP& b);
VP vp_monic(FieldRef f, VP a);
void vp_divrem(FieldRef f, VP a, const VP& b, VP& q, VP& r);
VP vp_rem(FieldRef f, const VP& a, const VP& b);
VP vp_gcd_monic(FieldRef f, VP a, VP b);
VP vp_mulmod(FieldRef f, const VP& a, const VP& b, const VP& m);
VP vp_powmod(FieldRef f, VP base, uint64_t e, const VP& m);
uint64_t vp_eval(FieldRef f, const VP& a, uint64_t x);
VP vp_deriv(FieldRef f, const VP& a);
VP vp_from_root(FieldRef f, uint64_t r);  // x - r

// x^{q^d} mod m by iterated q-power maps
VP vp_xpow_qd_mod(FieldRef f, uint64_t q, int d, const VP& m);

bool vp_is_irreducible(FieldRef f, const VP& a);

// All roots of h lying in K (h's coefficients already live in K).
// Sorted by canonical value order.  Scans K when small, otherwise
// gcd-with-(x^{|K|}-x) followed by deterministic linear-factor splitting.
std::vector<uint64_t> vp_roots(FieldRef K, const VP& h);

// One monic irreducible degree-t factor of a squarefree h all of whose
// irreducible factors have degree exactly t.  Deterministic.
VP vp_equal_degree_factor(FieldRef f, VP h, int t);

}  // namespace artinv::detail

#endif
