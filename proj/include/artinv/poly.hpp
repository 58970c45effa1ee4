#ifndef ARTINV_POLY_HPP
#define ARTINV_POLY_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "artinv/detail/vpoly.hpp"
#include "artinv/ff.hpp"

/*
 * Dense univariate polynomials and reduced rational functions over a
 * FieldCtx, with the projective conventions used throughout:
 *   - a rational function is stored reduced (gcd(num, den) = 1) with a
 *     monic denominator; its degree is max(deg num, deg den);
 *   - evaluation maps den(v) = 0 to the point at infinity, and the value
 *     at infinity is decided by the degree comparison.
 */

namespace artinv {

struct Poly {
  FieldRef f = nullptr;
  std::vector<uint64_t> c;  // ascending, no trailing zeros

  int deg() const { return static_cast<int>(c.size()) - 1; }
  bool is_zero() const { return c.empty(); }
  uint64_t lc() const { return c.empty() ? 0 : c.back(); }
  uint64_t coeff(int i) const {
    return i >= 0 && i < static_cast<int>(c.size()) ? c[i] : 0;
  }
  bool operator==(const Poly& o) const { return f == o.f && c == o.c; }
};

Poly p_zero(FieldRef f);
Poly p_const(FieldRef f, uint64_t k);
Poly p_x(FieldRef f);
Poly p_of(FieldRef f, std::vector<uint64_t> coeffs);

Poly p_add(const Poly& a, const Poly& b);
Poly p_sub(const Poly& a, const Poly& b);
Poly p_mul(const Poly& a, const Poly& b);
Poly p_scale(const Poly& a, uint64_t k);
Poly p_monic(Poly a);
void p_divmod(const Poly& a, const Poly& b, Poly& q, Poly& r);
Poly p_rem(const Poly& a, const Poly& b);
Poly p_gcd(const Poly& a, const Poly& b);  // monic
Poly p_powmod(const Poly& base, uint64_t e, const Poly& m);
Poly p_pow(const Poly& base, uint64_t e);
Poly p_compose(const Poly& outer, const Poly& inner);
Poly p_derivative(const Poly& a);
uint64_t p_eval(const Poly& a, uint64_t x);
Poly p_from_roots(FieldRef f, const std::vector<uint64_t>& roots);
bool p_squarefree(const Poly& a);

// coefficients through an embedding, and back down (throws if not rational)
Poly p_embed(const Poly& a, FieldRef big);
Poly p_descend(const Poly& a, FieldRef small);

// x^{q^d} mod h
Poly frob_power_mod(const Poly& h, uint64_t q, int d);

// distinct-degree factorization of squarefree h over F_q
std::vector<std::pair<int, Poly>> ddf(const Poly& h, uint64_t q);

// all roots of h in ext (coefficients of h must embed into ext)
std::vector<uint64_t> roots_in(const Poly& h, FieldRef ext);

struct ProjPoint {
  FieldRef f = nullptr;
  bool inf = false;
  uint64_t v = 0;

  bool operator==(const ProjPoint& o) const {
    return f == o.f && inf == o.inf && (inf || v == o.v);
  }
};

ProjPoint pp_fin(FieldRef f, uint64_t v);
ProjPoint pp_inf(FieldRef f);
// canonical order: infinity first, then by value
bool pp_less(const ProjPoint& a, const ProjPoint& b);
ProjPoint pp_embed(const ProjPoint& a, FieldRef big);
std::string pp_to_string(const ProjPoint& a);

struct RatFunc {
  Poly num, den;  // reduced, den monic
  FieldRef field() const { return num.f; }
  int deg() const { return std::max(num.deg(), den.deg()); }
  bool operator==(const RatFunc& o) const {
    return num == o.num && den == o.den;
  }
};

RatFunc reduce(const Poly& num, const Poly& den);
RatFunc rf_embed(const RatFunc& R, FieldRef big);
// a*R + b
RatFunc rf_affine(uint64_t a, const RatFunc& R, uint64_t b);
// R((ax+b)/(cx+d)); entries are field values of R's context
RatFunc rf_compose_mobius(const RatFunc& R, uint64_t a, uint64_t b, uint64_t c,
                          uint64_t d);
// sum_i coeffs[i] (ax+b)^i (cx+d)^{D-i}, the unreduced composition part
Poly mobius_homogenize(const Poly& coeffs, int D, const Poly& nl,
                       const Poly& dl);
// ((a*R+b)/(c*R+d)) -- a Moebius map applied after R
RatFunc rf_mobius_after(uint64_t a, uint64_t b, uint64_t c, uint64_t d,
                        const RatFunc& R);
// h(R(x)) for a rational outer h
RatFunc rf_compose(const RatFunc& outer, const RatFunc& inner);
RatFunc rf_mul(const RatFunc& a, const RatFunc& b);
RatFunc rf_neg(const RatFunc& a);

ProjPoint eval_proj(const RatFunc& R, const ProjPoint& v, FieldRef target);

// unique reduced rational function of degree bounds (num_deg, den_deg)
// through the given finite samples
RatFunc rat_interpolate(const std::vector<std::pair<ProjPoint, ProjPoint>>& samples,
                        int num_deg, int den_deg);

std::string poly_to_string(const Poly& a);  // "[c0,c1,...]"

}  // namespace artinv

#endif
