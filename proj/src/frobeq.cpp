#include "artinv/frobeq.hpp"

#include <algorithm>

namespace artinv {

Poly frob_poly(const Mat& g) {
  FieldRef f = g.f;
  uint64_t q = f->order;
  std::vector<uint64_t> xq(q + 1, 0);
  xq[q] = 1;
  Poly lead = p_mul(p_of(f, xq), p_of(f, {g.d, g.c}));
  return p_sub(lead, p_of(f, {g.b, g.a}));
}

SGamma s_gamma(const Mat& g) {
  if (g.is_identity()) throw Error("s_gamma of the identity");
  FieldRef f = g.f;
  uint64_t q = f->order;
  SGamma out;
  out.t = mat_order(g);
  // rational solutions are the fixed points of gamma in P^1(F_q)
  FieldRef K2 = quadratic_ext(f);
  const EmbeddingMap& em = embed(f, K2);
  for (auto& z : fixed_points(g)) {
    if (z.inf) {
      out.rational.push_back(pp_inf(f));
    } else if (auto pre = em.preimage(z.v)) {
      out.rational.push_back(pp_fin(f, *pre));
    }
  }
  std::sort(out.rational.begin(), out.rational.end(), pp_less);
  // degree-t points: all non-rational roots of the Frobenius polynomial
  __uint128_t qt = 1;
  for (int i = 0; i < out.t; ++i) qt *= q;
  if (qt <= 10 * static_cast<__uint128_t>(brute_bound())) {
    FieldRef L = make_field(f->p, f->n * out.t);
    Poly w = frob_poly(g);
    for (uint64_t r : roots_in(w, L)) {
      if (frobenius(L, r, q, 1) == r) continue;  // rational
      out.degree_t.push_back(pp_fin(L, r));
    }
    out.listed = true;
    if (out.rational.size() + out.degree_t.size() != q + 1)
      throw CheckFail("|S_{gamma,q}| != q + 1");
  }
  return out;
}

FrobShape predict_factor_shape(const Mat& g) {
  if (g.is_identity()) throw Error("predict_factor_shape of a scalar matrix");
  FieldRef f = g.f;
  uint64_t q = f->order;
  FieldRef K2 = quadratic_ext(f);
  const EmbeddingMap& em = embed(f, K2);
  // iota - 2 = zeta + 1/zeta
  uint64_t s = f->sub(iota(g), f->from_int(2));
  Poly quad = p_of(f, {1, f->neg(s), 1});
  auto roots = roots_in(quad, K2);
  if (roots.empty()) throw CheckFail("zeta decomposition has no root");
  uint64_t zeta = roots.front();
  FrobShape out;
  if (zeta == em.apply(1)) {
    // iota = 4: p^{e-1} factors of degree p
    out.t = static_cast<int>(f->p);
    out.kappa = 0;
    out.count_t = static_cast<long>(q / f->p);
  } else if (f->p != 2 && zeta == em.apply(f->neg(1))) {
    // iota = 0: quadratic factors, kappa from the determinant square class
    out.t = 2;
    out.kappa = -quadratic_character(f, f->neg(g.det()));
    out.count_t = static_cast<long>(q + out.kappa) / 2;
  } else {
    out.t = static_cast<int>(mult_order(K2, zeta));
    out.kappa = em.preimage(zeta).has_value() ? -1 : 1;
    out.count_t = static_cast<long>(q + out.kappa) / out.t;
  }
  out.count_linear = static_cast<long>(q + 1) - out.t * out.count_t;
  if (out.count_linear != 1 - out.kappa)
    throw CheckFail("linear count != 1 - kappa");
  return out;
}

ShapeCheck verify_factor_shape(const Mat& g) {
  ShapeCheck out;
  out.predicted = predict_factor_shape(g);
  FieldRef f = g.f;
  Poly w = frob_poly(g);
  if (!p_squarefree(w))
    throw CheckFail("Frobenius polynomial has repeated roots");
  auto parts = ddf(w, f->order);
  FrobShape actual;
  actual.kappa = out.predicted.kappa;
  long linear = g.c == 0 ? 1 : 0;  // infinity counts as a rational solution
  long count_t = 0;
  int t = 1;
  for (auto& [d, part] : parts) {
    if (d == 1) {
      linear += part.deg();
    } else {
      if (t != 1 && t != d)
        throw CheckFail("two distinct irrational factor degrees");
      t = d;
      count_t += part.deg() / d;
    }
  }
  if (t == 1) t = out.predicted.t;  // no irrational part materialized
  actual.t = t;
  actual.count_t = count_t;
  actual.count_linear = linear;
  out.actual = actual;
  out.agree = actual == out.predicted;
  return out;
}

}  // namespace artinv
