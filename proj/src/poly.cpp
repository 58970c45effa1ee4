#include "artinv/poly.hpp"

#include <algorithm>

namespace artinv {

using detail::VP;

namespace {
void check_same(FieldRef a, FieldRef b, const char* what) {
  if (a != b) throw Error(std::string("mixed field contexts in ") + what);
}
Poly wrap(FieldRef f, VP c) { return Poly{f, std::move(c)}; }
}  // namespace

Poly p_zero(FieldRef f) { return Poly{f, {}}; }
Poly p_const(FieldRef f, uint64_t k) { return k ? Poly{f, {k}} : Poly{f, {}}; }
Poly p_x(FieldRef f) { return Poly{f, {0, 1}}; }

Poly p_of(FieldRef f, std::vector<uint64_t> coeffs) {
  for (uint64_t c : coeffs)
    if (c >= f->order) throw Error("coefficient out of range");
  detail::vp_trim(coeffs);
  return Poly{f, std::move(coeffs)};
}

Poly p_add(const Poly& a, const Poly& b) {
  check_same(a.f, b.f, "add");
  return wrap(a.f, detail::vp_add(a.f, a.c, b.c));
}
Poly p_sub(const Poly& a, const Poly& b) {
  check_same(a.f, b.f, "sub");
  return wrap(a.f, detail::vp_sub(a.f, a.c, b.c));
}
Poly p_mul(const Poly& a, const Poly& b) {
  check_same(a.f, b.f, "mul");
  return wrap(a.f, detail::vp_mul(a.f, a.c, b.c));
}
Poly p_scale(const Poly& a, uint64_t k) {
  return wrap(a.f, detail::vp_scale(a.f, a.c, k));
}
Poly p_monic(Poly a) { return wrap(a.f, detail::vp_monic(a.f, std::move(a.c))); }

void p_divmod(const Poly& a, const Poly& b, Poly& q, Poly& r) {
  check_same(a.f, b.f, "divmod");
  VP vq, vr;
  detail::vp_divrem(a.f, a.c, b.c, vq, vr);
  q = wrap(a.f, std::move(vq));
  r = wrap(a.f, std::move(vr));
}
Poly p_rem(const Poly& a, const Poly& b) {
  check_same(a.f, b.f, "rem");
  return wrap(a.f, detail::vp_rem(a.f, a.c, b.c));
}
Poly p_gcd(const Poly& a, const Poly& b) {
  check_same(a.f, b.f, "gcd");
  return wrap(a.f, detail::vp_gcd_monic(a.f, a.c, b.c));
}
Poly p_powmod(const Poly& base, uint64_t e, const Poly& m) {
  check_same(base.f, m.f, "powmod");
  return wrap(base.f, detail::vp_powmod(base.f, base.c, e, m.c));
}

Poly p_pow(const Poly& base, uint64_t e) {
  Poly r = p_const(base.f, 1), b = base;
  while (e) {
    if (e & 1) r = p_mul(r, b);
    e >>= 1;
    if (e) b = p_mul(b, b);
  }
  return r;
}

Poly p_compose(const Poly& outer, const Poly& inner) {
  check_same(outer.f, inner.f, "compose");
  Poly r = p_zero(outer.f);
  for (size_t i = outer.c.size(); i-- > 0;)
    r = p_add(p_mul(r, inner), p_const(outer.f, outer.c[i]));
  return r;
}

Poly p_derivative(const Poly& a) { return wrap(a.f, detail::vp_deriv(a.f, a.c)); }
uint64_t p_eval(const Poly& a, uint64_t x) { return detail::vp_eval(a.f, a.c, x); }

Poly p_from_roots(FieldRef f, const std::vector<uint64_t>& roots) {
  Poly r = p_const(f, 1);
  for (uint64_t v : roots) r = p_mul(r, Poly{f, {f->neg(v), 1}});
  return r;
}

bool p_squarefree(const Poly& a) {
  if (a.deg() <= 0) return true;
  return p_gcd(a, p_derivative(a)).deg() == 0;
}

Poly p_embed(const Poly& a, FieldRef big) {
  if (a.f == big) return a;
  const EmbeddingMap& em = embed(a.f, big);
  VP c(a.c.size());
  for (size_t i = 0; i < a.c.size(); ++i) c[i] = em.apply(a.c[i]);
  return wrap(big, std::move(c));
}

Poly p_descend(const Poly& a, FieldRef small) {
  if (a.f == small) return a;
  const EmbeddingMap& em = embed(small, a.f);
  VP c(a.c.size());
  for (size_t i = 0; i < a.c.size(); ++i) {
    auto pre = em.preimage(a.c[i]);
    if (!pre) throw Error("polynomial does not descend to subfield");
    c[i] = *pre;
  }
  return wrap(small, std::move(c));
}

Poly frob_power_mod(const Poly& h, uint64_t q, int d) {
  if (h.deg() < 1) throw Error("frob_power_mod needs a nonconstant modulus");
  return wrap(h.f, detail::vp_xpow_qd_mod(h.f, q, d, h.c));
}

std::vector<std::pair<int, Poly>> ddf(const Poly& h0, uint64_t q) {
  if (!p_squarefree(h0)) throw Error("ddf requires squarefree input");
  Poly h = p_monic(h0);
  std::vector<std::pair<int, Poly>> out;
  Poly r = p_rem(p_x(h.f), h);
  int d = 0;
  while (h.deg() > 0) {
    ++d;
    if (2 * d > h.deg()) {
      out.emplace_back(h.deg(), h);
      break;
    }
    r = p_powmod(r, q, h);
    Poly g = p_gcd(p_sub(r, p_x(h.f)), h);
    if (g.deg() > 0) {
      out.emplace_back(d, g);
      Poly quo, rem;
      p_divmod(h, g, quo, rem);
      h = quo;
      if (h.deg() > 0) r = p_rem(r, h);
    }
  }
  return out;
}

std::vector<uint64_t> roots_in(const Poly& h, FieldRef ext) {
  if (ext->order > 10 * brute_bound() && h.deg() > 64)
    throw Error("roots_in: extension exceeds brute bound");
  Poly he = p_embed(h, ext);
  return detail::vp_roots(ext, he.c);
}

ProjPoint pp_fin(FieldRef f, uint64_t v) { return ProjPoint{f, false, v}; }
ProjPoint pp_inf(FieldRef f) { return ProjPoint{f, true, 0}; }

bool pp_less(const ProjPoint& a, const ProjPoint& b) {
  if (a.inf != b.inf) return a.inf;
  if (a.inf) return false;
  return a.v < b.v;
}

ProjPoint pp_embed(const ProjPoint& a, FieldRef big) {
  if (a.f == big) return a;
  if (a.inf) return pp_inf(big);
  return pp_fin(big, embed(a.f, big).apply(a.v));
}

std::string pp_to_string(const ProjPoint& a) {
  return a.inf ? "inf" : elem_to_string(a.f, a.v);
}

RatFunc reduce(const Poly& num, const Poly& den) {
  check_same(num.f, den.f, "reduce");
  if (den.is_zero()) throw Error("zero denominator");
  Poly g = p_gcd(num, den);
  Poly n = num, d = den;
  if (g.deg() > 0) {
    Poly q, r;
    p_divmod(num, g, q, r);
    n = q;
    p_divmod(den, g, q, r);
    d = q;
  }
  uint64_t s = d.f->inv(d.lc());
  return RatFunc{p_scale(n, s), p_scale(d, s)};
}

RatFunc rf_embed(const RatFunc& R, FieldRef big) {
  return RatFunc{p_embed(R.num, big), p_embed(R.den, big)};
}

RatFunc rf_affine(uint64_t a, const RatFunc& R, uint64_t b) {
  if (a == 0) throw Error("affine transform needs a != 0");
  Poly n = p_add(p_scale(R.num, a), p_scale(R.den, b));
  return reduce(n, R.den);
}

// sum_i coeffs[i] (ax+b)^i (cx+d)^{D-i} by Horner in (ax+b)
Poly mobius_homogenize(const Poly& coeffs, int D, const Poly& nl,
                       const Poly& dl) {
  FieldRef f = coeffs.f;
  std::vector<Poly> dn(D + 1);
  dn[0] = p_const(f, 1);
  for (int i = 1; i <= D; ++i) dn[i] = p_mul(dn[i - 1], dl);
  Poly N = p_zero(f);
  for (int i = D; i >= 0; --i) {
    N = p_mul(N, nl);
    if (coeffs.coeff(i)) N = p_add(N, p_scale(dn[D - i], coeffs.coeff(i)));
  }
  return N;
}

RatFunc rf_compose_mobius(const RatFunc& R, uint64_t a, uint64_t b, uint64_t c,
                          uint64_t d) {
  FieldRef f = R.field();
  if (f->sub(f->mul(a, d), f->mul(b, c)) == 0)
    throw Error("singular Moebius map");
  int D = std::max(R.num.deg(), R.den.deg());
  Poly nl = p_of(f, {b, a}), dl = p_of(f, {d, c});
  Poly N = mobius_homogenize(R.num, D, nl, dl);
  Poly Dn = mobius_homogenize(R.den, D, nl, dl);
  return reduce(N, Dn);
}

RatFunc rf_mobius_after(uint64_t a, uint64_t b, uint64_t c, uint64_t d,
                        const RatFunc& R) {
  FieldRef f = R.field();
  if (f->sub(f->mul(a, d), f->mul(b, c)) == 0)
    throw Error("singular Moebius map");
  Poly n = p_add(p_scale(R.num, a), p_scale(R.den, b));
  Poly dn = p_add(p_scale(R.num, c), p_scale(R.den, d));
  return reduce(n, dn);
}

RatFunc rf_compose(const RatFunc& outer, const RatFunc& inner) {
  check_same(outer.field(), inner.field(), "rf_compose");
  FieldRef f = outer.field();
  int m = outer.num.deg(), mp = outer.den.deg();
  int k = std::max(m, mp);
  std::vector<Poly> fp(k + 1), gp(k + 1);
  fp[0] = p_const(f, 1);
  gp[0] = p_const(f, 1);
  for (int i = 1; i <= k; ++i) {
    fp[i] = p_mul(fp[i - 1], inner.num);
    gp[i] = p_mul(gp[i - 1], inner.den);
  }
  Poly N = p_zero(f), D = p_zero(f);
  for (int i = 0; i <= m; ++i)
    if (outer.num.coeff(i))
      N = p_add(N, p_scale(p_mul(fp[i], gp[k - i]), outer.num.coeff(i)));
  for (int i = 0; i <= mp; ++i)
    if (outer.den.coeff(i))
      D = p_add(D, p_scale(p_mul(fp[i], gp[k - i]), outer.den.coeff(i)));
  return reduce(N, D);
}

RatFunc rf_mul(const RatFunc& a, const RatFunc& b) {
  return reduce(p_mul(a.num, b.num), p_mul(a.den, b.den));
}

RatFunc rf_neg(const RatFunc& a) {
  return RatFunc{p_scale(a.num, a.num.f->neg(1)), a.den};
}

ProjPoint eval_proj(const RatFunc& R, const ProjPoint& v, FieldRef target) {
  RatFunc Re = rf_embed(R, target);
  ProjPoint ve = pp_embed(v, target);
  if (ve.inf) {
    int dn = Re.num.deg(), dd = Re.den.deg();
    if (dn > dd) return pp_inf(target);
    if (dn < dd) return pp_fin(target, 0);
    return pp_fin(target, target->div(Re.num.lc(), Re.den.lc()));
  }
  uint64_t nv = p_eval(Re.num, ve.v);
  uint64_t dv = p_eval(Re.den, ve.v);
  if (dv == 0) {
    if (nv == 0) throw CheckFail("0/0 while evaluating a reduced function");
    return pp_inf(target);
  }
  return pp_fin(target, target->div(nv, dv));
}

RatFunc rat_interpolate(
    const std::vector<std::pair<ProjPoint, ProjPoint>>& samples, int num_deg,
    int den_deg) {
  if (samples.empty()) throw Error("rat_interpolate: no samples");
  FieldRef f = samples[0].first.f;
  int need = num_deg + den_deg + 2;
  if (static_cast<int>(samples.size()) < need)
    throw Error("rat_interpolate: insufficient samples");
  for (auto& [x, y] : samples) {
    if (x.inf || y.inf) throw Error("rat_interpolate: samples must be finite");
    if (x.f != f || y.f != f) throw Error("rat_interpolate: mixed fields");
  }
  int cols = num_deg + 1 + den_deg + 1;
  int rows = static_cast<int>(samples.size());
  std::vector<std::vector<uint64_t>> m(rows, std::vector<uint64_t>(cols, 0));
  for (int s = 0; s < rows; ++s) {
    uint64_t x = samples[s].first.v, y = samples[s].second.v;
    uint64_t xp = 1;
    for (int i = 0; i <= num_deg; ++i) {
      m[s][i] = xp;
      xp = f->mul(xp, x);
    }
    xp = 1;
    for (int i = 0; i <= den_deg; ++i) {
      m[s][num_deg + 1 + i] = f->neg(f->mul(y, xp));
      xp = f->mul(xp, x);
    }
  }
  std::vector<int> pivot_of_col(cols, -1);
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int piv = -1;
    for (int i = r; i < rows; ++i)
      if (m[i][c]) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    std::swap(m[piv], m[r]);
    uint64_t s = f->inv(m[r][c]);
    for (auto& x : m[r]) x = f->mul(x, s);
    for (int i = 0; i < rows; ++i) {
      if (i == r || m[i][c] == 0) continue;
      uint64_t k = m[i][c];
      for (int j = 0; j < cols; ++j)
        m[i][j] = f->sub(m[i][j], f->mul(k, m[r][j]));
    }
    pivot_of_col[c] = r;
    ++r;
  }
  if (r >= cols) throw Error("rat_interpolate: inconsistent samples");
  int free_col = -1;
  for (int c = cols - 1; c >= 0; --c)
    if (pivot_of_col[c] < 0) {
      free_col = c;
      break;
    }
  std::vector<uint64_t> sol(cols, 0);
  sol[free_col] = 1;
  for (int c = 0; c < cols; ++c) {
    int pr = pivot_of_col[c];
    if (pr >= 0) sol[c] = f->neg(m[pr][free_col]);
  }
  Poly A = p_of(f, std::vector<uint64_t>(sol.begin(), sol.begin() + num_deg + 1));
  Poly B = p_of(f, std::vector<uint64_t>(sol.begin() + num_deg + 1, sol.end()));
  if (B.is_zero()) throw Error("rat_interpolate: zero denominator");
  RatFunc R = reduce(A, B);
  for (auto& [x, y] : samples) {
    ProjPoint got = eval_proj(R, x, f);
    if (!(got == y)) throw Error("rat_interpolate: inconsistent samples");
  }
  return R;
}

std::string poly_to_string(const Poly& a) {
  std::string s = "[";
  for (size_t i = 0; i < a.c.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(a.c[i]);
  }
  return s + "]";
}

}  // namespace artinv
