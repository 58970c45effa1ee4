#include "artinv/pgl2.hpp"

#include <algorithm>
#include <array>

namespace artinv {

Mat mat_make(FieldRef f, uint64_t a, uint64_t b, uint64_t c, uint64_t d) {
  if (f->sub(f->mul(a, d), f->mul(b, c)) == 0)
    throw Error("singular matrix in PGL2");
  uint64_t lead = a ? a : (b ? b : (c ? c : d));
  uint64_t s = f->inv(lead);
  return Mat{f, f->mul(a, s), f->mul(b, s), f->mul(c, s), f->mul(d, s)};
}

Mat mat_id(FieldRef f) { return Mat{f, 1, 0, 0, 1}; }

Mat mat_mul(const Mat& x, const Mat& y) {
  FieldRef f = x.f;
  if (f != y.f) throw Error("mixed field contexts in mat_mul");
  return mat_make(f, f->add(f->mul(x.a, y.a), f->mul(x.b, y.c)),
                  f->add(f->mul(x.a, y.b), f->mul(x.b, y.d)),
                  f->add(f->mul(x.c, y.a), f->mul(x.d, y.c)),
                  f->add(f->mul(x.c, y.b), f->mul(x.d, y.d)));
}

Mat mat_inv(const Mat& x) {
  return mat_make(x.f, x.d, x.f->neg(x.b), x.f->neg(x.c), x.a);
}

bool mat_less(const Mat& x, const Mat& y) {
  return std::array<uint64_t, 4>{x.a, x.b, x.c, x.d} <
         std::array<uint64_t, 4>{y.a, y.b, y.c, y.d};
}

Mat mat_conj(const Mat& h, const Mat& g) {
  return mat_mul(mat_mul(h, g), mat_inv(h));
}

Mat mat_embed(const Mat& x, FieldRef big) {
  if (x.f == big) return x;
  const EmbeddingMap& em = embed(x.f, big);
  return mat_make(big, em.apply(x.a), em.apply(x.b), em.apply(x.c),
                  em.apply(x.d));
}

ProjPoint act(const Mat& g, const ProjPoint& v) {
  FieldRef L = v.f;
  Mat ge = mat_embed(g, L);
  if (v.inf) {
    if (ge.c == 0) return pp_inf(L);
    return pp_fin(L, L->div(ge.a, ge.c));
  }
  uint64_t den = L->add(L->mul(ge.c, v.v), ge.d);
  uint64_t num = L->add(L->mul(ge.a, v.v), ge.b);
  if (den == 0) {
    if (num == 0) throw CheckFail("degenerate Moebius action");
    return pp_inf(L);
  }
  return pp_fin(L, L->div(num, den));
}

int mat_order(const Mat& g) {
  Mat cur = g;
  int limit = static_cast<int>(g.f->order) + 2;
  for (int k = 1; k <= limit; ++k) {
    if (cur.is_identity()) return k;
    cur = mat_mul(cur, g);
  }
  throw CheckFail("projective order exceeded q+1");
}

uint64_t iota(const Mat& g) {
  FieldRef f = g.f;
  uint64_t tr = f->add(g.a, g.d);
  return f->div(f->mul(tr, tr), g.det());
}

FieldRef quadratic_ext(FieldRef base) {
  return make_field(base->p, 2 * base->n);
}

uint64_t least_irrational(FieldRef base, FieldRef ext) {
  uint64_t q = base->order;
  for (uint64_t v = 0; v < ext->order; ++v)
    if (frobenius(ext, v, q, 1) != v) return v;
  throw CheckFail("no irrational element");
}

std::vector<ProjPoint> fixed_points(const Mat& g) {
  if (g.is_identity()) throw Error("fixed points of the identity");
  FieldRef f = g.f;
  FieldRef K2 = quadratic_ext(f);
  std::vector<ProjPoint> out;
  if (g.c == 0) {
    out.push_back(pp_inf(K2));
    if (g.a != g.d)
      out.push_back(pp_embed(pp_fin(f, f->div(g.b, f->sub(g.d, g.a))), K2));
  } else {
    // roots of c z^2 + (d-a) z - b
    Poly quad = p_of(f, {f->neg(g.b), f->sub(g.d, g.a), g.c});
    for (uint64_t r : roots_in(quad, K2)) out.push_back(pp_fin(K2, r));
  }
  std::sort(out.begin(), out.end(), pp_less);
  if (out.empty() || out.size() > 2)
    throw CheckFail("fixed point count out of range");
  return out;
}

Mat mat_taking_std_triple(FieldRef f, const ProjPoint& pa, const ProjPoint& pb,
                          const ProjPoint& pc) {
  // takes (infinity, 0, 1) to (pa, pb, pc)
  if (pa.inf) {
    uint64_t b = pb.v, c = pc.v;
    return mat_make(f, f->sub(c, b), b, 0, 1);
  }
  if (pb.inf) {
    uint64_t a = pa.v, c = pc.v;
    return mat_make(f, a, f->sub(c, a), 1, 0);
  }
  if (pc.inf) {
    uint64_t a = pa.v, b = pb.v;
    return mat_make(f, a, f->neg(b), 1, f->neg(1));
  }
  uint64_t a = pa.v, b = pb.v, c = pc.v;
  return mat_make(f, f->mul(a, f->sub(b, c)), f->mul(b, f->sub(c, a)),
                  f->sub(b, c), f->sub(c, a));
}

namespace {

// unnormalized 2x2 over an extension; used for frame-change algebra
struct Raw {
  FieldRef f;
  uint64_t a, b, c, d;
};

Raw raw_mul(const Raw& x, const Raw& y) {
  FieldRef f = x.f;
  return Raw{f, f->add(f->mul(x.a, y.a), f->mul(x.b, y.c)),
             f->add(f->mul(x.a, y.b), f->mul(x.b, y.d)),
             f->add(f->mul(x.c, y.a), f->mul(x.d, y.c)),
             f->add(f->mul(x.c, y.b), f->mul(x.d, y.d))};
}

Raw raw_adj(const Raw& x) {
  return Raw{x.f, x.d, x.f->neg(x.b), x.f->neg(x.c), x.a};
}

Mat descend_mat(const Raw& m, FieldRef base) {
  // canonicalize projectively over the extension, then drop to base
  FieldRef K = m.f;
  uint64_t lead = m.a ? m.a : (m.b ? m.b : (m.c ? m.c : m.d));
  if (lead == 0) throw CheckFail("zero matrix");
  uint64_t s = K->inv(lead);
  const EmbeddingMap& em = embed(base, K);
  auto down = [&](uint64_t v) {
    auto pre = em.preimage(K->mul(v, s));
    if (!pre) throw CheckFail("matrix does not descend to the base field");
    return *pre;
  };
  return mat_make(base, down(m.a), down(m.b), down(m.c), down(m.d));
}

}  // namespace

Mat c_lambda(FieldRef ext, uint64_t lambda) {
  if (ext->n % 2 != 0) throw Error("c_lambda needs a quadratic extension");
  FieldRef base = make_field(ext->p, ext->n / 2);
  uint64_t lq = frobenius(ext, lambda, base->order, 1);
  if (lq == lambda) throw Error("lambda is rational");
  return Mat{ext, lambda, ext->neg(lq), 1, ext->neg(1)};
}

Mat d_delta_lambda(FieldRef base, uint64_t delta, uint64_t lambda) {
  FieldRef K2 = quadratic_ext(base);
  uint64_t q = base->order;
  uint64_t dq = frobenius(K2, delta, q, 1);
  if (dq == delta) throw Error("delta is rational");
  Mat C = c_lambda(K2, lambda);
  Raw rc{K2, C.a, C.b, C.c, C.d};
  Raw diag{K2, dq, 0, 0, delta};
  Raw m = raw_mul(raw_mul(rc, diag), raw_adj(rc));
  return descend_mat(m, base);
}

Mat e_zeta_lambda(FieldRef base, uint64_t zeta, uint64_t lambda) {
  FieldRef K2 = quadratic_ext(base);
  uint64_t q = base->order;
  if (K2->pow(zeta, q + 1) != 1) throw Error("zeta^{q+1} != 1");
  if (frobenius(K2, lambda, q, 1) == lambda) throw Error("lambda is rational");
  Mat C = c_lambda(K2, lambda);
  Raw rc{K2, C.a, C.b, C.c, C.d};
  Raw diag{K2, zeta, 0, 0, 1};
  Raw m = raw_mul(raw_mul(rc, diag), raw_adj(rc));
  Mat E = descend_mat(m, base);
  if (zeta != 1 && static_cast<uint64_t>(mat_order(E)) != mult_order(K2, zeta))
    throw CheckFail("order of E_{zeta,lambda} != order of zeta");
  return E;
}

DicksonForm dickson_classify(const Mat& g) {
  if (g.is_identity()) throw Error("dickson_classify of the identity");
  FieldRef f = g.f;
  FieldRef K2 = quadratic_ext(f);
  const EmbeddingMap& em = embed(f, K2);
  auto fps = fixed_points(g);

  auto rational = [&](const ProjPoint& z) {
    return z.inf || em.preimage(z.v).has_value();
  };
  auto down = [&](const ProjPoint& z) -> ProjPoint {
    if (z.inf) return pp_inf(f);
    return pp_fin(f, *em.preimage(z.v));
  };

  DicksonForm out;
  if (fps.size() == 1) {
    if (!rational(fps[0])) throw CheckFail("repeated fixed point irrational");
    ProjPoint z = down(fps[0]);
    Mat conj =
        z.inf ? mat_id(f) : mat_make(f, z.v, f->neg(1), 1, 0);  // inf -> z
    Mat N = mat_conj(mat_inv(conj), g);
    if (!(N.a == 1 && N.c == 0 && N.d == 1))
      throw CheckFail("case (a) normal form failed");
    out.kind = DicksonForm::Case::A;
    out.param = N.b;
    out.conj = conj;
    return out;
  }
  if (rational(fps[0]) && rational(fps[1])) {
    ProjPoint z1 = down(fps[0]), z2 = down(fps[1]);
    auto third = [&](const ProjPoint& w1, const ProjPoint& w2) {
      for (uint64_t v = 0;; ++v) {
        ProjPoint c = pp_fin(f, v);
        if (!(c == w1) && !(c == w2)) return c;
      }
    };
    auto diag_param = [&](const ProjPoint& w1, const ProjPoint& w2) {
      // alpha maps w1 -> inf, w2 -> 0
      Mat alpha = mat_inv(mat_taking_std_triple(f, w1, w2, third(w1, w2)));
      Mat N = mat_conj(alpha, g);
      if (!(N.b == 0 && N.c == 0))
        throw CheckFail("case (b) normal form failed");
      return std::make_pair(f->div(N.a, N.d), mat_inv(alpha));
    };
    auto [p1, c1] = diag_param(z1, z2);
    auto [p2, c2] = diag_param(z2, z1);
    out.kind = DicksonForm::Case::B;
    if (p1 <= p2) {
      out.param = p1;
      out.conj = c1;
    } else {
      out.param = p2;
      out.conj = c2;
    }
    Mat N = mat_make(f, out.param, 0, 0, 1);
    if (!(mat_conj(out.conj, N) == g))
      throw CheckFail("case (b) conjugator failed");
    return out;
  }
  // conjugate pair {lambda, lambda^q}
  if (fps[0].inf || fps[1].inf) throw CheckFail("irrational pair contains inf");
  uint64_t lambda = std::min(fps[0].v, fps[1].v);
  Mat C = c_lambda(K2, lambda);
  Raw rc{K2, C.a, C.b, C.c, C.d};
  Mat ge = mat_embed(g, K2);
  Raw rg{K2, ge.a, ge.b, ge.c, ge.d};
  Raw N = raw_mul(raw_mul(raw_adj(rc), rg), rc);
  if (N.b != 0 || N.c != 0) throw CheckFail("case (c) normal form failed");
  uint64_t zeta = K2->div(N.a, N.d);
  if (K2->pow(zeta, f->order + 1) != 1)
    throw CheckFail("case (c) zeta not in mu_{q+1}");
  out.kind = DicksonForm::Case::C;
  out.param = zeta;
  out.lambda = lambda;
  out.conj = Mat{K2, C.a, C.b, C.c, C.d};
  return out;
}

std::string mat_to_string(const Mat& g) {
  return elem_to_string(g.f, g.a) + "," + elem_to_string(g.f, g.b) + "," +
         elem_to_string(g.f, g.c) + "," + elem_to_string(g.f, g.d);
}

Mat mat_from_string(FieldRef f, const std::string& s) {
  // split on commas at bracket depth zero
  std::vector<std::string> parts;
  std::string cur;
  int depth = 0;
  for (char ch : s) {
    if (ch == '[') ++depth;
    if (ch == ']') --depth;
    if (ch == ',' && depth == 0) {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur += ch;
    }
  }
  parts.push_back(cur);
  if (parts.size() != 4) throw Error("matrix needs four entries: " + s);
  return mat_make(f, elem_from_string(f, parts[0]),
                  elem_from_string(f, parts[1]), elem_from_string(f, parts[2]),
                  elem_from_string(f, parts[3]));
}

}  // namespace artinv
