#include "artinv/artin.hpp"

#include <algorithm>

namespace artinv {

namespace {

ArtinResult irregular_result() { return ArtinResult{false, {}}; }

ArtinResult regular_result(ConjClass cls) {
  return ArtinResult{true, std::move(cls)};
}

// class matching over h = f - tau g: gamma matches iff some root v of h
// has v^q = gamma(v)
ArtinResult inv_with_classes(const QuotientMap& Q, const ProjPoint& tau,
                             const std::vector<ConjClass>& classes) {
  FieldRef f = Q.map.field();
  const Subgroup& G = Q.group;
  if (tau.f != f) throw Error("inv_general: tau must live in the base field");
  if (tau.inf) {
    if (orbit_infinity(G).size() == G.size())
      return regular_result(identity_class(G));
    return irregular_result();
  }
  Poly h = p_sub(Q.map.num, p_scale(Q.map.den, tau.v));
  if (h.deg() != static_cast<int>(G.size()))
    throw CheckFail("f - tau g has wrong degree");
  if (!p_squarefree(h)) return irregular_result();
  Poly r = frob_power_mod(h, f->order, 1);
  const ConjClass* found = nullptr;
  for (auto& cls : classes) {
    const Mat& g = cls.rep;
    // (c x + d) r(x) - (a x + b) mod h
    Poly t = p_rem(
        p_sub(p_mul(p_of(f, {g.d, g.c}), r), p_of(f, {g.b, g.a})), h);
    if (p_gcd(h, t).deg() > 0) {
      if (found) throw CheckFail("two classes match a regular tau");
      found = &cls;
    }
  }
  if (!found) throw CheckFail("no class matches a regular tau");
  return regular_result(*found);
}

}  // namespace

ArtinResult inv_general(const QuotientMap& Q, const ProjPoint& tau) {
  if (tau.inf || !p_squarefree(p_sub(Q.map.num, p_scale(Q.map.den, tau.v)))) {
    // cheap paths that do not need the class partition
    FieldRef f = Q.map.field();
    if (tau.f != f) throw Error("inv_general: tau must live in the base field");
    if (tau.inf) {
      if (orbit_infinity(Q.group).size() == Q.group.size())
        return regular_result(identity_class(Q.group));
      return irregular_result();
    }
    return irregular_result();
  }
  return inv_with_classes(Q, tau, conjugacy_classes(Q.group));
}

ArtinResult inv_general(const QuotientMap& Q, const ProjPoint& tau,
                        const std::vector<ConjClass>& classes) {
  return inv_with_classes(Q, tau, classes);
}

// ---------------------------------------------------------------------------
// tripartite symbol

namespace {

int match_cube_root(FieldRef K, uint64_t s, uint64_t omega) {
  if (s == 1) return 0;
  if (s == omega) return 1;
  if (s == K->mul(omega, omega)) return 2;
  throw CheckFail("cube-power landed outside mu_3");
}

int tripartite_with(FieldRef f, uint64_t tau, bool alt_omega) {
  uint64_t q = f->order;
  uint64_t three = f->from_int(3), nine = f->from_int(9);
  uint64_t reg = f->add(f->sub(f->mul(tau, tau), f->mul(three, tau)), nine);
  if (reg == 0) throw Error("tripartite symbol of an irregular element");
  if (f->p == 3) {
    if (tau == 0) throw Error("tripartite symbol of an irregular element");
    FieldRef f3 = make_field(3, 1);
    return static_cast<int>(trace_to(f, f->inv(tau), f3));
  }
  auto [K, omega0] = primitive_cube_root(f);
  uint64_t omega = alt_omega ? K->mul(omega0, omega0) : omega0;
  const EmbeddingMap& em = embed(f, K);
  uint64_t tK = em.apply(tau);
  uint64_t w2 = K->mul(omega, omega);
  uint64_t numer = K->add(tK, K->mul(em.apply(three), w2));
  uint64_t denom = K->add(tK, K->mul(em.apply(three), omega));
  uint64_t A = K->div(numer, denom);
  uint64_t s = K->pow(A, (q * q - 1) / 3);
  return match_cube_root(K, s, omega);
}

}  // namespace

int tripartite_symbol(FieldRef f, uint64_t tau) {
  return tripartite_with(f, tau, false);
}

int tripartite_symbol_alt(FieldRef f, uint64_t tau) {
  return tripartite_with(f, tau, true);
}

// ---------------------------------------------------------------------------
// closed forms

namespace {

Mat beta_mat(FieldRef f) { return mat_make(f, 1, f->neg(1), 1, 0); }

ArtinResult cf_kummer(FieldRef f, uint64_t n, const Subgroup& G,
                      const ProjPoint& tau) {
  if (tau.inf || tau.v == 0) return irregular_result();
  uint64_t zeta = f->pow(tau.v, (f->order - 1) / n);
  return regular_result(class_of(G, mat_make(f, zeta, 0, 0, 1)));
}

ArtinResult cf_order2(FieldRef f, uint64_t c, const Subgroup& G,
                      const ProjPoint& tau) {
  if (tau.inf) return irregular_result();
  Mat flip = mat_make(f, 0, c, 1, 0);
  if (f->p != 2) {
    uint64_t disc = f->sub(f->mul(tau.v, tau.v), f->mul(f->from_int(4), c));
    int A = disc == 0 ? 0 : quadratic_character(f, disc);
    if (A == 0) return irregular_result();
    Mat g = A == 1 ? mat_id(f) : flip;
    return regular_result(class_of(G, g));
  }
  if (tau.v == 0) return irregular_result();
  FieldRef f2 = make_field(2, 1);
  uint64_t j = trace_to(f, f->div(c, f->mul(tau.v, tau.v)), f2);
  return regular_result(class_of(G, j == 0 ? mat_id(f) : flip));
}

ArtinResult cf_klein(FieldRef f, uint64_t b, const Subgroup& G,
                     const ProjPoint& tau) {
  if (tau.inf || tau.v == 0 || tau.v == b) return irregular_result();
  int A = quadratic_character(f, tau.v);
  int B = quadratic_character(f, f->sub(tau.v, b));
  uint64_t Ae = A == 1 ? 1 : f->neg(1);
  Mat g = mat_make(f, Ae, 0, 0, 1);
  if (A * B == -1) g = mat_mul(g, mat_make(f, 0, b, 1, 0));
  return regular_result(class_of(G, g));
}

ArtinResult cf_g3(FieldRef f, const Subgroup& G, const ProjPoint& tau) {
  if (tau.inf) {
    return orbit_infinity(G).size() == G.size()
               ? regular_result(identity_class(G))
               : irregular_result();
  }
  uint64_t three = f->from_int(3), nine = f->from_int(9);
  if (f->add(f->sub(f->mul(tau.v, tau.v), f->mul(three, tau.v)), nine) == 0)
    return irregular_result();
  int ell = tripartite_symbol(f, tau.v);
  Mat g = mat_id(f);
  Mat beta = beta_mat(f);
  for (int i = 0; i < ell; ++i) g = mat_mul(g, beta);
  return regular_result(class_of(G, g));
}

// z with z^2 - 3z = tau in F_q, when it exists
std::optional<uint64_t> g6_split_point(FieldRef f, uint64_t tau) {
  if (f->p != 2) {
    uint64_t disc = f->add(f->from_int(9),
                           f->mul(f->from_int(4), tau));  // 9 + 4 tau
    auto s = sqrt_elem(f, disc);
    if (!s) return std::nullopt;
    return f->div(f->add(f->from_int(3), *s), f->from_int(2));
  }
  // char 2: z^2 + z = tau, solvable iff Tr(tau) = 0
  FieldRef f2 = make_field(2, 1);
  if (trace_to(f, tau, f2) != 0) return std::nullopt;
  for (uint64_t z = 0; z < f->order; ++z)
    if (f->add(f->mul(z, z), z) == tau) return z;
  throw CheckFail("trace-zero Artin-Schreier equation has no solution");
}

ArtinResult cf_g6(FieldRef f, const Subgroup& G, const ProjPoint& tau) {
  if (tau.inf) return irregular_result();
  // irregular set S by characteristic
  if (f->p == 2) {
    if (tau.v == 1) return irregular_result();
  } else if (f->p == 3) {
    if (tau.v == 0) return irregular_result();
  } else {
    uint64_t nine = f->from_int(9);
    uint64_t m94 = f->neg(f->div(nine, f->from_int(4)));
    if (tau.v == f->neg(nine) || tau.v == m94) return irregular_result();
  }
  auto z = g6_split_point(f, tau.v);
  if (!z) return regular_result(class_of(G, mat_make(f, 0, 1, 1, 0)));
  int ell = tripartite_symbol(f, *z);
  Mat g = mat_id(f);
  for (int i = 0; i < ell; ++i) g = mat_mul(g, beta_mat(f));
  return regular_result(class_of(G, g));
}

ArtinResult cf_borel(FieldRef f, const Subgroup& G, const ProjPoint& tau) {
  if (tau.inf || tau.v == 0) return irregular_result();
  Mat g = tau.v == 1 ? mat_make(f, 1, 1, 0, 1) : mat_make(f, tau.v, 0, 0, 1);
  return regular_result(class_of(G, g));
}

ArtinResult cf_borel_sub(FieldRef f, uint64_t P, const Subgroup& G,
                         const ProjPoint& tau) {
  if (tau.inf) return irregular_result();
  const PCoords& pc = pcoords(f, P);
  const EmbeddingMap& em = embed(pc.fP, f);
  if (P == 2) {
    // B_2 is the order-2 unipotent group; every finite tau is regular and
    // the invariant is the absolute-trace translation
    uint64_t tr = trace_to(f, tau.v, pc.fP);
    Mat g = tr == 0 ? mat_id(f) : mat_make(f, 1, 1, 0, 1);
    return regular_result(class_of(G, g));
  }
  if (tau.v == 0) return irregular_result();
  uint64_t N = norm_to(f, tau.v, pc.fP);
  if (N != 1)
    return regular_result(class_of(G, mat_make(f, em.apply(N), 0, 0, 1)));
  // least s with s^{P-1} = tau
  uint64_t s = 0;
  for (uint64_t v = 1; v < f->order; ++v)
    if (f->pow(v, P - 1) == tau.v) {
      s = v;
      break;
    }
  if (s == 0) throw CheckFail("N(tau) = 1 but tau is not a (P-1)-th power");
  uint64_t tr = trace_to(f, s, pc.fP);
  Mat g = tr == 0 ? mat_id(f) : mat_make(f, 1, 1, 0, 1);
  return regular_result(class_of(G, g));
}

ArtinResult cf_unipotent(FieldRef f, const Subspace& W, const Subgroup& G,
                         const ProjPoint& tau) {
  if (tau.inf) return irregular_result();
  auto [QW, QY] = reciprocity_pair(W);
  uint64_t w = add_eval(QY, tau.v);
  return regular_result(class_of(G, mat_make(f, 1, w, 0, 1)));
}

// transported closed form for cyclic groups in Dickson cases (a)/(b)
ArtinResult cf_cyclic_conjugated(FieldRef f, const Mat& gen,
                                 const DicksonForm& form, const Subgroup& G,
                                 const ProjPoint& tau) {
  int ell = mat_order(gen);
  QuotientMap Q1;
  if (form.kind == DicksonForm::Case::A) {
    Subspace W = make_subspace(f, f->p, {form.param});
    Poly num = addpoly_to_poly(qw_from_subspace(W));
    Subgroup NG = unipotent_group(f, W);
    Q1 = QuotientMap{NG, RatFunc{num, p_const(f, 1)}, {}};
  } else {
    std::vector<uint64_t> c(ell + 1, 0);
    c[ell] = 1;
    Q1 = QuotientMap{kummer_group(f, ell), RatFunc{p_of(f, c), p_const(f, 1)},
                     {}};
  }
  auto [alpha, beta] = conjugation_frame(Q1, form.conj);
  ProjPoint tau1 = act(mat_inv(beta), tau);
  ArtinResult r1;
  if (form.kind == DicksonForm::Case::A) {
    if (tau1.inf) return irregular_result();
    // Q_W for W = b F_p: inv = (1 w; 0 1), w = b Tr_{F_q/F_p}(tau / b^p)
    uint64_t b = form.param;
    FieldRef fp = make_field(f->p, 1);
    uint64_t w = f->mul(
        b, embed(fp, f).apply(
               trace_to(f, f->div(tau1.v, f->pow(b, f->p)), fp)));
    r1 = regular_result(class_of(Q1.group, mat_make(f, 1, w, 0, 1)));
  } else {
    r1 = cf_kummer(f, ell, Q1.group, tau1);
  }
  if (!r1.regular) return irregular_result();
  return regular_result(class_of(G, mat_conj(alpha, r1.cls.rep)));
}

ArtinResult cf_cyclic(FieldRef f, const Mat& gen, const Subgroup& G,
                      const ProjPoint& tau) {
  DicksonForm form = dickson_classify(gen);
  if (form.kind != DicksonForm::Case::C)
    return cf_cyclic_conjugated(f, gen, form, G, tau);
  int ell = mat_order(gen);
  if (tau.inf) return regular_result(identity_class(G));
  FieldRef K2 = quadratic_ext(f);
  const EmbeddingMap& em = embed(f, K2);
  uint64_t lam = form.lambda;
  uint64_t lq = frobenius(K2, lam, f->order, 1);
  uint64_t tK = em.apply(tau.v);
  uint64_t zeta =
      K2->pow(K2->div(K2->sub(tK, lam), K2->sub(tK, lq)),
              (f->order + 1) / static_cast<uint64_t>(ell));
  Mat g = e_zeta_lambda(f, zeta, lam);
  return regular_result(class_of(G, g));
}

// zeta with zeta + 1/zeta = s, as the least root of z^2 - s z + 1 in F_{q^2}
uint64_t zeta_decompose(FieldRef f, uint64_t s) {
  FieldRef K2 = quadratic_ext(f);
  Poly quad = p_of(f, {1, f->neg(s), 1});
  auto roots = roots_in(quad, K2);
  if (roots.empty()) throw CheckFail("z^2 - s z + 1 has no root in F_{q^2}");
  return roots.front();
}

ArtinResult cf_pgl2(FieldRef f, const Subgroup& G, const ProjPoint& tau) {
  if (tau.inf || tau.v == 0) return irregular_result();
  FieldRef K2 = quadratic_ext(f);
  const EmbeddingMap& em = embed(f, K2);
  uint64_t zeta = zeta_decompose(f, f->sub(tau.v, f->from_int(2)));
  auto build = [&](uint64_t z) -> Mat {
    if (z == em.apply(1)) return mat_make(f, 1, 1, 0, 1);
    auto rational = em.preimage(z);
    if (rational) return mat_make(f, *rational, 0, 0, 1);
    uint64_t lambda = least_irrational(f, K2);
    return e_zeta_lambda(f, z, lambda);
  };
  if (f->p != 2 && zeta == em.apply(f->neg(1)))
    throw CheckFail("zeta = -1 should mean tau = 0");
  Mat g = build(zeta);
  ConjClass c1 = class_of(G, g);
  // the other root 1/zeta gives the same class
  Mat g2 = build(K2->inv(zeta));
  if (!(class_of(G, g2).rep == c1.rep))
    throw CheckFail("zeta and 1/zeta give different classes");
  return regular_result(std::move(c1));
}

ArtinResult cf_psl2(FieldRef f, const Subgroup& G, const ProjPoint& tau) {
  if (f->p == 2) return cf_pgl2(f, G, tau);
  if (tau.inf || tau.v == 0) return irregular_result();
  uint64_t two = f->from_int(2);
  Mat g;
  if (tau.v == two) {
    g = mat_make(f, 1, two, 0, 1);
  } else if (tau.v == f->neg(two)) {
    uint64_t u = least_nonsquare(f);
    g = mat_make(f, 1, f->mul(two, u), 0, 1);
  } else {
    FieldRef K2 = quadratic_ext(f);
    const EmbeddingMap& em = embed(f, K2);
    uint64_t zeta = zeta_decompose(f, tau.v);
    auto rational = em.preimage(zeta);
    if (rational) {
      uint64_t a = *rational;
      g = mat_make(f, a, 0, 0, f->inv(a));
    } else {
      uint64_t lambda = least_irrational(f, K2);
      g = e_zeta_lambda(f, K2->mul(zeta, zeta), lambda);
    }
  }
  if (!G.contains(g)) throw CheckFail("PSL2 closed form left the group");
  return regular_result(class_of(G, g));
}

}  // namespace

ArtinResult closed_form(FieldRef f, const GroupSpec& spec,
                        const ProjPoint& tau) {
  using K = GroupSpec::Kind;
  Subgroup G = build_group(f, spec);
  if (tau.inf) {
    // infinity is regular exactly when its orbit is full-sized
    if (orbit_infinity(G).size() == G.size())
      return regular_result(identity_class(G));
    return irregular_result();
  }
  switch (spec.kind) {
    case K::kummer:
      return cf_kummer(f, std::strtoull(spec.arg.c_str(), nullptr, 10), G,
                       tau);
    case K::order2:
      return cf_order2(f, elem_from_string(f, spec.arg), G, tau);
    case K::klein:
      return cf_klein(f, elem_from_string(f, spec.arg), G, tau);
    case K::g3:
      return cf_g3(f, G, tau);
    case K::g6:
      return cf_g6(f, G, tau);
    case K::borel:
      return cf_borel(f, G, tau);
    case K::borel_sub:
      return cf_borel_sub(f, std::strtoull(spec.arg.c_str(), nullptr, 10), G,
                          tau);
    case K::unipotent: {
      auto [P, basis] = parse_unipotent_arg(f, spec.arg);
      return cf_unipotent(f, make_subspace(f, P, basis), G, tau);
    }
    case K::cyclic:
      return cf_cyclic(f, mat_from_string(f, spec.arg), G, tau);
    case K::pgl2:
      return cf_pgl2(f, G, tau);
    case K::psl2:
      return cf_psl2(f, G, tau);
  }
  throw Error("unreachable group kind");
}

// ---------------------------------------------------------------------------
// explicit-root oracle

ArtinResult inv_brute_oracle(const QuotientMap& Q, const ProjPoint& tau) {
  FieldRef f = Q.map.field();
  const Subgroup& G = Q.group;
  if (tau.inf) {
    if (orbit_infinity(G).size() == G.size())
      return regular_result(identity_class(G));
    return irregular_result();
  }
  uint64_t q = f->order;
  Poly h = p_sub(Q.map.num, p_scale(Q.map.den, tau.v));
  if (!p_squarefree(h)) return irregular_result();
  h = p_monic(h);
  // least t with roots of degree exactly t
  int max_t = 1;
  for (auto& g : G.elems) max_t = std::max(max_t, mat_order(g));
  Poly rt = p_rem(p_x(f), h);
  for (int t = 1; t <= max_t; ++t) {
    rt = p_powmod(rt, q, h);
    Poly u = p_gcd(h, p_sub(rt, p_x(f)));
    if (u.deg() == 0) continue;
    Poly m = u.deg() == t
                 ? u
                 : Poly{f, detail::vp_equal_degree_factor(f, u.c, t)};
    FieldRef L = make_field(f->p, f->n * t);
    auto roots = roots_in(m, L);
    if (roots.empty()) throw CheckFail("irreducible factor has no root");
    uint64_t v = roots.front();
    // confirm Q(v) = tau by direct evaluation
    ProjPoint val = eval_proj(Q.map, pp_fin(L, v), L);
    if (!(val == pp_embed(tau, L)))
      throw CheckFail("explicit root does not map to tau");
    uint64_t vq = frobenius(L, v, q, 1);
    const Mat* found = nullptr;
    for (auto& g : G.elems) {
      ProjPoint gv = act(mat_embed(g, L), pp_fin(L, v));
      if (!gv.inf && gv.v == vq) {
        if (found) throw CheckFail("two group elements move v to v^q");
        found = &g;
      }
    }
    if (!found) throw CheckFail("no group element moves v to v^q");
    return regular_result(class_of(G, *found));
  }
  throw CheckFail("no root found within the order bound");
}

void check_preimage_full_orbit(const QuotientMap& Q, const ProjPoint& tau) {
  FieldRef f = Q.map.field();
  const Subgroup& G = Q.group;
  uint64_t q = f->order;
  Poly h = p_monic(p_sub(Q.map.num, p_scale(Q.map.den, tau.v)));
  if (!p_squarefree(h)) throw Error("tau is irregular");
  int max_t = 1;
  for (auto& g : G.elems) max_t = std::max(max_t, mat_order(g));
  Poly rt = p_rem(p_x(f), h);
  for (int t = 1; t <= max_t; ++t) {
    rt = p_powmod(rt, q, h);
    Poly u = p_gcd(h, p_sub(rt, p_x(f)));
    if (u.deg() == 0) continue;
    Poly m = u.deg() == t
                 ? u
                 : Poly{f, detail::vp_equal_degree_factor(f, u.c, t)};
    FieldRef L = make_field(f->p, f->n * t);
    auto roots = roots_in(m, L);
    if (roots.empty()) throw CheckFail("irreducible factor has no root");
    Orbit O = orbit(G, pp_fin(L, roots.front()));
    if (O.size() != G.size())
      throw CheckFail("regular preimage orbit is short");
    // the monic preimage polynomial is exactly the orbit product
    std::vector<uint64_t> pts;
    for (auto& pt : O.points) {
      if (pt.inf) throw CheckFail("orbit of a preimage contains infinity");
      pts.push_back(pt.v);
    }
    if (!(p_embed(h, L) == p_from_roots(L, pts)))
      throw CheckFail("preimage of tau is not one full orbit");
    return;
  }
  throw CheckFail("no preimage root found");
}

// ---------------------------------------------------------------------------
// census and transports

Census census(const QuotientMap& Q) {
  FieldRef f = Q.map.field();
  auto classes = conjugacy_classes(Q.group);
  Census out;
  for (auto& c : classes) out.counts.emplace_back(c, 0);
  auto tally = [&](const ProjPoint& tau) {
    ArtinResult r = inv_with_classes(Q, tau, classes);
    if (!r.regular) {
      out.irregular_taus.push_back(tau);
      return;
    }
    ++out.regular_count;
    for (auto& [c, n] : out.counts)
      if (c.rep == r.cls.rep) {
        ++n;
        return;
      }
    throw CheckFail("invariant class missing from the partition");
  };
  for (uint64_t v = 0; v < f->order; ++v) tally(pp_fin(f, v));
  ProjPoint inf = pp_inf(f);
  ArtinResult rinf = inv_general(Q, inf);
  out.infinity_regular = rinf.regular;
  if (rinf.regular) {
    ++out.regular_count;
    for (auto& [c, n] : out.counts)
      if (c.rep == rinf.cls.rep) ++n;
  } else {
    out.irregular_taus.push_back(inf);
  }
  return out;
}

std::pair<ArtinResult, ArtinResult> affine_transport(const QuotientMap& Q,
                                                     uint64_t a, uint64_t b,
                                                     const ProjPoint& tau) {
  FieldRef f = Q.map.field();
  if (a == 0) throw Error("affine transport needs a != 0");
  RatFunc R2 = rf_affine(a, Q.map, b);
  QuotientMap Q2{Q.group, R2, {}};
  ProjPoint tau2 =
      tau.inf ? tau : pp_fin(f, f->add(f->mul(a, tau.v), b));
  ArtinResult r1 = inv_general(Q, tau);
  ArtinResult r2 = inv_general(Q2, tau2);
  if (!r1.same_class(r2))
    throw CheckFail("inv_{aQ+b}(a tau + b) != inv_Q(tau)");
  return {r1, r2};
}

void conjugation_transport(const QuotientMap& Q1, const Mat& alpha,
                           const ProjPoint& tau) {
  QuotientMap Q2 = conjugate_quotient(Q1, alpha);
  auto [al, beta] = conjugation_frame(Q1, alpha);
  ProjPoint tau2 = act(beta, tau);
  ArtinResult r1 = inv_general(Q1, tau);
  ArtinResult r2 = inv_general(Q2, tau2);
  if (r1.regular != r2.regular)
    throw CheckFail("conjugation transport changes regularity");
  if (!r1.regular) return;
  Mat expected = mat_conj(al, r1.cls.rep);
  if (!r2.cls.contains(expected))
    throw CheckFail("inv_{Q2}(beta tau) != alpha inv_{Q1}(tau) alpha^{-1}");
}

SubgroupTransport subgroup_transport(const QuotientMap& QH,
                                     const QuotientMap& QG,
                                     const ProjPoint& tau) {
  return subgroup_transport(QH, QG, relate(QH, QG), tau);
}

SubgroupTransport subgroup_transport(const QuotientMap& QH,
                                     const QuotientMap& QG, const RatFunc& h,
                                     const ProjPoint& tau) {
  FieldRef f = QH.map.field();
  ProjPoint htau = eval_proj(h, tau, f);
  ArtinResult rG = inv_general(QG, htau);
  if (!rG.regular) throw Error("h(tau) is irregular with respect to Q_G");
  ArtinResult rH = inv_general(QH, tau);
  if (!rH.regular)
    throw CheckFail("h(tau) regular but tau irregular for Q_H");
  Mat delta = rH.cls.rep;
  if (!rG.cls.contains(delta))
    throw CheckFail("no common delta: C_{delta,H} not inside C_{delta,G}");
  return SubgroupTransport{rH.cls, rG.cls, delta};
}

bool iota_theorem_check(const QuotientMap& QH, const RatFunc& h,
                        const ProjPoint& tau) {
  FieldRef f = QH.map.field();
  ArtinResult rH = inv_general(QH, tau);
  if (!rH.regular) throw Error("tau is irregular for Q_H");
  ProjPoint htau = eval_proj(h, tau, f);
  if (rH.cls.rep.is_identity()) return htau.inf;
  return !htau.inf && htau.v == iota(rH.cls.rep);
}

std::vector<BijectionRow> pgl2_bijection(FieldRef f) {
  uint64_t q = f->order;
  Subgroup G = pgl2_full(f);
  QuotientMap Q = named_quotient(f, parse_group_spec("pgl2"));
  auto classes = conjugacy_classes(G);
  std::vector<BijectionRow> rows;
  std::vector<bool> covered(q, false);
  for (auto& c : classes) {
    int t = mat_order(c.rep);
    if (t < 3) continue;
    uint64_t tv = iota(c.rep);
    if (tv == 0) throw CheckFail("iota = 0 on a class of order >= 3");
    if (covered[tv]) throw CheckFail("iota is not injective on order >= 3");
    covered[tv] = true;
    rows.push_back(BijectionRow{tv, c.rep, t});
    // inv o iota = identity
    ArtinResult r = inv_general(Q, pp_fin(f, tv), classes);
    if (!r.regular || !(r.cls.rep == c.rep))
      throw CheckFail("inv_Q(iota(gamma)) != C_gamma");
  }
  for (uint64_t tv = 1; tv < q; ++tv) {
    if (!covered[tv]) throw CheckFail("iota misses a nonzero field value");
    // iota o inv = identity and classes have order >= 3
    ArtinResult r = inv_general(Q, pp_fin(f, tv), classes);
    if (!r.regular) throw CheckFail("nonzero tau is irregular for PGL2");
    if (mat_order(r.cls.rep) < 3)
      throw CheckFail("invariant class of order < 3");
    if (iota(r.cls.rep) != tv) throw CheckFail("iota(inv_Q(tau)) != tau");
  }
  std::sort(rows.begin(), rows.end(),
            [](const BijectionRow& a, const BijectionRow& b) {
              return a.tau < b.tau;
            });
  return rows;
}

}  // namespace artinv
