#include "artinv/quotient.hpp"

#include <algorithm>

namespace artinv {

namespace {

uint64_t splitmix(uint64_t& s) {
  s += 0x9e3779b97f4a7c15ull;
  uint64_t z = s;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

// f_O over the orbit's field, descended to base
Poly orbit_numerator(const Subgroup& G, const Orbit& O, FieldRef base) {
  FieldRef L = O.points.front().f;
  std::vector<uint64_t> roots;
  for (auto& v : O.points) {
    if (v.inf) throw CheckFail("orbit numerator with infinity");
    roots.push_back(v.v);
  }
  Poly prod = p_from_roots(L, roots);
  Poly f = p_pow(prod, static_cast<uint64_t>(G.size() / O.size()));
  return p_descend(f, base);
}

bool orbit_stable(FieldRef L, uint64_t q, const Orbit& O) {
  ProjPoint v = O.points.front();
  if (v.inf) return true;
  return O.contains(pp_fin(L, frobenius(L, v.v, q, 1)));
}

}  // namespace

std::vector<ProjPoint> irregular_set(const Subgroup& G, const RatFunc& R) {
  FieldRef K2 = quadratic_ext(G.f);
  std::vector<ProjPoint> out;
  for (auto& O : short_orbits(G))
    out.push_back(eval_proj(R, O.points.front(), K2));
  std::sort(out.begin(), out.end(), pp_less);
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

VerifyResult verify_quotient(const Subgroup& G, const RatFunc& R) {
  FieldRef f = G.f;
  const Poly& num = R.num;
  const Poly& den = R.den;
  if (num.deg() != static_cast<int>(G.size()) || num.deg() <= den.deg())
    return {false, "degree condition |G| = deg f > deg g fails"};
  // R(inf) = inf is the degree comparison
  // G-invariance, exactly; a generating set suffices since the stabilizer
  // {gamma : R o gamma = R} is a subgroup
  std::vector<Mat> to_check =
      G.size() > 200 ? small_generating_set(G) : G.elems;
  for (auto& g : to_check) {
    if (g.is_identity()) continue;
    // unreduced composition parts of R((ax+b)/(cx+d))
    int D = R.deg();
    Poly nl = p_of(f, {g.b, g.a}), dl = p_of(f, {g.d, g.c});
    Poly N = mobius_homogenize(num, D, nl, dl);
    Poly Dn = mobius_homogenize(den, D, nl, dl);
    if (!(p_mul(N, den) == p_mul(Dn, num)))
      return {false, "R o gamma != R for gamma = " + mat_to_string(g)};
  }
  // product identity f(y) - Q(x) g(y) = lc(f) prod (y - gamma(x)) at
  // deterministic specializations in F_{q^2}
  FieldRef K2 = quadratic_ext(f);
  Poly numK = p_embed(num, K2), denK = p_embed(den, K2);
  std::vector<Mat> embedded;
  for (auto& g : G.elems) embedded.push_back(mat_embed(g, K2));
  uint64_t lc = embed(f, K2).apply(num.lc());
  uint64_t seed = 0x5eedf00d;
  long done = 0;
  long want = static_cast<long>(3 * G.size());
  int guard = 0;
  while (done < want) {
    if (++guard > 16 * want + 256)
      throw CheckFail("could not find product-identity specializations");
    uint64_t x0 = splitmix(seed) % K2->order;
    uint64_t y0 = splitmix(seed) % K2->order;
    if (p_eval(denK, x0) == 0) continue;
    uint64_t rhs = lc;
    bool usable = true;
    for (auto& g : embedded) {
      ProjPoint gx = act(g, pp_fin(K2, x0));
      if (gx.inf) {
        usable = false;
        break;
      }
      rhs = K2->mul(rhs, K2->sub(y0, gx.v));
    }
    if (!usable) continue;
    uint64_t gx0 = p_eval(denK, x0);
    uint64_t lhs = K2->sub(K2->mul(p_eval(numK, y0), gx0),
                           K2->mul(p_eval(numK, x0), p_eval(denK, y0)));
    if (lhs != K2->mul(rhs, gx0))
      return {false, "product identity fails at a specialization"};
    ++done;
  }
  return {true, ""};
}

QuotientMap build_quotient(const Subgroup& G) {
  FieldRef f = G.f;
  uint64_t q = f->order;
  if (G.size() < 2) throw Error("build_quotient needs |G| >= 2");
  Orbit Oinf = orbit_infinity(G);
  std::vector<uint64_t> g_roots;
  for (auto& v : Oinf.points)
    if (!v.inf) g_roots.push_back(v.v);
  Poly g = p_pow(p_from_roots(f, g_roots),
                 static_cast<uint64_t>(Oinf.multiplicity));

  std::optional<Orbit> chosen;
  // 1: full orbits of rational points
  for (uint64_t v = 0; v < q && !chosen; ++v) {
    if (Oinf.contains(pp_fin(f, v))) continue;
    Orbit O = orbit(G, pp_fin(f, v));
    if (O.size() == G.size()) chosen = O;
  }
  // 2/3: Frobenius-stable full orbits over F_{q^2}, then F_{q^3}
  for (int t = 2; t <= 3 && !chosen; ++t) {
    FieldRef L = make_field(f->p, f->n * t);
    for (uint64_t v = 0; v < L->order && !chosen; ++v) {
      if (frobenius(L, v, q, 1) == v) continue;  // rational, already tried
      Orbit O = orbit(G, pp_fin(L, v));
      if (O.size() == G.size() && orbit_stable(L, q, O)) chosen = O;
    }
  }
  // fallback: stable short orbits over F_{q^2} disjoint from O_inf
  if (!chosen) {
    FieldRef L = quadratic_ext(f);
    const EmbeddingMap& em = embed(f, L);
    for (uint64_t v = 0; v < L->order && !chosen; ++v) {
      bool rational = frobenius(L, v, q, 1) == v;
      if (rational) {
        auto pre = em.preimage(v);
        if (pre && Oinf.contains(pp_fin(f, *pre))) continue;
      }
      Orbit O = orbit(G, pp_fin(L, v));
      if (orbit_stable(L, q, O)) chosen = O;
    }
  }
  if (!chosen) throw Error("no Frobenius-stable orbit found");

  Poly fo = orbit_numerator(G, *chosen, f);
  RatFunc Q = reduce(fo, g);
  VerifyResult vr = verify_quotient(G, Q);
  if (!vr.ok) throw CheckFail("build_quotient failed verification: " + vr.reason);
  return QuotientMap{G, Q, irregular_set(G, Q)};
}

// ---------------------------------------------------------------------------
// group specs and named quotient maps

std::string GroupSpec::to_string() const {
  switch (kind) {
    case Kind::kummer: return "kummer:" + arg;
    case Kind::klein: return "klein:" + arg;
    case Kind::g3: return "g3";
    case Kind::g6: return "g6";
    case Kind::borel: return "borel";
    case Kind::borel_sub: return "borelP:" + arg;
    case Kind::unipotent: return "unipotent:" + arg;
    case Kind::cyclic: return "cyclic:" + arg;
    case Kind::order2: return "order2:" + arg;
    case Kind::pgl2: return "pgl2";
    case Kind::psl2: return "psl2";
  }
  return "?";
}

GroupSpec parse_group_spec(const std::string& s) {
  auto colon = s.find(':');
  std::string head = s.substr(0, colon);
  std::string arg = colon == std::string::npos ? "" : s.substr(colon + 1);
  GroupSpec out;
  out.arg = arg;
  if (head == "kummer") out.kind = GroupSpec::Kind::kummer;
  else if (head == "klein") out.kind = GroupSpec::Kind::klein;
  else if (head == "g3") out.kind = GroupSpec::Kind::g3;
  else if (head == "g6") out.kind = GroupSpec::Kind::g6;
  else if (head == "borel") out.kind = GroupSpec::Kind::borel;
  else if (head == "borelP") out.kind = GroupSpec::Kind::borel_sub;
  else if (head == "unipotent") out.kind = GroupSpec::Kind::unipotent;
  else if (head == "cyclic") out.kind = GroupSpec::Kind::cyclic;
  else if (head == "order2") out.kind = GroupSpec::Kind::order2;
  else if (head == "pgl2") out.kind = GroupSpec::Kind::pgl2;
  else if (head == "psl2") out.kind = GroupSpec::Kind::psl2;
  else throw Error("unknown group spec: " + s);
  return out;
}

namespace {

uint64_t parse_uint(const std::string& s) {
  if (s.empty()) throw Error("missing numeric group parameter");
  return std::strtoull(s.c_str(), nullptr, 10);
}

}  // namespace

std::pair<uint64_t, std::vector<uint64_t>> parse_unipotent_arg(
    FieldRef f, const std::string& arg) {
  uint64_t P = f->p;
  std::string rest = arg;
  if (rest.rfind("P=", 0) == 0) {
    auto comma = rest.find(',');
    if (comma == std::string::npos) throw Error("unipotent needs a basis");
    P = parse_uint(rest.substr(2, comma - 2));
    rest = rest.substr(comma + 1);
  }
  if (rest.rfind("basis=", 0) != 0) throw Error("unipotent needs basis=[...]");
  std::string lst = rest.substr(6);
  if (lst.size() < 2 || lst.front() != '[' || lst.back() != ']')
    throw Error("bad basis list: " + lst);
  lst = lst.substr(1, lst.size() - 2);
  std::vector<uint64_t> basis;
  std::string cur;
  int depth = 0;
  for (char ch : lst) {
    if (ch == '[') ++depth;
    if (ch == ']') --depth;
    if (ch == ',' && depth == 0) {
      basis.push_back(elem_from_string(f, cur));
      cur.clear();
    } else {
      cur += ch;
    }
  }
  if (!cur.empty()) basis.push_back(elem_from_string(f, cur));
  return {P, basis};
}

Subgroup build_group(FieldRef f, const GroupSpec& spec) {
  using K = GroupSpec::Kind;
  switch (spec.kind) {
    case K::kummer: return kummer_group(f, parse_uint(spec.arg));
    case K::klein: return klein_group(f, elem_from_string(f, spec.arg));
    case K::g3: return g3_group(f);
    case K::g6: return g6_group(f);
    case K::borel: return borel_group(f);
    case K::borel_sub: return borel_sub_group(f, parse_uint(spec.arg));
    case K::unipotent: {
      auto [P, basis] = parse_unipotent_arg(f, spec.arg);
      return unipotent_group(f, make_subspace(f, P, basis));
    }
    case K::cyclic: return cyclic_group(mat_from_string(f, spec.arg));
    case K::order2: return order2_group(f, elem_from_string(f, spec.arg));
    case K::pgl2: return pgl2_full(f);
    case K::psl2: return psl2_group(f);
  }
  throw Error("unreachable group kind");
}

namespace {

QuotientMap finish_named(Subgroup G, RatFunc R) {
  VerifyResult vr = verify_quotient(G, R);
  if (!vr.ok) throw CheckFail("named quotient failed verification: " + vr.reason);
  auto irr = irregular_set(G, R);
  return QuotientMap{std::move(G), std::move(R), std::move(irr)};
}

RatFunc pgl2_map(FieldRef f) {
  uint64_t q = f->order;
  std::vector<uint64_t> a(q * q + 1, 0);  // x^{q^2} - x
  a[1] = f->neg(1);
  a[q * q] = 1;
  std::vector<uint64_t> b(q + 1, 0);  // x^q - x
  b[1] = f->neg(1);
  b[q] = 1;
  Poly num = p_pow(p_of(f, a), q + 1);
  Poly den = p_pow(p_of(f, b), q * q + 1);
  return reduce(num, den);
}

RatFunc psl2_map(FieldRef f) {
  uint64_t q = f->order;
  std::vector<uint64_t> a(q * q + 1, 0);
  a[1] = f->neg(1);
  a[q * q] = 1;
  std::vector<uint64_t> b(q + 1, 0);
  b[1] = f->neg(1);
  b[q] = 1;
  Poly num = p_pow(p_of(f, a), (q + 1) / 2);
  Poly den = p_pow(p_of(f, b), (q * q + 1) / 2);
  return reduce(num, den);
}

RatFunc q_ell_map(FieldRef f, int ell, uint64_t lambda) {
  FieldRef K2 = quadratic_ext(f);
  uint64_t q = f->order;
  uint64_t lq = frobenius(K2, lambda, q, 1);
  Poly a = p_of(K2, {K2->neg(lq), 1});  // x - lambda^q
  Poly b = p_of(K2, {K2->neg(lambda), 1});
  Poly an = p_pow(a, ell), bn = p_pow(b, ell);
  Poly num = p_sub(p_scale(an, lambda), p_scale(bn, lq));
  Poly den = p_sub(an, bn);
  // divide by (lambda - lambda^q) to restore rationality
  uint64_t s = K2->inv(K2->sub(lambda, lq));
  num = p_scale(num, s);
  den = p_scale(den, s);
  RatFunc R = reduce(p_descend(num, f), p_descend(den, f));
  return R;
}

}  // namespace

QuotientMap named_quotient(FieldRef f, const GroupSpec& spec) {
  using K = GroupSpec::Kind;
  Subgroup G = build_group(f, spec);
  uint64_t q = f->order;
  switch (spec.kind) {
    case K::kummer: {
      uint64_t n = parse_uint(spec.arg);
      std::vector<uint64_t> c(n + 1, 0);
      c[n] = 1;
      return finish_named(G, RatFunc{p_of(f, c), p_const(f, 1)});
    }
    case K::order2: {
      uint64_t cpar = elem_from_string(f, spec.arg);
      return finish_named(G, RatFunc{p_of(f, {cpar, 0, 1}), p_x(f)});
    }
    case K::klein: {
      uint64_t b = elem_from_string(f, spec.arg);
      Poly num = p_mul(p_of(f, {b, 0, 1}), p_of(f, {b, 0, 1}));
      num = p_scale(num, f->inv(f->from_int(4)));
      return finish_named(G, RatFunc{num, p_of(f, {0, 0, 1})});
    }
    case K::g3: {
      Poly num = p_of(f, {1, f->neg(f->from_int(3)), 0, 1});
      Poly den = p_of(f, {0, f->neg(1), 1});
      return finish_named(G, RatFunc{num, den});
    }
    case K::g6: {
      Poly n1 = p_of(f, {1, f->neg(f->from_int(3)), 0, 1});
      Poly n2 = p_of(f, {1, 0, f->neg(f->from_int(3)), 1});
      Poly d1 = p_of(f, {0, f->neg(1), 1});
      return finish_named(G, RatFunc{p_mul(n1, n2), p_mul(d1, d1)});
    }
    case K::borel: {
      std::vector<uint64_t> b(q + 1, 0);
      b[1] = f->neg(1);
      b[q] = 1;
      return finish_named(G, RatFunc{p_pow(p_of(f, b), q - 1), p_const(f, 1)});
    }
    case K::borel_sub: {
      uint64_t P = parse_uint(spec.arg);
      std::vector<uint64_t> b(P + 1, 0);
      b[1] = f->neg(1);
      b[P] = 1;
      return finish_named(G, RatFunc{p_pow(p_of(f, b), P - 1), p_const(f, 1)});
    }
    case K::unipotent: {
      auto [P, basis] = parse_unipotent_arg(f, spec.arg);
      Subspace W = make_subspace(f, P, basis);
      Poly num = addpoly_to_poly(qw_from_subspace(W));
      return finish_named(G, RatFunc{num, p_const(f, 1)});
    }
    case K::cyclic: {
      Mat gen = mat_from_string(f, spec.arg);
      DicksonForm form = dickson_classify(gen);
      int ell = mat_order(gen);
      switch (form.kind) {
        case DicksonForm::Case::A: {
          // unipotent normal form, conjugated back
          Subspace W = make_subspace(f, f->p, {form.param});
          Poly num = addpoly_to_poly(qw_from_subspace(W));
          Subgroup NG = unipotent_group(f, W);
          QuotientMap Q1 =
              finish_named(NG, RatFunc{num, p_const(f, 1)});
          QuotientMap Q2 = conjugate_quotient(Q1, form.conj);
          Q2.group.label = G.label;
          return Q2;
        }
        case DicksonForm::Case::B: {
          std::vector<uint64_t> c(ell + 1, 0);
          c[ell] = 1;
          Subgroup NG = kummer_group(f, ell);
          QuotientMap Q1 =
              finish_named(NG, RatFunc{p_of(f, c), p_const(f, 1)});
          QuotientMap Q2 = conjugate_quotient(Q1, form.conj);
          Q2.group.label = G.label;
          return Q2;
        }
        case DicksonForm::Case::C:
          return finish_named(G, q_ell_map(f, ell, form.lambda));
      }
      throw Error("unreachable dickson case");
    }
    case K::pgl2:
      return finish_named(G, pgl2_map(f));
    case K::psl2:
      if (f->p == 2) return finish_named(G, pgl2_map(f));
      return finish_named(G, psl2_map(f));
  }
  throw Error("unreachable group kind");
}

std::optional<std::pair<uint64_t, uint64_t>> equivalent_up_to_affine(
    const RatFunc& R1, const RatFunc& R2) {
  FieldRef f = R1.field();
  if (!(R1.den == R2.den)) return std::nullopt;
  if (R1.num.deg() != R2.num.deg()) return std::nullopt;
  if (R1.num.deg() <= R1.den.deg()) return std::nullopt;
  uint64_t a = f->div(R2.num.lc(), R1.num.lc());
  Poly diff = p_sub(R2.num, p_scale(R1.num, a));
  uint64_t b = 0;
  if (!diff.is_zero()) {
    if (R1.den.deg() != diff.deg()) return std::nullopt;
    b = f->div(diff.lc(), R1.den.lc());
    if (!(diff == p_scale(R1.den, b))) return std::nullopt;
  }
  return std::make_pair(a, b);
}

RatFunc relate(const QuotientMap& QH, const QuotientMap& QG) {
  FieldRef f = QH.map.field();
  if (QG.map.field() != f) throw Error("relate: mixed fields");
  size_t m = QG.group.size() / QH.group.size();
  if (m * QH.group.size() != QG.group.size())
    throw Error("relate: |H| does not divide |G|");
  const Poly &fH = QH.map.num, &gH = QH.map.den;
  const Poly &fG = QG.map.num, &gG = QG.map.den;
  // unknowns A_0..A_m (numerator of h), B_0..B_{m-1} (denominator);
  // solve fG * sum B_j fH^j gH^{m-j} = gG * sum A_i fH^i gH^{m-i}
  std::vector<Poly> fp(m + 1), gp(m + 1);
  fp[0] = p_const(f, 1);
  gp[0] = p_const(f, 1);
  for (size_t i = 1; i <= m; ++i) {
    fp[i] = p_mul(fp[i - 1], fH);
    gp[i] = p_mul(gp[i - 1], gH);
  }
  size_t cols = (m + 1) + m;
  std::vector<Poly> col(cols);
  for (size_t i = 0; i <= m; ++i)
    col[i] = p_scale(p_mul(gG, p_mul(fp[i], gp[m - i])), f->neg(1));
  for (size_t j = 0; j < m; ++j)
    col[m + 1 + j] = p_mul(fG, p_mul(fp[j], gp[m - j]));
  int maxdeg = 0;
  for (auto& c : col) maxdeg = std::max(maxdeg, c.deg());
  size_t rows = static_cast<size_t>(maxdeg) + 1;
  std::vector<std::vector<uint64_t>> M(rows, std::vector<uint64_t>(cols, 0));
  for (size_t j = 0; j < cols; ++j)
    for (int i = 0; i <= col[j].deg(); ++i) M[i][j] = col[j].coeff(i);
  // kernel via elimination
  std::vector<int> pivot_of_col(cols, -1);
  size_t r = 0;
  for (size_t c = 0; c < cols && r < rows; ++c) {
    size_t piv = SIZE_MAX;
    for (size_t i = r; i < rows; ++i)
      if (M[i][c]) {
        piv = i;
        break;
      }
    if (piv == SIZE_MAX) continue;
    std::swap(M[piv], M[r]);
    uint64_t s = f->inv(M[r][c]);
    for (auto& x : M[r]) x = f->mul(x, s);
    for (size_t i = 0; i < rows; ++i) {
      if (i == r || M[i][c] == 0) continue;
      uint64_t k = M[i][c];
      for (size_t j = c; j < cols; ++j)
        M[i][j] = f->sub(M[i][j], f->mul(k, M[r][j]));
    }
    pivot_of_col[c] = static_cast<int>(r);
    ++r;
  }
  int free_col = -1;
  for (int c = static_cast<int>(cols) - 1; c >= 0; --c)
    if (pivot_of_col[c] < 0) {
      free_col = c;
      break;
    }
  if (free_col < 0) throw Error("relate: no relation found (is H inside G?)");
  std::vector<uint64_t> sol(cols, 0);
  sol[free_col] = 1;
  for (size_t c = 0; c < cols; ++c)
    if (pivot_of_col[c] >= 0) sol[c] = f->neg(M[pivot_of_col[c]][free_col]);
  Poly A = p_of(f, std::vector<uint64_t>(sol.begin(), sol.begin() + m + 1));
  Poly B = p_of(f, std::vector<uint64_t>(sol.begin() + m + 1, sol.end()));
  if (B.is_zero()) throw Error("relate: degenerate relation");
  RatFunc h = reduce(A, B);
  if (h.deg() != static_cast<int>(m))
    throw Error("relate: relation has wrong degree");
  if (!(rf_compose(h, QH.map) == QG.map))
    throw Error("relate: composition check failed (is H inside G?)");
  return h;
}

std::pair<Mat, Mat> conjugation_frame(const QuotientMap& Q1, const Mat& alpha) {
  FieldRef f = Q1.map.field();
  Mat ai = mat_inv(alpha);
  RatFunc Qp = rf_compose_mobius(Q1.map, ai.a, ai.b, ai.c, ai.d);
  ProjPoint k = eval_proj(Qp, pp_inf(f), f);
  Mat beta = k.inf ? mat_id(f) : mat_make(f, 0, 1, 1, f->neg(k.v));
  return {alpha, beta};
}

QuotientMap conjugate_quotient(const QuotientMap& Q1, const Mat& alpha) {
  FieldRef f = Q1.map.field();
  auto [al, beta] = conjugation_frame(Q1, alpha);
  Mat ai = mat_inv(al);
  RatFunc Qp = rf_compose_mobius(Q1.map, ai.a, ai.b, ai.c, ai.d);
  RatFunc Q2 = rf_mobius_after(beta.a, beta.b, beta.c, beta.d, Qp);
  std::vector<Mat> conj_elems;
  for (auto& g : Q1.group.elems) conj_elems.push_back(mat_conj(al, g));
  std::sort(conj_elems.begin(), conj_elems.end(), mat_less);
  Subgroup G2{f, std::move(conj_elems), Q1.group.label + "^conj"};
  VerifyResult vr = verify_quotient(G2, Q2);
  if (!vr.ok)
    throw CheckFail("conjugate quotient failed verification: " + vr.reason);
  return QuotientMap{std::move(G2), Q2, irregular_set(G2, Q2)};
}

}  // namespace artinv
