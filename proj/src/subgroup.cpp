#include "artinv/subgroup.hpp"

#include <algorithm>
#include <set>

namespace artinv {

namespace {

struct MatLess {
  bool operator()(const Mat& x, const Mat& y) const { return mat_less(x, y); }
};

std::vector<Mat> sorted_unique(std::vector<Mat> v) {
  std::sort(v.begin(), v.end(), MatLess{});
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

}  // namespace

bool Subgroup::contains(const Mat& g) const {
  return std::binary_search(elems.begin(), elems.end(), g, MatLess{});
}

bool ConjClass::contains(const Mat& g) const {
  return std::binary_search(members.begin(), members.end(), g, MatLess{});
}

bool Orbit::contains(const ProjPoint& v) const {
  return std::binary_search(points.begin(), points.end(), v, pp_less);
}

Subgroup generate(FieldRef f, const std::vector<Mat>& gens,
                  const std::string& label) {
  std::set<Mat, MatLess> seen;
  seen.insert(mat_id(f));
  std::vector<Mat> work{mat_id(f)};
  std::vector<Mat> gen_and_inv;
  for (auto& g : gens) {
    if (g.f != f) throw Error("generator from a different field");
    gen_and_inv.push_back(g);
    gen_and_inv.push_back(mat_inv(g));
  }
  while (!work.empty()) {
    Mat cur = work.back();
    work.pop_back();
    for (auto& g : gen_and_inv) {
      Mat nxt = mat_mul(cur, g);
      if (seen.insert(nxt).second) {
        if (seen.size() > kSubgroupBound)
          throw Error("subgroup closure exceeds bound");
        work.push_back(nxt);
      }
    }
  }
  return Subgroup{f, std::vector<Mat>(seen.begin(), seen.end()), label};
}

Subgroup kummer_group(FieldRef f, uint64_t n) {
  if (n < 1 || (f->order - 1) % n != 0) throw Error("kummer needs n | q-1");
  std::vector<Mat> els;
  for (uint64_t z : nth_roots_of_unity(f, n))
    els.push_back(mat_make(f, z, 0, 0, 1));
  Subgroup G{f, sorted_unique(std::move(els)), "kummer:" + std::to_string(n)};
  if (G.size() != n) throw CheckFail("kummer cardinality");
  return G;
}

Subgroup klein_group(FieldRef f, uint64_t b) {
  if (f->p == 2) throw Error("klein needs odd q");
  if (b == 0) throw Error("klein needs b != 0");
  std::vector<Mat> els{mat_id(f), mat_make(f, f->neg(1), 0, 0, 1),
                       mat_make(f, 0, b, 1, 0),
                       mat_make(f, 0, f->neg(b), 1, 0)};
  Subgroup G{f, sorted_unique(std::move(els)), "klein:" + std::to_string(b)};
  if (G.size() != 4) throw CheckFail("klein cardinality");
  return G;
}

Subgroup g3_group(FieldRef f) {
  Mat beta = mat_make(f, 1, f->neg(1), 1, 0);
  Subgroup G = generate(f, {beta}, "g3");
  if (G.size() != 3) throw CheckFail("g3 cardinality");
  return G;
}

Subgroup g6_group(FieldRef f) {
  Mat beta = mat_make(f, 1, f->neg(1), 1, 0);
  Mat rho = mat_make(f, 0, 1, 1, 0);
  Subgroup G = generate(f, {beta, rho}, "g6");
  if (G.size() != 6) throw CheckFail("g6 cardinality");
  return G;
}

Subgroup borel_group(FieldRef f) {
  std::vector<Mat> els;
  for (uint64_t a = 1; a < f->order; ++a)
    for (uint64_t b = 0; b < f->order; ++b)
      els.push_back(mat_make(f, a, b, 0, 1));
  Subgroup G{f, sorted_unique(std::move(els)), "borel"};
  if (G.size() != f->order * (f->order - 1))
    throw CheckFail("borel cardinality");
  return G;
}

Subgroup borel_sub_group(FieldRef f, uint64_t P) {
  const PCoords& pc = pcoords(f, P);  // validates F_P inside F_q
  const EmbeddingMap& em = embed(pc.fP, f);
  std::vector<Mat> els;
  for (uint64_t a = 1; a < P; ++a)
    for (uint64_t b = 0; b < P; ++b)
      els.push_back(mat_make(f, em.apply(a), em.apply(b), 0, 1));
  Subgroup G{f, sorted_unique(std::move(els)), "borelP:" + std::to_string(P)};
  if (G.size() != P * (P - 1)) throw CheckFail("borel_sub cardinality");
  return G;
}

Subgroup unipotent_group(FieldRef f, const Subspace& W) {
  if (W.f != f) throw Error("subspace lives in a different field");
  std::vector<Mat> els;
  for (uint64_t w : subspace_elements(W))
    els.push_back(mat_make(f, 1, w, 0, 1));
  Subgroup G{f, sorted_unique(std::move(els)), "unipotent"};
  uint64_t size = 1;
  for (int i = 0; i < W.dim(); ++i) size *= W.P;
  if (G.size() != size) throw CheckFail("unipotent cardinality");
  return G;
}

Subgroup cyclic_group(const Mat& g) {
  Subgroup G = generate(g.f, {g}, "cyclic:" + mat_to_string(g));
  if (G.size() != static_cast<size_t>(mat_order(g)))
    throw CheckFail("cyclic cardinality");
  return G;
}

Subgroup order2_group(FieldRef f, uint64_t c) {
  if (c == 0) throw Error("order2 needs c != 0");
  Subgroup G =
      generate(f, {mat_make(f, 0, c, 1, 0)}, "order2:" + std::to_string(c));
  if (G.size() != 2) throw CheckFail("order2 cardinality");
  return G;
}

Subgroup pgl2_full(FieldRef f) {
  uint64_t q = f->order;
  if ((q + 1) * q * (q - 1) > kSubgroupBound)
    throw Error("PGL2(F_q) exceeds bound");
  std::vector<Mat> els;
  els.reserve((q + 1) * q * (q - 1));
  for (uint64_t b = 0; b < q; ++b)  // a = 1
    for (uint64_t c = 0; c < q; ++c)
      for (uint64_t d = 0; d < q; ++d)
        if (f->sub(d, f->mul(b, c)) != 0) els.push_back(Mat{f, 1, b, c, d});
  for (uint64_t c = 1; c < q; ++c)  // a = 0, b = 1, c != 0
    for (uint64_t d = 0; d < q; ++d) els.push_back(Mat{f, 0, 1, c, d});
  Subgroup G{f, sorted_unique(std::move(els)), "pgl2"};
  if (G.size() != (q + 1) * q * (q - 1)) throw CheckFail("pgl2 cardinality");
  return G;
}

Subgroup psl2_group(FieldRef f) {
  uint64_t q = f->order;
  Subgroup full = pgl2_full(f);
  if (f->p == 2) {
    // PSL2 = PGL2 in even characteristic
    full.label = "psl2";
    return full;
  }
  std::vector<Mat> els;
  for (auto& g : full.elems)
    if (quadratic_character(f, g.det()) == 1) els.push_back(g);
  Subgroup G{f, std::move(els), "psl2"};
  if (G.size() != (q + 1) * q * (q - 1) / 2)
    throw CheckFail("psl2 cardinality");
  return G;
}

Orbit orbit(const Subgroup& G, const ProjPoint& v) {
  FieldRef L = v.f;
  std::vector<ProjPoint> pts;
  pts.reserve(G.size());
  if (L == G.f) {
    for (auto& g : G.elems) pts.push_back(act(g, v));
  } else {
    for (auto& g : G.elems) pts.push_back(act(mat_embed(g, L), v));
  }
  std::sort(pts.begin(), pts.end(), pp_less);
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  Orbit O;
  O.points = std::move(pts);
  if (G.size() % O.points.size() != 0)
    throw CheckFail("orbit size does not divide group order");
  O.multiplicity = static_cast<long>(G.size() / O.points.size());
  return O;
}

Orbit orbit_infinity(const Subgroup& G) { return orbit(G, pp_inf(G.f)); }

std::vector<Orbit> short_orbits(const Subgroup& G) {
  std::vector<Orbit> out;
  std::set<ProjPoint, bool (*)(const ProjPoint&, const ProjPoint&)> covered(
      pp_less);
  for (auto& g : G.elems) {
    if (g.is_identity()) continue;
    for (auto& z : fixed_points(g)) {
      if (covered.count(z)) continue;
      Orbit O = orbit(G, z);
      if (O.size() < G.size()) {
        for (auto& w : O.points) covered.insert(w);
        out.push_back(std::move(O));
      } else {
        covered.insert(z);
      }
    }
  }
  std::sort(out.begin(), out.end(), [](const Orbit& a, const Orbit& b) {
    return pp_less(a.points.front(), b.points.front());
  });
  return out;
}

std::vector<ConjClass> conjugacy_classes(const Subgroup& G) {
  std::vector<ConjClass> out;
  std::set<Mat, MatLess> covered;
  for (auto& g : G.elems) {
    if (covered.count(g)) continue;
    std::vector<Mat> members;
    for (auto& h : G.elems) members.push_back(mat_conj(h, g));
    members = sorted_unique(std::move(members));
    for (auto& m : members) covered.insert(m);
    out.push_back(ConjClass{members.front(), std::move(members)});
  }
  std::sort(out.begin(), out.end(),
            [](const ConjClass& a, const ConjClass& b) {
              return mat_less(a.rep, b.rep);
            });
  return out;
}

ConjClass class_of(const Subgroup& G, const Mat& g) {
  if (!G.contains(g)) throw Error("element is not in the subgroup");
  std::vector<Mat> members;
  for (auto& h : G.elems) members.push_back(mat_conj(h, g));
  members = sorted_unique(std::move(members));
  return ConjClass{members.front(), std::move(members)};
}

ConjClass identity_class(const Subgroup& G) {
  return ConjClass{mat_id(G.f), {mat_id(G.f)}};
}

Subgroup centralizer(const Mat& g) {
  if (g.is_identity()) throw Error("centralizer of the identity");
  FieldRef f = g.f;
  uint64_t q = f->order;
  DicksonForm form = dickson_classify(g);
  std::vector<Mat> els;
  switch (form.kind) {
    case DicksonForm::Case::A:
      for (uint64_t e = 0; e < q; ++e)
        els.push_back(mat_conj(form.conj, mat_make(f, 1, e, 0, 1)));
      break;
    case DicksonForm::Case::B:
      for (uint64_t e = 1; e < q; ++e)
        els.push_back(mat_conj(form.conj, mat_make(f, e, 0, 0, 1)));
      break;
    case DicksonForm::Case::C: {
      FieldRef K2 = quadratic_ext(f);
      uint64_t step = (K2->order - 1) / (q + 1);
      for (uint64_t k = 0; k < q + 1; ++k)
        els.push_back(
            e_zeta_lambda(f, K2->pow(K2->gen, step * k), form.lambda));
      break;
    }
  }
  els = sorted_unique(std::move(els));
  for (auto& z : els)
    if (!(mat_mul(z, g) == mat_mul(g, z)))
      throw CheckFail("centralizer element does not commute");
  uint64_t expect = q + form.kappa();
  if (els.size() != expect)
    throw CheckFail("centralizer cardinality != q+kappa");
  return Subgroup{f, std::move(els), "centralizer"};
}

std::vector<Mat> small_generating_set(const Subgroup& G) {
  std::vector<Mat> gens;
  Subgroup cur{G.f, {mat_id(G.f)}, "span"};
  for (auto& g : G.elems) {
    if (cur.contains(g)) continue;
    gens.push_back(g);
    cur = generate(G.f, gens);
    if (cur.size() == G.size()) break;
  }
  if (cur.size() != G.size()) throw CheckFail("generating set incomplete");
  return gens;
}

}  // namespace artinv
