#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "artinv/subgroup.hpp"

using namespace artinv;

TEST_CASE("generate") {
  FieldRef f5 = make_field(5, 1);
  CHECK(generate(f5, {}).size() == 1);
  Mat beta = mat_make(f5, 1, f5->neg(1), 1, 0);
  Subgroup g3 = generate(f5, {beta});
  CHECK(g3.size() == 3);
  Mat rho = mat_make(f5, 0, 1, 1, 0);
  Subgroup g6 = generate(f5, {beta, rho});
  CHECK(g6.size() == 6);
  // closure and inverses
  for (auto& a : g6.elems) {
    CHECK(g6.contains(mat_inv(a)));
    for (auto& b : g6.elems) CHECK(g6.contains(mat_mul(a, b)));
  }
}

TEST_CASE("named constructor cardinalities") {
  FieldRef f5 = make_field(5, 1);
  FieldRef f7 = make_field(7, 1);
  FieldRef f9 = make_field(3, 2);
  CHECK(pgl2_full(f5).size() == 120);
  CHECK(psl2_group(f5).size() == 60);
  CHECK(borel_group(f7).size() == 42);
  CHECK(kummer_group(f7, 3).size() == 3);
  CHECK(klein_group(f7, 1).size() == 4);
  CHECK(g3_group(f9).size() == 3);
  CHECK(g6_group(f9).size() == 6);
  CHECK(borel_sub_group(f9, 3).size() == 6);
  Subspace W = make_subspace(f9, 3, {1, 3});
  CHECK(unipotent_group(f9, W).size() == 9);
  CHECK(cyclic_group(mat_make(f5, 2, 0, 0, 1)).size() == 4);
  CHECK(order2_group(f7, 3).size() == 2);
  CHECK_THROWS_AS(kummer_group(f7, 4), Error);
  CHECK_THROWS_AS(klein_group(make_field(2, 2), 1), Error);
  // even characteristic: psl2 = pgl2
  FieldRef f4 = make_field(2, 2);
  CHECK(psl2_group(f4).size() == pgl2_full(f4).size());
}

TEST_CASE("orbits") {
  FieldRef f7 = make_field(7, 1);
  Subgroup g3 = g3_group(f7);
  Orbit Oinf = orbit_infinity(g3);
  REQUIRE(Oinf.size() == 3);
  CHECK(Oinf.points[0] == pp_inf(f7));
  CHECK(Oinf.points[1] == pp_fin(f7, 0));
  CHECK(Oinf.points[2] == pp_fin(f7, 1));
  CHECK(Oinf.multiplicity == 1);

  // char 3: the only short orbit of G3 is {-1}
  FieldRef f9 = make_field(3, 2);
  auto sh = short_orbits(g3_group(f9));
  REQUIRE(sh.size() == 1);
  REQUIRE(sh[0].size() == 1);
  FieldRef k = sh[0].points[0].f;
  CHECK(sh[0].points[0] == pp_fin(k, embed(f9, k).apply(f9->neg(1))));

  // pgl2: short orbits are F_q u {inf} and F_{q^2} - F_q
  FieldRef f3 = make_field(3, 1);
  auto shp = short_orbits(pgl2_full(f3));
  REQUIRE(shp.size() == 2);
  CHECK(shp[0].size() == 4);   // F_3 u {inf}
  CHECK(shp[0].points[0].inf);
  CHECK(shp[1].size() == 6);   // F_9 - F_3
  CHECK(shp[0].multiplicity * 4 == 24);
  CHECK(shp[1].multiplicity * 6 == 24);

  // orbit sizes divide |G|, multiplicity * size = |G|
  for (auto& G : {g3_group(f7), klein_group(f7, 1), borel_group(f7)}) {
    for (uint64_t v = 0; v < 7; ++v) {
      Orbit O = orbit(G, pp_fin(f7, v));
      CHECK(G.size() % O.size() == 0);
      CHECK(O.multiplicity * static_cast<long>(O.size()) ==
            static_cast<long>(G.size()));
    }
  }
}

TEST_CASE("union of short orbits is bounded by 2(|G|-1)") {
  for (auto q : {3, 4, 5, 7, 9, 11, 13}) {
    FieldRef f = q == 4 ? make_field(2, 2) : (q == 9 ? make_field(3, 2)
                                                     : make_field(q, 1));
    std::vector<Subgroup> groups{g3_group(f), g6_group(f), borel_group(f)};
    if (f->p != 2) groups.push_back(klein_group(f, 1));
    if ((f->order - 1) % 2 == 0) groups.push_back(kummer_group(f, 2));
    for (auto& G : groups) {
      size_t total = 0;
      for (auto& O : short_orbits(G)) total += O.size();
      CHECK(total <= 2 * (G.size() - 1));
    }
  }
}

TEST_CASE("unipotent groups: only short orbit is infinity") {
  FieldRef f9 = make_field(3, 2);
  for (auto basis : {std::vector<uint64_t>{1}, {3}, {1, 3}}) {
    Subgroup G = unipotent_group(f9, make_subspace(f9, 3, basis));
    auto sh = short_orbits(G);
    REQUIRE(sh.size() == 1);
    CHECK(sh[0].size() == 1);
    CHECK(sh[0].points[0].inf);
  }
}

TEST_CASE("conjugacy classes") {
  FieldRef f7 = make_field(7, 1);
  Subgroup g6 = g6_group(f7);
  auto cls = conjugacy_classes(g6);
  REQUIRE(cls.size() == 3);
  size_t total = 0;
  bool sizes_ok[4] = {false, false, false, false};
  for (auto& c : cls) {
    total += c.size();
    if (c.size() <= 3) sizes_ok[c.size()] = true;
    CHECK(c.contains(c.rep));
  }
  CHECK(total == 6);
  CHECK(sizes_ok[1]);  // {1}
  CHECK(sizes_ok[2]);  // {beta, beta^2}
  CHECK(sizes_ok[3]);  // {rho, rho beta, rho beta^2}

  // abelian: all singletons
  for (auto& c : conjugacy_classes(kummer_group(f7, 6))) CHECK(c.size() == 1);

  // borel: classes are C_{diag(a,1)} for a != 1 plus C_{(1 1;0 1)} and {1}
  Subgroup B = borel_group(f7);
  auto bcls = conjugacy_classes(B);
  CHECK(bcls.size() == 7);  // identity + 5 diagonal classes + unipotent class
  long cnt1 = 0, cntq = 0, cnt_other = 0;
  for (auto& c : bcls) {
    if (c.size() == 1) ++cnt1;
    else if (c.size() == 6) ++cntq;  // q-1 = 6: unipotent class
    else ++cnt_other;
  }
  CHECK(cnt1 == 1);
  CHECK(cntq >= 1);
  CHECK(cnt_other == 5);  // the diagonal classes C_{(a 0;0 1)}, size 7
  // class_of agrees with the partition
  for (auto& c : bcls)
    CHECK(class_of(B, c.rep).members == c.members);
}

TEST_CASE("centralizers have size q + kappa") {
  FieldRef f5 = make_field(5, 1);
  Subgroup Z1 = centralizer(mat_make(f5, 1, 1, 0, 1));
  CHECK(Z1.size() == 5);
  for (auto& z : Z1.elems) {
    CHECK(z.c == 0);
    CHECK(z.a == z.d);
  }
  Subgroup Z2 = centralizer(mat_make(f5, 2, 0, 0, 1));
  CHECK(Z2.size() == 4);
  for (auto& z : Z2.elems) CHECK((z.b == 0 && z.c == 0));
  FieldRef k25 = quadratic_ext(f5);
  uint64_t lambda = least_irrational(f5, k25);
  auto [K, zeta] = primitive_cube_root(f5);
  REQUIRE(K == k25);
  Subgroup Z3 = centralizer(e_zeta_lambda(f5, zeta, lambda));
  CHECK(Z3.size() == 6);
  // cross-check against brute force over PGL2(F_5).  For elements of
  // order >= 3 (and unipotents) the commutant is exactly Z_gamma; for
  // involutions the commutant is dihedral of order 2(q+kappa) and
  // Z_gamma is its torus part.
  Subgroup full = pgl2_full(f5);
  for (auto g : {mat_make(f5, 1, 1, 0, 1), mat_make(f5, 2, 0, 0, 1),
                 e_zeta_lambda(f5, zeta, lambda), mat_make(f5, 1, 2, 3, 4)}) {
    Subgroup Z = centralizer(g);
    long brute = 0;
    for (auto& h : full.elems)
      if (mat_mul(h, g) == mat_mul(g, h)) ++brute;
    for (auto& z : Z.elems) CHECK(mat_mul(z, g) == mat_mul(g, z));
    if (mat_order(g) != 2)
      CHECK(static_cast<long>(Z.size()) == brute);
    else
      CHECK(2 * static_cast<long>(Z.size()) == brute);
  }
}

TEST_CASE("counting proposition for order >= 3 elements") {
  // L = union over the class of {v not in F_{q^2} : v^q = beta(v)} splits
  // into |C|(q+kappa)/|G| full orbits
  for (auto q : {3, 5}) {
    FieldRef f = make_field(q, 1);
    Subgroup G = pgl2_full(f);
    auto cls = conjugacy_classes(G);
    for (auto& c : cls) {
      int t = mat_order(c.rep);
      if (t < 3) continue;
      FieldRef Kt = make_field(f->p, f->n * t);
      std::vector<ProjPoint> L;
      for (auto& beta : c.members) {
        // roots of x^q (c x + d) - (a x + b) of degree exactly t
        Poly w = p_sub(
            p_mul(p_pow(p_x(f), q), p_of(f, {beta.d, beta.c})),
            p_of(f, {beta.b, beta.a}));
        for (uint64_t r : roots_in(w, Kt)) {
          // degree exactly t <=> not fixed by Frob^s for proper divisors s
          bool deg_t = true;
          for (int s = 1; s < t; ++s)
            if (t % s == 0 && frobenius(Kt, r, q, s) == r) deg_t = false;
          if (deg_t) L.push_back(pp_fin(Kt, r));
        }
      }
      std::sort(L.begin(), L.end(), pp_less);
      L.erase(std::unique(L.begin(), L.end()), L.end());
      int kappa = (static_cast<int>(q) + 1) % t == 0 ? 1
                  : (static_cast<int>(q) % t == 0 ? 0 : -1);
      CHECK(L.size() == c.size() * (q + kappa));
      // count orbits, identified by their least point
      std::set<std::pair<bool, uint64_t>> orbits;
      for (auto& v : L) {
        Orbit O = orbit(G, v);
        CHECK(O.size() == G.size());
        orbits.insert({O.points.front().inf, O.points.front().v});
      }
      CHECK(orbits.size() == c.size() * (q + kappa) / G.size());
    }
  }
}
