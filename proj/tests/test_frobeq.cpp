#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "artinv/frobeq.hpp"

using namespace artinv;

namespace {
std::vector<Mat> all_pgl2(FieldRef f) {
  return pgl2_full(f).elems;
}
}  // namespace

TEST_CASE("s_gamma stratification") {
  FieldRef f5 = make_field(5, 1);
  SGamma s1 = s_gamma(mat_make(f5, 1, 1, 0, 1));
  REQUIRE(s1.rational.size() == 1);
  CHECK(s1.rational[0].inf);
  CHECK(s1.t == 5);
  CHECK(s1.degree_t.size() == 5);

  SGamma s2 = s_gamma(mat_make(f5, 2, 0, 0, 1));
  REQUIRE(s2.rational.size() == 2);
  CHECK(s2.rational[0].inf);
  CHECK(s2.rational[1] == pp_fin(f5, 0));
  CHECK(s2.t == 4);
  CHECK(s2.degree_t.size() == 4);

  FieldRef k25 = quadratic_ext(f5);
  auto [K, zeta] = primitive_cube_root(f5);
  REQUIRE(K == k25);
  Mat E = e_zeta_lambda(f5, zeta, least_irrational(f5, k25));
  SGamma s3 = s_gamma(E);
  CHECK(s3.rational.empty());
  CHECK(s3.t == 3);
  CHECK(s3.degree_t.size() == 6);
}

TEST_CASE("predicted shapes for the worked examples") {
  // (1 1;0 1) over F_q = p^e: p^{e-1} factors of degree p
  FieldRef f9 = make_field(3, 2);
  FrobShape sh = predict_factor_shape(mat_make(f9, 1, 1, 0, 1));
  CHECK(sh.t == 3);
  CHECK(sh.count_t == 3);
  CHECK(sh.kappa == 0);

  // (1 0;0 -1) over F_3: one quadratic factor, one linear, kappa = -1
  FieldRef f3 = make_field(3, 1);
  FrobShape sh2 = predict_factor_shape(mat_make(f3, 1, 0, 0, f3->neg(1)));
  CHECK(sh2.t == 2);
  CHECK(sh2.count_t == 1);
  CHECK(sh2.kappa == -1);
  CHECK(sh2.count_linear == 2);  // one root of f plus infinity (c = 0)

  // (0 -1;1 0) over F_3: f = x^4 + 1 = two irreducible quadratics
  Mat rot = mat_make(f3, 0, f3->neg(1), 1, 0);
  FrobShape sh3 = predict_factor_shape(rot);
  CHECK(sh3.t == 2);
  CHECK(sh3.count_t == 2);
  CHECK(sh3.kappa == 1);
  CHECK(sh3.count_linear == 0);
  Poly w = frob_poly(rot);
  CHECK(p_monic(w) == p_of(f3, {1, 0, 0, 0, 1}));
  auto parts = ddf(w, 3);
  REQUIRE(parts.size() == 1);
  CHECK(parts[0].first == 2);
  Poly expect = p_mul(p_of(f3, {2, 1, 1}), p_of(f3, {2, 2, 1}));
  CHECK(parts[0].second == expect);
}

TEST_CASE("predicted = actual for all nonscalar matrices, q in {3,4,5}") {
  for (auto qs : {"3", "4", "5"}) {
    FieldRef f = parse_field(qs);
    for (auto& g : all_pgl2(f)) {
      if (g.is_identity()) continue;
      ShapeCheck sc = verify_factor_shape(g);
      INFO("gamma = ", mat_to_string(g));
      CHECK(sc.agree);
      // |S| = q + 1
      CHECK(sc.actual.t * sc.actual.count_t + sc.actual.count_linear ==
            static_cast<long>(f->order) + 1);
    }
  }
}

TEST_CASE("S^(t) is a single centralizer orbit") {
  for (auto qs : {"3", "4", "5"}) {
    FieldRef f = parse_field(qs);
    for (auto& g : all_pgl2(f)) {
      if (g.is_identity()) continue;
      SGamma s = s_gamma(g);
      if (!s.listed || s.degree_t.empty()) continue;
      Subgroup Z = centralizer(g);
      // orbit of the first degree-t point under Z_gamma is all of S^(t)
      FieldRef L = s.degree_t.front().f;
      std::vector<ProjPoint> orb;
      for (auto& z : Z.elems) orb.push_back(act(mat_embed(z, L), s.degree_t.front()));
      std::sort(orb.begin(), orb.end(), pp_less);
      orb.erase(std::unique(orb.begin(), orb.end()), orb.end());
      CHECK(orb == s.degree_t);
      CHECK(Z.size() == s.degree_t.size());
    }
  }
}
