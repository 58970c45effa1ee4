#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <vector>

#include "artinv/pgl2.hpp"

using namespace artinv;

namespace {
std::vector<Mat> all_pgl2(FieldRef f) {
  std::vector<Mat> out;
  uint64_t q = f->order;
  for (uint64_t a = 0; a < q; ++a)
    for (uint64_t b = 0; b < q; ++b)
      for (uint64_t c = 0; c < q; ++c)
        for (uint64_t d = 0; d < q; ++d) {
          if (f->sub(f->mul(a, d), f->mul(b, c)) == 0) continue;
          uint64_t lead = a ? a : (b ? b : (c ? c : d));
          if (lead != 1) continue;  // canonical representatives only
          out.push_back(Mat{f, a, b, c, d});
        }
  return out;
}
}  // namespace

TEST_CASE("action and composition") {
  FieldRef f5 = make_field(5, 1);
  Mat id = mat_id(f5);
  for (uint64_t v = 0; v < 5; ++v)
    CHECK(act(id, pp_fin(f5, v)) == pp_fin(f5, v));
  CHECK(act(id, pp_inf(f5)) == pp_inf(f5));
  // (a 1; 1 0) sends infinity to a
  Mat m = mat_make(f5, 3, 1, 1, 0);
  CHECK(act(m, pp_inf(f5)) == pp_fin(f5, 3));
  // beta = (1 -1; 1 0): beta(2) = 1/2 = 3 mod 5
  Mat beta = mat_make(f5, 1, f5->neg(1), 1, 0);
  CHECK(act(beta, pp_fin(f5, 2)) == pp_fin(f5, 3));
  // act(gd, v) = act(g, act(d, v)) exhaustively over F_3
  FieldRef f3 = make_field(3, 1);
  auto els = all_pgl2(f3);
  std::vector<ProjPoint> pts{pp_inf(f3)};
  for (uint64_t v = 0; v < 3; ++v) pts.push_back(pp_fin(f3, v));
  for (auto& g : els)
    for (auto& d : els)
      for (auto& v : pts)
        CHECK(act(mat_mul(g, d), v) == act(g, act(d, v)));
}

TEST_CASE("canonicalization ignores scalars") {
  for (auto q : {3, 5, 7}) {
    FieldRef f = make_field(q, 1);
    for (auto& g : all_pgl2(f))
      for (uint64_t k = 1; k < f->order; ++k) {
        Mat scaled = mat_make(f, f->mul(k, g.a), f->mul(k, g.b),
                              f->mul(k, g.c), f->mul(k, g.d));
        CHECK(scaled == g);
      }
  }
}

TEST_CASE("order") {
  FieldRef f5 = make_field(5, 1);
  CHECK(mat_order(mat_make(f5, 1, 1, 0, 1)) == 5);
  CHECK(mat_order(mat_make(f5, 1, f5->neg(1), 1, 0)) == 3);
  CHECK(mat_order(mat_make(f5, 2, 0, 0, 1)) == 4);
  FieldRef f4 = make_field(2, 2);
  CHECK(mat_order(mat_make(f4, 1, 1, 0, 1)) == 2);
  CHECK(mat_order(mat_make(f4, 1, 1, 1, 0)) == 3);
}

TEST_CASE("iota") {
  FieldRef f7 = make_field(7, 1);
  CHECK(iota(mat_make(f7, 1, 1, 0, 1)) == 4);
  CHECK(iota(mat_make(f7, 1, 0, 0, f7->neg(1))) == 0);
  uint64_t zeta = 2;  // in F_7
  Mat dz = mat_make(f7, zeta, 0, 0, 1);
  uint64_t expect = f7->div(f7->mul(f7->add(zeta, 1), f7->add(zeta, 1)), zeta);
  CHECK(iota(dz) == expect);
  // conjugation invariance, exhaustive over F_5
  FieldRef f5 = make_field(5, 1);
  auto els = all_pgl2(f5);
  for (auto& g : els)
    for (auto& h : els) CHECK(iota(mat_conj(h, g)) == iota(g));
  // order 2 <=> iota 0, order p <=> iota 4, exhaustive q <= 7
  for (auto q : {3, 4, 5, 7}) {
    FieldRef f = q == 4 ? make_field(2, 2) : make_field(q, 1);
    for (auto& g : all_pgl2(f)) {
      if (g.is_identity()) continue;
      CHECK((mat_order(g) == 2) == (iota(g) == 0));
      CHECK((mat_order(g) == static_cast<int>(f->p)) ==
            (iota(g) == f->from_int(4)));
    }
  }
}

TEST_CASE("same nonzero iota implies conjugate (q <= 7)") {
  for (auto q : {3, 4, 5, 7}) {
    FieldRef f = q == 4 ? make_field(2, 2) : make_field(q, 1);
    auto els = all_pgl2(f);
    for (auto& g : els) {
      if (g.is_identity() || iota(g) == 0) continue;
      for (auto& g2 : els) {
        if (g2.is_identity() || iota(g2) != iota(g)) continue;
        bool conjugate = false;
        for (auto& h : els)
          if (mat_conj(h, g) == g2) {
            conjugate = true;
            break;
          }
        CHECK(conjugate);
      }
    }
  }
}

TEST_CASE("fixed points") {
  FieldRef f5 = make_field(5, 1);
  FieldRef k25 = quadratic_ext(f5);
  auto fp1 = fixed_points(mat_make(f5, 1, 1, 0, 1));
  REQUIRE(fp1.size() == 1);
  CHECK(fp1[0].inf);
  auto fp2 = fixed_points(mat_make(f5, 2, 0, 0, 1));
  REQUIRE(fp2.size() == 2);
  CHECK(fp2[0] == pp_inf(k25));
  CHECK(fp2[1] == pp_fin(k25, 0));
  FieldRef f3 = make_field(3, 1);
  auto fp3 = fixed_points(mat_make(f3, 0, f3->neg(1), 1, 0));
  REQUIRE(fp3.size() == 2);
  FieldRef k9 = quadratic_ext(f3);
  for (auto& z : fp3) {
    CHECK(!z.inf);
    // z^2 = -1 has no rational root mod 3
    CHECK(frobenius(k9, z.v, 3, 1) != z.v);
  }
  CHECK_THROWS_AS(fixed_points(mat_id(f5)), Error);
}

TEST_CASE("triple transitivity and the cardinality of PGL2") {
  for (auto q : {3, 4, 5}) {
    FieldRef f = q == 4 ? make_field(2, 2) : make_field(q, 1);
    std::vector<ProjPoint> pts{pp_inf(f)};
    for (uint64_t v = 0; v < f->order; ++v) pts.push_back(pp_fin(f, v));
    long count = 0;
    for (auto& a : pts)
      for (auto& b : pts)
        for (auto& c : pts) {
          if (a == b || b == c || a == c) continue;
          Mat g = mat_taking_std_triple(f, a, b, c);
          CHECK(act(g, pp_inf(f)) == a);
          CHECK(act(g, pp_fin(f, 0)) == b);
          CHECK(act(g, pp_fin(f, 1)) == c);
          ++count;
        }
    long expected = static_cast<long>((f->order + 1) * f->order * (f->order - 1));
    CHECK(count == expected);
    CHECK(static_cast<long>(all_pgl2(f).size()) == expected);
  }
}

TEST_CASE("dickson classification") {
  FieldRef f5 = make_field(5, 1);
  auto da = dickson_classify(mat_make(f5, 1, 1, 0, 1));
  CHECK(da.kind == DicksonForm::Case::A);
  CHECK(da.param == 1);
  CHECK(da.conj == mat_id(f5));
  CHECK(da.kappa() == 0);

  auto db = dickson_classify(mat_make(f5, 2, 0, 0, 1));
  CHECK(db.kind == DicksonForm::Case::B);
  CHECK(db.param == 2);
  CHECK(db.kappa() == -1);
  CHECK(mat_conj(db.conj, mat_make(f5, db.param, 0, 0, 1)) ==
        mat_make(f5, 2, 0, 0, 1));

  FieldRef f3 = make_field(3, 1);
  Mat rot = mat_make(f3, 0, f3->neg(1), 1, 0);
  auto dc = dickson_classify(rot);
  CHECK(dc.kind == DicksonForm::Case::C);
  CHECK(dc.kappa() == 1);
  FieldRef k9 = quadratic_ext(f3);
  CHECK(dc.param == k9->neg(1));  // projective order 2 means zeta = -1
  CHECK(mat_order(rot) == 2);
  // lambda is the least fixed point, a root of z^2+1
  CHECK(k9->add(k9->mul(dc.lambda, dc.lambda), 1) == 0);

  // every non-identity element classifies consistently, q in {3,4,5,7}
  for (auto q : {3, 4, 5, 7}) {
    FieldRef f = q == 4 ? make_field(2, 2) : make_field(q, 1);
    for (auto& g : all_pgl2(f)) {
      if (g.is_identity()) continue;
      auto dform = dickson_classify(g);
      int t = mat_order(g);
      switch (dform.kind) {
        case DicksonForm::Case::A:
          CHECK(t == static_cast<int>(f->p));
          CHECK(mat_conj(dform.conj, mat_make(f, 1, dform.param, 0, 1)) == g);
          break;
        case DicksonForm::Case::B:
          CHECK((f->order - 1) % t == 0);
          CHECK(mult_order(f, dform.param) == static_cast<uint64_t>(t));
          break;
        case DicksonForm::Case::C: {
          CHECK((f->order + 1) % t == 0);
          FieldRef K2 = quadratic_ext(f);
          CHECK(mult_order(K2, dform.param) == static_cast<uint64_t>(t));
          CHECK(e_zeta_lambda(f, dform.param, dform.lambda) == g);
          break;
        }
      }
    }
  }
}

TEST_CASE("C_lambda, D and E matrices") {
  FieldRef f5 = make_field(5, 1);
  FieldRef k25 = quadratic_ext(f5);
  uint64_t lambda = least_irrational(f5, k25);
  CHECK(e_zeta_lambda(f5, 1, lambda) == mat_id(f5));
  // zeta a primitive cube root of unity in F_25 (3 | q+1)
  auto [K, zeta] = primitive_cube_root(f5);
  REQUIRE(K == k25);
  Mat E = e_zeta_lambda(f5, zeta, lambda);
  CHECK(mat_order(E) == 3);
  // fixed points of E are {lambda, lambda^q}
  auto fps = fixed_points(E);
  REQUIRE(fps.size() == 2);
  CHECK(fps[0].v == std::min(lambda, frobenius(k25, lambda, 5, 1)));
  CHECK(fps[1].v == std::max(lambda, frobenius(k25, lambda, 5, 1)));
  // D_{delta,lambda} with delta^{q-1} = zeta agrees with E
  uint64_t delta = 0;
  for (uint64_t v = 1; v < k25->order; ++v)
    if (k25->pow(v, 4) == zeta) {
      delta = v;
      break;
    }
  REQUIRE(delta != 0);
  CHECK(d_delta_lambda(f5, delta, lambda) == E);
  CHECK_THROWS_AS(e_zeta_lambda(f5, 2, lambda), Error);  // 2^6 != 1 in F_25
}
