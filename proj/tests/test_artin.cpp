#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "artinv/artin.hpp"

using namespace artinv;

TEST_CASE("inv_general basic examples") {
  // kummer(2) over F_7, tau = 4 (a square): identity
  FieldRef f7 = make_field(7, 1);
  QuotientMap qk = named_quotient(f7, parse_group_spec("kummer:2"));
  ArtinResult r = inv_general(qk, pp_fin(f7, 4));
  REQUIRE(r.regular);
  CHECK(r.cls.rep.is_identity());
  ArtinResult r3 = inv_general(qk, pp_fin(f7, 3));  // nonsquare
  REQUIRE(r3.regular);
  CHECK(r3.cls.rep == mat_make(f7, f7->neg(1), 0, 0, 1));
  CHECK(!inv_general(qk, pp_fin(f7, 0)).regular);
  CHECK(!inv_general(qk, pp_inf(f7)).regular);

  // g3 over F_4, tau = 0: the class of beta^2
  FieldRef f4 = make_field(2, 2);
  QuotientMap q3 = named_quotient(f4, parse_group_spec("g3"));
  ArtinResult r40 = inv_general(q3, pp_fin(f4, 0));
  REQUIRE(r40.regular);
  Mat beta = mat_make(f4, 1, f4->neg(1), 1, 0);
  CHECK(r40.cls.rep == mat_mul(beta, beta));

  // pgl2 over F_5, tau = 0: irregular
  FieldRef f5 = make_field(5, 1);
  QuotientMap qp = named_quotient(f5, parse_group_spec("pgl2"));
  CHECK(!inv_general(qp, pp_fin(f5, 0)).regular);
  // and tau = 4 lands on the unipotent class (Corollary for tau = 4)
  ArtinResult r4 = inv_general(qp, pp_fin(f5, 4));
  REQUIRE(r4.regular);
  CHECK(r4.cls.contains(mat_make(f5, 1, 1, 0, 1)));

  // g3 over any field: infinity is regular with identity class
  ArtinResult rinf = inv_general(q3, pp_inf(f4));
  REQUIRE(rinf.regular);
  CHECK(rinf.cls.rep.is_identity());
}

TEST_CASE("closed forms match the derived examples") {
  FieldRef f7 = make_field(7, 1);
  // klein(1) over F_7, tau = 2: A = (2/7) = 1, B = (1/7) = 1 -> identity
  ArtinResult rk = closed_form(f7, parse_group_spec("klein:1"), pp_fin(f7, 2));
  REQUIRE(rk.regular);
  CHECK(rk.cls.rep.is_identity());
  // borel over F_7, tau = 3 -> class of diag(3, 1)
  ArtinResult rb = closed_form(f7, parse_group_spec("borel"), pp_fin(f7, 3));
  REQUIRE(rb.regular);
  CHECK(rb.cls.contains(mat_make(f7, 3, 0, 0, 1)));
  // borel over F_7, tau = 1 -> unipotent class
  ArtinResult rb1 = closed_form(f7, parse_group_spec("borel"), pp_fin(f7, 1));
  REQUIRE(rb1.regular);
  CHECK(rb1.cls.contains(mat_make(f7, 1, 1, 0, 1)));
}

TEST_CASE("tripartite symbol") {
  // q = 3, tau = 1: trace formula gives 1
  FieldRef f3 = make_field(3, 1);
  CHECK(tripartite_symbol(f3, 1) == 1);
  // q = 4, tau = 0 -> ell = 2
  FieldRef f4 = make_field(2, 2);
  CHECK(tripartite_symbol(f4, 0) == 2);
  CHECK_THROWS_AS(tripartite_symbol(f3, 0), Error);
  // omega-choice independence and the defining property, small grid
  for (auto qs : {"3", "4", "5", "7", "9"}) {
    FieldRef f = parse_field(qs);
    QuotientMap q3 = named_quotient(f, parse_group_spec("g3"));
    for (uint64_t t = 0; t < f->order; ++t) {
      uint64_t three = f->from_int(3), nine = f->from_int(9);
      if (f->add(f->sub(f->mul(t, t), f->mul(three, t)), nine) == 0) continue;
      int ell = tripartite_symbol(f, t);
      CHECK(tripartite_symbol_alt(f, t) == ell);
      // engine agreement
      ArtinResult r = inv_general(q3, pp_fin(f, t));
      REQUIRE(r.regular);
      Mat beta = mat_make(f, 1, f->neg(1), 1, 0);
      Mat expect = mat_id(f);
      for (int i = 0; i < ell; ++i) expect = mat_mul(expect, beta);
      CHECK(r.cls.rep == expect);
      // symmetry: symbol(3 - tau) = -symbol(tau)
      int ell2 = tripartite_symbol(f, f->sub(three, t));
      CHECK((ell + ell2) % 3 == 0);
    }
  }
}

TEST_CASE("engine equals closed form on a compact grid") {
  struct Item {
    const char* field;
    const char* spec;
  };
  for (auto [field, spec] : {Item{"7", "kummer:3"},
                             Item{"7", "klein:1"},
                             Item{"7", "klein:3"},
                             Item{"5", "order2:1"},
                             Item{"4", "order2:1"},
                             Item{"8", "order2:[1,1,0]"},
                             Item{"7", "g3"},
                             Item{"9", "g3"},
                             Item{"7", "g6"},
                             Item{"8", "g6"},
                             Item{"9", "g6"},
                             Item{"7", "borel"},
                             Item{"9", "borelP:3"},
                             Item{"9", "unipotent:basis=[3]"},
                             Item{"5", "pgl2"},
                             Item{"4", "pgl2"},
                             Item{"5", "psl2"},
                             Item{"7", "psl2"}}) {
    FieldRef f = parse_field(field);
    GroupSpec gs = parse_group_spec(spec);
    QuotientMap Q = named_quotient(f, gs);
    for (uint64_t v = 0; v <= f->order; ++v) {
      ProjPoint tau = v == f->order ? pp_inf(f) : pp_fin(f, v);
      ArtinResult lhs = inv_general(Q, tau);
      ArtinResult rhs = closed_form(f, gs, tau);
      INFO("field ", std::string(field), " spec ", std::string(spec), " tau ", pp_to_string(tau));
      CHECK(lhs.same_class(rhs));
    }
  }
}

TEST_CASE("cyclic groups in all three Dickson cases") {
  FieldRef f5 = make_field(5, 1);
  FieldRef f9 = make_field(3, 2);
  std::vector<std::pair<FieldRef, Mat>> gens;
  gens.push_back({f5, mat_make(f5, 2, 0, 0, 1)});   // case (b), order 4
  gens.push_back({f5, mat_make(f5, 1, 1, 0, 1)});   // case (a), order 5
  gens.push_back({f5, mat_make(f5, 0, 4, 1, 0)});   // nonsquare flip: case (c)
  gens.push_back({f9, mat_make(f9, 1, 3, 0, 1)});   // case (a) over F_9
  FieldRef k25 = quadratic_ext(f5);
  auto [K, zeta] = primitive_cube_root(f5);
  REQUIRE(K == k25);
  gens.push_back({f5, e_zeta_lambda(f5, zeta, least_irrational(f5, k25))});
  for (auto& [f, g] : gens) {
    GroupSpec gs = parse_group_spec("cyclic:" + mat_to_string(g));
    QuotientMap Q = named_quotient(f, gs);
    for (uint64_t v = 0; v <= f->order; ++v) {
      ProjPoint tau = v == f->order ? pp_inf(f) : pp_fin(f, v);
      ArtinResult lhs = inv_general(Q, tau);
      ArtinResult rhs = closed_form(f, gs, tau);
      INFO("gen ", mat_to_string(g), " tau ", pp_to_string(tau));
      CHECK(lhs.same_class(rhs));
    }
  }
}

TEST_CASE("census") {
  // g3 over F_5: kappa = 1, every element has N = 2
  FieldRef f5 = make_field(5, 1);
  Census c = census(named_quotient(f5, parse_group_spec("g3")));
  REQUIRE(c.counts.size() == 3);
  for (auto& [cls, n] : c.counts) CHECK(n == 2);
  CHECK(c.infinity_regular);
  CHECK(c.regular_count == 6);
  // kummer(2) over F_7: kappa = -1, N = 3 per element, {0, inf} irregular
  FieldRef f7 = make_field(7, 1);
  Census c2 = census(named_quotient(f7, parse_group_spec("kummer:2")));
  REQUIRE(c2.counts.size() == 2);
  for (auto& [cls, n] : c2.counts) CHECK(n == 3);
  CHECK(!c2.infinity_regular);
  CHECK(c2.irregular_taus.size() == 2);
  // cyclic equidistribution N = (q + kappa)/ell for the three cases
  for (auto& [f, gen] :
       std::vector<std::pair<FieldRef, Mat>>{
           {f5, mat_make(f5, 2, 0, 0, 1)},
           {f5, mat_make(f5, 1, 1, 0, 1)},
           {f5, mat_make(f5, 0, 4, 1, 0)}}) {
    Census cc = census(named_quotient(
        f, parse_group_spec("cyclic:" + mat_to_string(gen))));
    DicksonForm form = dickson_classify(gen);
    long expect = static_cast<long>(f->order + form.kappa()) /
                  static_cast<long>(mat_order(gen));
    for (auto& [cls, n] : cc.counts) CHECK(n == expect);
  }
}

TEST_CASE("affine and conjugation transport") {
  FieldRef f7 = make_field(7, 1);
  QuotientMap q3 = named_quotient(f7, parse_group_spec("g3"));
  for (uint64_t v = 0; v < 7; ++v) {
    affine_transport(q3, 1, 0, pp_fin(f7, v));
    affine_transport(q3, 2, 5, pp_fin(f7, v));
  }
  affine_transport(q3, 2, 5, pp_inf(f7));
  QuotientMap qk = named_quotient(f7, parse_group_spec("klein:1"));
  for (uint64_t v = 0; v < 7; ++v)
    affine_transport(qk, f7->neg(1), 1, pp_fin(f7, v));
  // conjugation: kummer(2), g3, klein(1) by assorted alphas
  QuotientMap q2 = named_quotient(f7, parse_group_spec("kummer:2"));
  for (uint64_t v = 0; v <= 7; ++v) {
    ProjPoint tau = v == 7 ? pp_inf(f7) : pp_fin(f7, v);
    conjugation_transport(q2, mat_make(f7, 1, 1, 0, 1), tau);
    conjugation_transport(q3, mat_make(f7, 2, 1, 3, 4), tau);
    conjugation_transport(qk, mat_make(f7, 0, 1, 1, 0), tau);
  }
}

TEST_CASE("subgroup transport: G3 inside G6") {
  FieldRef f7 = make_field(7, 1);
  QuotientMap q3 = named_quotient(f7, parse_group_spec("g3"));
  QuotientMap q6 = named_quotient(f7, parse_group_spec("g6"));
  RatFunc h = relate(q3, q6);
  for (uint64_t v = 0; v < 7; ++v) {
    ProjPoint tau = pp_fin(f7, v);
    ProjPoint htau = eval_proj(h, tau, f7);
    ArtinResult rG = htau.inf ? ArtinResult{} : inv_general(q6, htau);
    if (htau.inf || !rG.regular) continue;
    SubgroupTransport st = subgroup_transport(q3, q6, tau);
    CHECK(st.class_in_H.contains(st.common_delta));
    CHECK(st.class_in_G.contains(st.common_delta));
  }
  // trivial: H = G (tau = 3 is regular for G3 over F_7)
  SubgroupTransport st = subgroup_transport(q3, q3, pp_fin(f7, 3));
  CHECK(st.class_in_H.rep == st.class_in_G.rep);
}

TEST_CASE("pgl2 bijection and the iota counterexample") {
  for (auto qs : {"3", "4", "5"}) {
    FieldRef f = parse_field(qs);
    auto rows = pgl2_bijection(f);
    CHECK(rows.size() == f->order - 1);
  }
  // q = 5: orders {3, 4, 6, 5} pair with tau {1, 2, 3, 4}
  FieldRef f5 = make_field(5, 1);
  auto rows = pgl2_bijection(f5);
  REQUIRE(rows.size() == 4);
  CHECK(rows[0].order == 3);  // tau = 1
  CHECK(rows[1].order == 4);  // tau = 2
  CHECK(rows[2].order == 6);  // tau = 3
  CHECK(rows[3].order == 5);  // tau = 4
  // iota((1 0;0 -1)) = iota((0 1;-1 0)) = 0 over F_3 yet the classes differ
  FieldRef f3 = make_field(3, 1);
  Mat g1 = mat_make(f3, 1, 0, 0, f3->neg(1));
  Mat g2 = mat_make(f3, 0, 1, f3->neg(1), 0);
  CHECK(iota(g1) == 0);
  CHECK(iota(g2) == 0);
  Subgroup G = pgl2_full(f3);
  CHECK(!class_of(G, g1).contains(g2));
}

TEST_CASE("brute oracle agrees with the engine") {
  for (auto [fs, spec] : {std::pair<const char*, const char*>{"5", "g3"},
                          {"7", "klein:1"},
                          {"4", "g6"},
                          {"5", "kummer:4"},
                          {"3", "pgl2"}}) {
    FieldRef f = parse_field(fs);
    GroupSpec gs = parse_group_spec(spec);
    QuotientMap Q = named_quotient(f, gs);
    for (uint64_t v = 0; v <= f->order; ++v) {
      ProjPoint tau = v == f->order ? pp_inf(f) : pp_fin(f, v);
      ArtinResult lhs = inv_general(Q, tau);
      ArtinResult rhs = inv_brute_oracle(Q, tau);
      INFO("field ", std::string(fs), " spec ", std::string(spec), " tau ", pp_to_string(tau));
      CHECK(lhs.same_class(rhs));
    }
  }
}

TEST_CASE("preimage orbit check") {
  FieldRef f5 = make_field(5, 1);
  QuotientMap q3 = named_quotient(f5, parse_group_spec("g3"));
  for (uint64_t v = 0; v < 5; ++v) {
    ArtinResult r = inv_general(q3, pp_fin(f5, v));
    if (r.regular) check_preimage_full_orbit(q3, pp_fin(f5, v));
  }
  QuotientMap qp = named_quotient(f5, parse_group_spec("pgl2"));
  check_preimage_full_orbit(qp, pp_fin(f5, 4));
}
