#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "artinv/poly.hpp"

using namespace artinv;

namespace {
// Q3 = (x^3 - 3x + 1) / (x^2 - x)
RatFunc q3(FieldRef f) {
  Poly num = p_of(f, {1, f->neg(3 % f->p), 0, 1});
  Poly den = p_of(f, {0, f->neg(1), 1});
  return reduce(num, den);
}
}  // namespace

TEST_CASE("arithmetic suite") {
  FieldRef f5 = make_field(5, 1);
  Poly a = p_of(f5, {4, 0, 1});  // x^2 - 1
  Poly b = p_of(f5, {4, 1});     // x - 1
  CHECK(p_gcd(a, b) == b);
  RatFunc r = reduce(a, b);
  CHECK(r.num == p_of(f5, {1, 1}));
  CHECK(r.den == p_const(f5, 1));
  // reduce is idempotent
  RatFunc r2 = reduce(r.num, r.den);
  CHECK(r2 == r);
  // divmod identity on a small exhaustive grid
  for (uint64_t c0 = 0; c0 < 5; ++c0)
    for (uint64_t c1 = 0; c1 < 5; ++c1) {
      Poly u = p_of(f5, {c0, c1, 3, 1});
      Poly q, rem;
      p_divmod(u, b, q, rem);
      CHECK(p_add(p_mul(q, b), rem) == u);
      CHECK(rem.deg() < b.deg());
    }
  CHECK_THROWS_AS(p_rem(a, p_zero(f5)), Error);
  CHECK_THROWS_AS(p_add(a, p_of(make_field(7, 1), {1})), Error);
}

TEST_CASE("Moebius composition invariance of Q3") {
  FieldRef f5 = make_field(5, 1);
  RatFunc Q = q3(f5);
  // x -> 1 - 1/x = (x-1)/x
  RatFunc C = rf_compose_mobius(Q, 1, f5->neg(1), 1, 0);
  CHECK(C == Q);
}

TEST_CASE("eval_proj conventions") {
  FieldRef f7 = make_field(7, 1);
  RatFunc Q = q3(f7);
  CHECK(eval_proj(Q, pp_inf(f7), f7) == pp_inf(f7));
  RatFunc inv_x = reduce(p_const(f7, 1), p_x(f7));
  CHECK(eval_proj(inv_x, pp_fin(f7, 0), f7) == pp_inf(f7));
  // Q3(-1) = 3/2 = 5 mod 7
  CHECK(eval_proj(Q, pp_fin(f7, 6), f7) == pp_fin(f7, 5));
  // eval agrees with direct f(v)/g(v) wherever both defined
  for (uint64_t v = 0; v < 7; ++v) {
    uint64_t dv = p_eval(Q.den, v);
    if (dv == 0) continue;
    uint64_t expect = f7->div(p_eval(Q.num, v), dv);
    CHECK(eval_proj(Q, pp_fin(f7, v), f7) == pp_fin(f7, expect));
  }
}

TEST_CASE("frob_power_mod") {
  FieldRef f3 = make_field(3, 1);
  Poly h = p_of(f3, {1, 0, 1});  // x^2 + 1
  CHECK(frob_power_mod(h, 3, 1) == p_of(f3, {0, 2}));
  CHECK(frob_power_mod(h, 3, 0) == p_x(f3));
  FieldRef f5 = make_field(5, 1);
  Poly as = p_of(f5, {4, 4, 0, 0, 0, 1});  // x^5 - x - 1
  CHECK(frob_power_mod(as, 5, 5) == p_x(f5));
  // oracle: x^{q^d} mod h by plain modular exponentiation
  for (auto [p, n] : {std::pair<int, int>{3, 1}, {2, 3}, {9, 0}}) {
    FieldRef f = p == 9 ? make_field(3, 2) : make_field(p, n);
    uint64_t q = f->order;
    Poly m = p_of(f, {1, 2 % q, 0, 1, 1, 0, 0, 0, 1});
    for (int d = 0; d <= 3; ++d) {
      uint64_t e = 1;
      for (int i = 0; i < d; ++i) e *= q;
      CHECK(frob_power_mod(m, q, d) == p_powmod(p_x(f), e, m));
    }
  }
}

TEST_CASE("ddf") {
  FieldRef f5 = make_field(5, 1);
  Poly a = p_of(f5, {4, 0, 1});  // x^2 - 1 splits into linears
  auto fa = ddf(a, 5);
  REQUIRE(fa.size() == 1);
  CHECK(fa[0].first == 1);
  CHECK(fa[0].second == a);
  Poly as = p_of(f5, {4, 4, 0, 0, 0, 1});  // x^5 - x - 1, irreducible
  auto fb = ddf(as, 5);
  REQUIRE(fb.size() == 1);
  CHECK(fb[0].first == 5);
  Poly c = p_of(f5, {3, 0, 0, 0, 1});  // x^4 - 2, irreducible
  auto fc = ddf(c, 5);
  REQUIRE(fc.size() == 1);
  CHECK(fc[0].first == 4);
  // product of parts equals input; degrees add up
  FieldRef f7 = make_field(7, 1);
  Poly m = p_of(f7, {3, 1, 0, 4, 1, 1});
  if (p_squarefree(m)) {
    auto parts = ddf(m, 7);
    Poly prod = p_const(f7, 1);
    int degsum = 0;
    for (auto& [d, part] : parts) {
      prod = p_mul(prod, part);
      CHECK(part.deg() % d == 0);
      degsum += part.deg();
    }
    CHECK(prod == p_monic(m));
    CHECK(degsum == m.deg());
  }
  CHECK_THROWS_AS(ddf(p_of(f5, {0, 0, 1}), 5), Error);  // x^2 not squarefree
}

TEST_CASE("roots_in") {
  FieldRef f5 = make_field(5, 1);
  Poly h = p_of(f5, {1, 0, 1});
  CHECK(roots_in(h, f5) == std::vector<uint64_t>{2, 3});
  FieldRef f3 = make_field(3, 1);
  CHECK(roots_in(p_of(f3, {1, 0, 1}), f3).empty());
  FieldRef f2 = make_field(2, 1);
  FieldRef f8 = make_field(2, 3);
  auto r = roots_in(p_of(f2, {1, 1, 0, 1}), f8);
  CHECK(r.size() == 3);
  for (uint64_t v : r) {
    uint64_t val = f8->add(f8->add(f8->mul(f8->mul(v, v), v), v), 1);
    CHECK(val == 0);
  }
  // a larger field exercising the gcd + split path (order > 65536)
  FieldRef f17_5 = make_field(17, 5);  // order 1419857
  Poly big = p_embed(p_of(make_field(17, 1), {16, 0, 1}), f17_5);  // x^2-1
  auto rr = roots_in(big, f17_5);
  CHECK(rr == std::vector<uint64_t>{1, f17_5->neg(1)});
}

TEST_CASE("rat_interpolate") {
  FieldRef f7 = make_field(7, 1);
  // y = x^2
  std::vector<std::pair<ProjPoint, ProjPoint>> s;
  for (uint64_t x : {1, 2, 3, 4})
    s.push_back({pp_fin(f7, x), pp_fin(f7, f7->mul(x, x))});
  RatFunc R = rat_interpolate(s, 2, 0);
  CHECK(R.num == p_of(f7, {0, 0, 1}));
  CHECK(R.den == p_const(f7, 1));
  // y = 1/x
  s.clear();
  for (uint64_t x : {1, 2, 3})
    s.push_back({pp_fin(f7, x), pp_fin(f7, f7->inv(x))});
  RatFunc R2 = rat_interpolate(s, 0, 1);
  CHECK(R2.num == p_const(f7, 1));
  CHECK(R2.den == p_x(f7));
  CHECK_THROWS_AS(rat_interpolate(s, 3, 3), Error);  // insufficient
}

TEST_CASE("relation h with Q6 = h(Q3), h = x^2-3x") {
  FieldRef f49 = make_field(7, 2);
  RatFunc Q3 = q3(f49);
  // Q6 = -Q3(x) * Q3(1/x)
  RatFunc Q3inv = rf_compose_mobius(Q3, 0, 1, 1, 0);
  RatFunc Q6 = rf_neg(rf_mul(Q3, Q3inv));
  std::vector<std::pair<ProjPoint, ProjPoint>> s;
  std::vector<uint64_t> seen;
  for (uint64_t x = 2; x < 49 && s.size() < 6; ++x) {
    ProjPoint z = eval_proj(Q3, pp_fin(f49, x), f49);
    ProjPoint t = eval_proj(Q6, pp_fin(f49, x), f49);
    if (z.inf || t.inf) continue;
    if (std::find(seen.begin(), seen.end(), z.v) != seen.end()) continue;
    seen.push_back(z.v);
    s.push_back({z, t});
  }
  RatFunc h = rat_interpolate(s, 2, 0);
  CHECK(h.num == p_of(f49, {0, f49->neg(3), 1}));
  CHECK(h.den == p_const(f49, 1));
  // exact composition identity
  CHECK(rf_compose(h, Q3) == Q6);
}
