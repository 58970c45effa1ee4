#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "artinv/ff.hpp"

using namespace artinv;

TEST_CASE("canonical moduli") {
  CHECK(make_field(3, 1)->modulus == std::vector<uint64_t>{0, 1});
  CHECK(make_field(2, 2)->modulus == std::vector<uint64_t>{1, 1, 1});
  // x^2 and x^2+1 are reducible mod 5, x^2+2 is not
  CHECK(make_field(5, 2)->modulus == std::vector<uint64_t>{2, 0, 1});
  CHECK(make_field(7, 1) == make_field(7, 1));  // registry canonical
  CHECK_THROWS_AS(make_field(6, 1), Error);
  CHECK_THROWS_AS(make_field(2, 63), Error);
}

TEST_CASE("arithmetic basics") {
  FieldRef f9 = make_field(3, 2);
  CHECK(f9->order == 9);
  for (uint64_t a = 0; a < 9; ++a) {
    CHECK(f9->add(a, 0) == a);
    CHECK(f9->mul(a, 1) == a);
    if (a) CHECK(f9->mul(a, f9->inv(a)) == 1);
    CHECK(f9->add(a, f9->neg(a)) == 0);
  }
  // commutativity/associativity spot field: exhaustive over F_8
  FieldRef f8 = make_field(2, 3);
  for (uint64_t a = 0; a < 8; ++a)
    for (uint64_t b = 0; b < 8; ++b) {
      CHECK(f8->add(a, b) == f8->add(b, a));
      CHECK(f8->mul(a, b) == f8->mul(b, a));
      for (uint64_t c = 0; c < 8; ++c) {
        CHECK(f8->mul(a, f8->add(b, c)) ==
              f8->add(f8->mul(a, b), f8->mul(a, c)));
      }
    }
}

TEST_CASE("embeddings") {
  // prime field embeds by value
  FieldRef f3 = make_field(3, 1), f9 = make_field(3, 2);
  const auto& e39 = embed(f3, f9);
  for (uint64_t k = 0; k < 3; ++k) CHECK(e39.apply(k) == k);
  // identity embedding
  const auto& e99 = embed(f9, f9);
  for (uint64_t k = 0; k < 9; ++k) CHECK(e99.apply(k) == k);
  // F_4 into F_16: image of generator is the least root of x^2+x+1
  FieldRef f4 = make_field(2, 2), f16 = make_field(2, 4);
  const auto& e = embed(f4, f16);
  uint64_t r = e.image_of_generator;
  // r^2 + r + 1 = 0 in F_16
  CHECK(f16->add(f16->add(f16->mul(r, r), r), 1) == 0);
  for (uint64_t v = 0; v < r; ++v)
    CHECK(f16->add(f16->add(f16->mul(v, v), v), 1) != 0);
  // homomorphism, exhaustive
  for (uint64_t a = 0; a < 4; ++a)
    for (uint64_t b = 0; b < 4; ++b) {
      CHECK(e.apply(f4->add(a, b)) == f16->add(e.apply(a), e.apply(b)));
      CHECK(e.apply(f4->mul(a, b)) == f16->mul(e.apply(a), e.apply(b)));
    }
  // preimage round trip and rejection
  int inside = 0;
  for (uint64_t w = 0; w < 16; ++w) {
    auto pre = e.preimage(w);
    if (pre) {
      ++inside;
      CHECK(e.apply(*pre) == w);
    }
  }
  CHECK(inside == 4);
  CHECK_THROWS_AS(embed(make_field(2, 2), make_field(2, 3)), Error);
  CHECK_THROWS_AS(embed(make_field(2, 1), make_field(3, 1)), Error);
}

TEST_CASE("frobenius") {
  FieldRef f9 = make_field(3, 2);
  for (uint64_t a = 0; a < 3; ++a) CHECK(frobenius(f9, a, 3, 1) == a);
  uint64_t g = f9->gen;
  CHECK(frobenius(f9, g, 3, 2) == g);
  FieldRef f25 = make_field(5, 2);
  uint64_t lam = 5;  // the generator x, outside F_5
  CHECK(frobenius(f25, lam, 5, 1) != lam);
  CHECK(frobenius(f25, lam, 5, 1) == f25->pow(lam, 5));
  CHECK_THROWS_AS(frobenius(f9, 1, 2, 1), Error);
  // Frobenius fixes exactly the subfield
  for (auto [p, n, t] : {std::tuple<int, int, int>{3, 1, 2},
                         {2, 2, 2},
                         {5, 1, 2},
                         {3, 2, 2},
                         {2, 1, 3}}) {
    FieldRef big = make_field(p, n * t);
    uint64_t q = 1;
    for (int i = 0; i < n; ++i) q *= p;
    int fixed = 0;
    for (uint64_t v = 0; v < big->order; ++v)
      if (frobenius(big, v, q, 1) == v) ++fixed;
    CHECK(fixed == static_cast<int>(q));
  }
}

TEST_CASE("trace and norm") {
  FieldRef f3 = make_field(3, 1);
  CHECK(trace_to(f3, 2, f3) == 2);
  FieldRef f9 = make_field(3, 2);
  CHECK(norm_to(f9, f9->gen, f3) == 2);  // generator of F_3^x
  FieldRef f2 = make_field(2, 1), f4 = make_field(2, 2);
  uint64_t w = 2;  // root of x^2+x+1
  CHECK(trace_to(f4, w, f2) == 1);
  // landing in the subfield, exhaustively
  FieldRef f16 = make_field(2, 4);
  const auto& e = embed(f4, f16);
  for (uint64_t v = 0; v < 16; ++v) {
    uint64_t t = trace_to(f16, v, f4);
    uint64_t nm = norm_to(f16, v, f4);
    CHECK(e.in_image(e.apply(t)));
    CHECK(e.apply(f4->add(t, 0)) ==
          f16->add(e.apply(t), 0));  // value is an F_4 element
    (void)nm;
  }
  // additivity / multiplicativity
  for (uint64_t a = 0; a < 16; ++a)
    for (uint64_t b = 0; b < 16; ++b) {
      CHECK(trace_to(f16, f16->add(a, b), f4) ==
            f4->add(trace_to(f16, a, f4), trace_to(f16, b, f4)));
      CHECK(norm_to(f16, f16->mul(a, b), f4) ==
            f4->mul(norm_to(f16, a, f4), norm_to(f16, b, f4)));
    }
}

TEST_CASE("quadratic character") {
  FieldRef f7 = make_field(7, 1);
  CHECK(quadratic_character(f7, 4) == 1);
  CHECK(quadratic_character(f7, 0) == 0);
  CHECK(quadratic_character(f7, 3) == -1);
  CHECK_THROWS_AS(quadratic_character(make_field(2, 2), 1), Error);
  // multiplicativity for q <= 49
  for (auto [p, n] : {std::pair<int, int>{3, 1}, {7, 1}, {5, 2}, {7, 2}, {3, 3}}) {
    FieldRef f = make_field(p, n);
    for (uint64_t a = 1; a < f->order; ++a)
      for (uint64_t b = 1; b < f->order; ++b)
        CHECK(quadratic_character(f, f->mul(a, b)) ==
              quadratic_character(f, a) * quadratic_character(f, b));
  }
}

TEST_CASE("orders, roots of unity, sqrt, dlog") {
  FieldRef f5 = make_field(5, 1);
  CHECK(mult_order(f5, 2) == 4);
  FieldRef f7 = make_field(7, 1);
  CHECK(sqrt_elem(f7, 2) == 3);
  CHECK(!sqrt_elem(f7, 3).has_value());
  CHECK(nth_roots_of_unity(f7, 3) == std::vector<uint64_t>{1, 2, 4});
  CHECK_THROWS_AS(nth_roots_of_unity(f7, 7), Error);
  auto [K, w] = primitive_cube_root(f7);
  CHECK(K == f7);
  CHECK(w == 2);
  auto [K5, w5] = primitive_cube_root(f5);
  CHECK(K5 == make_field(5, 2));
  CHECK(K5->pow(w5, 3) == 1);
  CHECK(w5 != 1);
  CHECK(dlog_small(f5, 2, 3) == 3);  // 2^3 = 8 = 3
  CHECK(!dlog_small(f5, 4, 2).has_value());
  // sqrt over every square of F_81
  FieldRef f81 = make_field(3, 4);
  for (uint64_t a = 0; a < 81; ++a) {
    auto r = sqrt_elem(f81, a);
    if (r) CHECK(f81->mul(*r, *r) == a);
    CHECK(r.has_value() == (quadratic_character(f81, a) >= 0 || a == 0));
  }
  // char 2: squaring is a bijection
  FieldRef f16 = make_field(2, 4);
  for (uint64_t a = 0; a < 16; ++a) {
    auto r = sqrt_elem(f16, a);
    REQUIRE(r.has_value());
    CHECK(f16->mul(*r, *r) == a);
  }
}

TEST_CASE("larger characteristics") {
  // moderate prime with a table-backed extension
  FieldRef f = make_field(101, 2);
  CHECK(f->order == 10201);
  uint64_t g = f->gen;
  CHECK(mult_order(f, g) == 10200);
  for (uint64_t k = 0; k < 40; ++k) {
    uint64_t a = (k * 9973 + 7) % f->order;
    uint64_t b = (k * 131 + 3) % f->order;
    if (a && b) CHECK(f->mul(f->div(a, b), b) == a);
    CHECK(f->sub(f->add(a, b), b) == a);
    CHECK(frobenius(f, f->mul(a, b), 101, 1) ==
          f->mul(frobenius(f, a, 101, 1), frobenius(f, b, 101, 1)));
  }
  // a prime too large for tables exercises the u128 path
  FieldRef big = make_field(2147483647, 1);  // 2^31 - 1
  CHECK(!big->tables);
  uint64_t x = 1234567891, y = 987654323;
  CHECK(big->mul(x, big->inv(x)) == 1);
  CHECK(big->mul(big->add(x, y), x) ==
        big->add(big->mul(x, x), big->mul(y, x)));
  CHECK(quadratic_character(big, big->mul(x, x)) == 1);
  auto r = sqrt_elem(big, big->mul(y, y));
  REQUIRE(r.has_value());
  CHECK(big->mul(*r, *r) == big->mul(y, y));
  CHECK_THROWS_AS(make_field(2147483647, 2), Error);  // above 2^40
}

TEST_CASE("element encoding") {
  FieldRef f9 = make_field(3, 2);
  CHECK(elem_to_string(f9, 5) == "[2,1]");
  CHECK(elem_from_string(f9, "[2,1]") == 5);
  CHECK(elem_from_string(f9, "5") == 5);
  CHECK_THROWS_AS(elem_from_string(f9, "[3,0]"), Error);
  CHECK_THROWS_AS(elem_from_string(f9, "9"), Error);
  CHECK(parse_field("3^2") == f9);
  CHECK(parse_field("9") == f9);
  CHECK_THROWS_AS(parse_field("12"), Error);
}
