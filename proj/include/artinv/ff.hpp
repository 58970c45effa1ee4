#ifndef ARTINV_FF_HPP
#define ARTINV_FF_HPP

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

/*
 * Exact arithmetic in finite fields F_{p^n} at desk scale.
 *
 * A field is an immutable FieldCtx owned by a process-wide registry;
 * make_field(p, n) always returns the same canonical context, built on the
 * lexicographically least monic irreducible modulus of degree n over F_p
 * (candidates ordered by the integer value c0 + c1*p + ... of their
 * coefficient vector, so the constant term varies fastest).
 *
 * Elements are plain uint64_t values encoding the coefficient vector
 * (c0,...,c_{n-1}) in little-endian base p: v = sum c_i p^i.  The same value
 * encoding induces the canonical total order on elements used for every
 * deterministic tie-break in this library (least root, least lambda, ...).
 *
 * Fields of order up to kTableOrderLimit get discrete-log/Zech tables;
 * larger fields fall back to coefficient arithmetic.  Everything is pure
 * and safe to share across threads once constructed.
 */

namespace artinv {

// Invalid input (bad parameters, mixed fields, out-of-bounds requests).
struct Error : std::runtime_error {
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// A verified mathematical statement failed; indicates a bug or a broken
// theorem, never bad user input.
struct CheckFail : std::logic_error {
  explicit CheckFail(const std::string& msg) : std::logic_error(msg) {}
};

struct FieldCtx;
using FieldRef = const FieldCtx*;

inline constexpr uint64_t kOrderBound = uint64_t(1) << 40;
inline constexpr uint64_t kTableOrderLimit = uint64_t(1) << 20;

// Brute-force caps (dlog, root scans).  ARTIN_BRUTE_BOUND overrides.
uint64_t brute_bound();

struct FieldCtx {
  uint64_t p = 0;                 // characteristic, prime
  int n = 0;                      // extension degree over F_p
  uint64_t order = 0;             // p^n
  std::vector<uint64_t> modulus;  // n+1 coefficients, little-endian, monic

  std::vector<uint64_t> ppow;     // p^0 .. p^n
  uint64_t gen = 0;               // least primitive element of F_q^x
  std::vector<std::pair<uint64_t, int>> unit_factors;  // factorization of q-1

  // table-backed arithmetic (order <= kTableOrderLimit)
  bool tables = false;
  std::vector<uint32_t> log_tab;  // index: value, log_tab[0] unused
  std::vector<uint32_t> exp_tab;  // doubled: k in [0, 2(q-1))
  std::vector<uint32_t> zech;     // zech[k] = log(1 + g^k), kZechZero if zero

  // generic arithmetic caches
  std::vector<std::vector<uint64_t>> red_rows;  // x^{n+k} mod modulus, k < n-1
  std::vector<uint64_t> frob_basis;             // (x^i)^p for i < n

  static constexpr uint32_t kZechZero = 0xffffffffu;

  uint64_t add(uint64_t a, uint64_t b) const;
  uint64_t sub(uint64_t a, uint64_t b) const;
  uint64_t neg(uint64_t a) const;
  uint64_t mul(uint64_t a, uint64_t b) const;
  uint64_t inv(uint64_t a) const;
  uint64_t div(uint64_t a, uint64_t b) const { return mul(a, inv(b)); }
  uint64_t pow(uint64_t a, uint64_t e) const;
  uint64_t frob_p(uint64_t a) const;  // a^p
  uint64_t from_int(uint64_t k) const { return k % p; }  // prime subfield
  uint64_t one() const { return 1; }

  void decode(uint64_t v, uint64_t* digits) const;  // n digits
  uint64_t encode(const uint64_t* digits) const;

  std::string name() const;  // "p^n" or "p" when n == 1

  uint64_t neg_one_log = 0;  // log(-1) = (q-1)/2, table fields, odd p

 private:
  uint64_t mul_generic(uint64_t a, uint64_t b) const;
  uint64_t add_generic(uint64_t a, uint64_t b) const;
  uint64_t neg_generic(uint64_t a) const;
  friend FieldRef make_field(uint64_t p, int n);
};

inline uint64_t FieldCtx::mul(uint64_t a, uint64_t b) const {
  if (tables) {
    if (a == 0 || b == 0) return 0;
    return exp_tab[log_tab[a] + log_tab[b]];
  }
  if (n == 1) return static_cast<uint64_t>(static_cast<__uint128_t>(a) * b % p);
  return mul_generic(a, b);
}

inline uint64_t FieldCtx::add(uint64_t a, uint64_t b) const {
  if (p == 2) return a ^ b;
  if (tables) {
    if (a == 0) return b;
    if (b == 0) return a;
    uint64_t la = log_tab[a], lb = log_tab[b];
    uint64_t d = lb >= la ? lb - la : lb + (order - 1) - la;
    uint32_t z = zech[d];
    if (z == kZechZero) return 0;
    return exp_tab[la + z];
  }
  if (n == 1) {
    uint64_t s = a + b;
    return s >= p ? s - p : s;
  }
  return add_generic(a, b);
}

inline uint64_t FieldCtx::neg(uint64_t a) const {
  if (p == 2 || a == 0) return a;
  if (tables) return exp_tab[log_tab[a] + neg_one_log];
  if (n == 1) return p - a;
  return neg_generic(a);
}

inline uint64_t FieldCtx::sub(uint64_t a, uint64_t b) const {
  if (p == 2) return a ^ b;
  return add(a, neg(b));
}

inline uint64_t FieldCtx::inv(uint64_t a) const {
  if (a == 0) throw Error("division by zero in " + name());
  if (tables) return exp_tab[order - 1 - log_tab[a]];
  return pow(a, order - 2);
}

FieldRef make_field(uint64_t p, int n);
FieldRef parse_field(const std::string& spec);  // "7", "3^2", "p^n"

// ring embedding F_{p^m} -> F_{p^n}, m | n
struct EmbeddingMap {
  FieldRef src = nullptr;
  FieldRef dst = nullptr;
  uint64_t image_of_generator = 0;     // least root of src->modulus in dst
  std::vector<uint64_t> basis_image;   // images of x^i, i < src->n

  uint64_t apply(uint64_t v) const;
  // preimage under the embedding; empty when w is outside the subfield
  std::optional<uint64_t> preimage(uint64_t w) const;
  bool in_image(uint64_t w) const { return preimage(w).has_value(); }

 private:
  // solver rows for preimage: echelonized (dst-digit -> src coefficient) map
  std::vector<std::vector<uint64_t>> solve_rows;
  std::vector<int> pivot_cols;
  friend const EmbeddingMap& embed(FieldRef src, FieldRef dst);
};

// Canonical embedding, cached per (src, dst) pair.
const EmbeddingMap& embed(FieldRef src, FieldRef dst);

// a^{q^e} where q = base_order is a power of the characteristic of a's field
uint64_t frobenius(FieldRef f, uint64_t a, uint64_t base_order, int e);

// relative trace / norm onto a subfield; results are returned as elements
// of sub (asserted to land there)
uint64_t trace_to(FieldRef f, uint64_t a, FieldRef sub);
uint64_t norm_to(FieldRef f, uint64_t a, FieldRef sub);

// Euler criterion; +1 square, -1 nonsquare, 0 at zero.  Odd q only.
int quadratic_character(FieldRef f, uint64_t a);

uint64_t mult_order(FieldRef f, uint64_t a);
std::vector<uint64_t> nth_roots_of_unity(FieldRef f, uint64_t n);
// least primitive cube root; lives in F_{q^2} when 3 | q+1.  .first is the
// field it lives in.
std::pair<FieldRef, uint64_t> primitive_cube_root(FieldRef f);
// canonically least square root, if any
std::optional<uint64_t> sqrt_elem(FieldRef f, uint64_t a);
// brute discrete log: least k >= 0 with base^k = target, subgroup order
// capped by brute_bound()
std::optional<uint64_t> dlog_small(FieldRef f, uint64_t base, uint64_t target);

// canonically least nonsquare of F_q^x (odd q)
uint64_t least_nonsquare(FieldRef f);

// element text encoding "[c0,c1,...,c_{n-1}]"
std::string elem_to_string(FieldRef f, uint64_t v);
uint64_t elem_from_string(FieldRef f, const std::string& s);

bool is_prime_u64(uint64_t m);
std::vector<std::pair<uint64_t, int>> factorize_u64(uint64_t m);

}  // namespace artinv

#endif
