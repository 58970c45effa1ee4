#include "artinv/ff.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <memory>
#include <mutex>

#include "artinv/detail/vpoly.hpp"

namespace artinv {

using detail::VP;

uint64_t brute_bound() {
  static const uint64_t bound = [] {
    if (const char* s = std::getenv("ARTIN_BRUTE_BOUND")) {
      uint64_t v = std::strtoull(s, nullptr, 10);
      if (v > 0) return v;
    }
    return uint64_t(1000000);
  }();
  return bound;
}

namespace {

uint64_t mulmod_u64(uint64_t a, uint64_t b, uint64_t m) {
  return static_cast<uint64_t>(static_cast<__uint128_t>(a) * b % m);
}

uint64_t powmod_u64(uint64_t a, uint64_t e, uint64_t m) {
  uint64_t r = 1 % m;
  a %= m;
  while (e) {
    if (e & 1) r = mulmod_u64(r, a, m);
    a = mulmod_u64(a, a, m);
    e >>= 1;
  }
  return r;
}

}  // namespace

bool is_prime_u64(uint64_t m) {
  if (m < 2) return false;
  for (uint64_t d : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    if (m % d == 0) return m == d;
  }
  uint64_t d = m - 1;
  int s = 0;
  while ((d & 1) == 0) d >>= 1, ++s;
  for (uint64_t a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    uint64_t x = powmod_u64(a, d, m);
    if (x == 1 || x == m - 1) continue;
    bool witness = true;
    for (int i = 1; i < s; ++i) {
      x = mulmod_u64(x, x, m);
      if (x == m - 1) {
        witness = false;
        break;
      }
    }
    if (witness) return false;
  }
  return true;
}

std::vector<std::pair<uint64_t, int>> factorize_u64(uint64_t m) {
  std::vector<std::pair<uint64_t, int>> out;
  for (uint64_t d = 2; d * d <= m && d <= (1u << 21); d += (d == 2 ? 1 : 2)) {
    if (m % d) continue;
    int e = 0;
    while (m % d == 0) m /= d, ++e;
    out.emplace_back(d, e);
  }
  if (m > 1) {
    if (!is_prime_u64(m)) throw Error("factorize_u64: cofactor too hard");
    out.emplace_back(m, 1);
  }
  return out;
}

uint64_t FieldCtx::mul_generic(uint64_t a, uint64_t b) const {
  if (a == 0 || b == 0) return 0;
  uint64_t da[64], db[64];
  decode(a, da);
  decode(b, db);
  uint64_t acc[128] = {0};
  for (int i = 0; i < n; ++i) {
    if (da[i] == 0) continue;
    for (int j = 0; j < n; ++j) acc[i + j] += da[i] * db[j];
  }
  // fold x^{n+k} down using precomputed reduction rows
  for (int k = 2 * n - 2; k >= n; --k) {
    uint64_t c = acc[k] % p;
    if (c == 0) continue;
    const auto& row = red_rows[k - n];
    for (int i = 0; i < n; ++i) acc[i] += c * row[i];
  }
  uint64_t dr[64];
  for (int i = 0; i < n; ++i) dr[i] = acc[i] % p;
  return encode(dr);
}

uint64_t FieldCtx::add_generic(uint64_t a, uint64_t b) const {
  uint64_t da[64], db[64];
  decode(a, da);
  decode(b, db);
  for (int i = 0; i < n; ++i) {
    da[i] += db[i];
    if (da[i] >= p) da[i] -= p;
  }
  return encode(da);
}

uint64_t FieldCtx::neg_generic(uint64_t a) const {
  uint64_t da[64];
  decode(a, da);
  for (int i = 0; i < n; ++i)
    if (da[i]) da[i] = p - da[i];
  return encode(da);
}

uint64_t FieldCtx::pow(uint64_t a, uint64_t e) const {
  if (a == 0) return e == 0 ? 1 : 0;
  if (tables) {
    uint64_t k = mulmod_u64(log_tab[a], e % (order - 1), order - 1);
    return exp_tab[k];
  }
  uint64_t r = 1;
  while (e) {
    if (e & 1) r = mul(r, a);
    a = mul(a, a);
    e >>= 1;
  }
  return r;
}

uint64_t FieldCtx::frob_p(uint64_t a) const {
  if (n == 1) return a;
  if (tables) return pow(a, p);
  uint64_t da[64];
  decode(a, da);
  uint64_t r = 0;
  for (int i = 0; i < n; ++i)
    if (da[i]) r = add(r, mul(da[i], frob_basis[i]));
  return r;
}

void FieldCtx::decode(uint64_t v, uint64_t* digits) const {
  if (p == 2) {
    for (int i = 0; i < n; ++i) digits[i] = (v >> i) & 1;
    return;
  }
  for (int i = 0; i < n; ++i) {
    digits[i] = v % p;
    v /= p;
  }
}

uint64_t FieldCtx::encode(const uint64_t* digits) const {
  uint64_t v = 0;
  for (int i = n; i-- > 0;) v = v * p + digits[i];
  return v;
}

std::string FieldCtx::name() const {
  if (n == 1) return std::to_string(p);
  return std::to_string(p) + "^" + std::to_string(n);
}

namespace {

std::recursive_mutex g_field_mutex;
std::map<std::pair<uint64_t, int>, std::unique_ptr<FieldCtx>>& field_registry() {
  static std::map<std::pair<uint64_t, int>, std::unique_ptr<FieldCtx>> reg;
  return reg;
}

void build_tables(FieldCtx& f) {
  uint64_t q = f.order;
  f.exp_tab.resize(2 * (q - 1));
  f.log_tab.assign(q, 0);
  uint64_t cur = 1;
  for (uint64_t k = 0; k < q - 1; ++k) {
    f.exp_tab[k] = static_cast<uint32_t>(cur);
    f.log_tab[cur] = static_cast<uint32_t>(k);
    cur = f.mul(cur, f.gen);
  }
  if (cur != 1) throw CheckFail("generator order mismatch");
  for (uint64_t k = 0; k < q - 1; ++k) f.exp_tab[q - 1 + k] = f.exp_tab[k];
  f.zech.assign(q - 1, FieldCtx::kZechZero);
  for (uint64_t k = 0; k < q - 1; ++k) {
    uint64_t s = f.add(1, f.exp_tab[k]);
    if (s != 0) f.zech[k] = f.log_tab[s];
  }
  f.neg_one_log = (f.p == 2) ? 0 : (q - 1) / 2;
  f.tables = true;
}

std::unique_ptr<FieldCtx> construct_field(uint64_t p, int n) {
  if (!is_prime_u64(p)) throw Error("characteristic is not prime");
  if (n < 1 || n > 63) throw Error("extension degree out of range");
  __uint128_t ord = 1;
  for (int i = 0; i < n; ++i) {
    ord *= p;
    if (ord > kOrderBound) throw Error("field order exceeds bound 2^40");
  }

  auto f = std::make_unique<FieldCtx>();
  f->p = p;
  f->n = n;
  f->order = static_cast<uint64_t>(ord);
  f->ppow.resize(n + 1);
  f->ppow[0] = 1;
  for (int i = 1; i <= n; ++i) f->ppow[i] = f->ppow[i - 1] * p;

  if (n == 1) {
    f->modulus = {0, 1};  // x, the least monic linear
  } else {
    FieldRef fp = make_field(p, 1);
    // least monic irreducible, constant term varying fastest
    VP cand(static_cast<size_t>(n) + 1, 0);
    cand[n] = 1;
    bool found = false;
    for (uint64_t k = 0; k < f->order; ++k) {
      uint64_t v = k;
      for (int i = 0; i < n; ++i) {
        cand[i] = v % p;
        v /= p;
      }
      if (cand[0] == 0) continue;  // divisible by x
      if (detail::vp_is_irreducible(fp, cand)) {
        found = true;
        break;
      }
    }
    if (!found) throw CheckFail("no irreducible modulus found");
    f->modulus = cand;
  }

  // reduction rows: x^{n+k} mod modulus
  if (n > 1) {
    VP xn(n, 0);  // x^n = -(m0 + ... + m_{n-1} x^{n-1})
    FieldRef fp = make_field(p, 1);
    for (int i = 0; i < n; ++i) xn[i] = fp->neg(f->modulus[i]);
    f->red_rows.push_back(xn);
    for (int k = 1; k < n - 1; ++k) {
      const VP& prev = f->red_rows.back();
      VP cur(n, 0);
      // multiply by x, fold the overflowed top digit
      uint64_t top = prev[n - 1];
      for (int i = n - 1; i >= 1; --i) cur[i] = prev[i - 1];
      cur[0] = 0;
      if (top) {
        for (int i = 0; i < n; ++i)
          cur[i] = (cur[i] + top * f->red_rows[0][i]) % p;
      }
      f->red_rows.push_back(cur);
    }
  }

  // Frobenius on the monomial basis
  if (n > 1) {
    f->frob_basis.resize(n);
    for (int i = 0; i < n; ++i) f->frob_basis[i] = f->pow(f->ppow[i], p);
  }

  f->unit_factors = factorize_u64(f->order - 1);

  // least primitive element
  for (uint64_t g = 1; g < f->order; ++g) {
    bool ok = g != 0;
    for (auto [r, e] : f->unit_factors) {
      (void)e;
      if (f->pow(g, (f->order - 1) / r) == 1) {
        ok = false;
        break;
      }
    }
    if (ok) {
      f->gen = g;
      break;
    }
  }
  if (f->gen == 0 && f->order > 2) throw CheckFail("no primitive element");
  if (f->order == 2) f->gen = 1;

  if (f->order <= kTableOrderLimit) build_tables(*f);
  return f;
}

}  // namespace

FieldRef make_field(uint64_t p, int n) {
  std::lock_guard<std::recursive_mutex> lock(g_field_mutex);
  auto key = std::make_pair(p, n);
  auto& reg = field_registry();
  auto it = reg.find(key);
  if (it == reg.end()) it = reg.emplace(key, construct_field(p, n)).first;
  return it->second.get();
}

FieldRef parse_field(const std::string& spec) {
  auto caret = spec.find('^');
  if (caret != std::string::npos) {
    uint64_t p = std::strtoull(spec.substr(0, caret).c_str(), nullptr, 10);
    int n = static_cast<int>(
        std::strtoull(spec.substr(caret + 1).c_str(), nullptr, 10));
    return make_field(p, n);
  }
  uint64_t q = std::strtoull(spec.c_str(), nullptr, 10);
  if (q < 2) throw Error("bad field spec: " + spec);
  auto fac = factorize_u64(q);
  if (fac.size() != 1) throw Error("not a prime power: " + spec);
  return make_field(fac[0].first, fac[0].second);
}

// ---------------------------------------------------------------------------
// embeddings

namespace {

std::recursive_mutex g_embed_mutex;
std::map<std::pair<FieldRef, FieldRef>, std::unique_ptr<EmbeddingMap>>&
embed_registry() {
  static std::map<std::pair<FieldRef, FieldRef>,
                  std::unique_ptr<EmbeddingMap>>
      reg;
  return reg;
}

}  // namespace

const EmbeddingMap& embed(FieldRef src, FieldRef dst) {
  if (src->p != dst->p) throw Error("embedding: different characteristic");
  if (dst->n % src->n != 0) throw Error("embedding: degree does not divide");
  std::lock_guard<std::recursive_mutex> lock(g_embed_mutex);
  auto key = std::make_pair(src, dst);
  auto& reg = embed_registry();
  auto it = reg.find(key);
  if (it != reg.end()) return *it->second;

  auto em = std::make_unique<EmbeddingMap>();
  em->src = src;
  em->dst = dst;
  // src->modulus has prime-field coefficients, which carry over by value
  VP mod(src->modulus.begin(), src->modulus.end());
  auto roots = detail::vp_roots(dst, mod);
  if (roots.empty()) throw CheckFail("modulus has no root in extension");
  em->image_of_generator = roots.front();
  em->basis_image.resize(src->n);
  uint64_t cur = 1;
  for (int i = 0; i < src->n; ++i) {
    em->basis_image[i] = cur;
    cur = dst->mul(cur, em->image_of_generator);
  }

  // preimage solver: columns are dst-digit vectors of basis images,
  // eliminate [M | I] over F_p
  int rows = dst->n, cols = src->n;
  uint64_t p = dst->p;
  std::vector<std::vector<uint64_t>> aug(rows,
                                         std::vector<uint64_t>(cols + rows, 0));
  for (int j = 0; j < cols; ++j) {
    uint64_t dg[64];
    dst->decode(em->basis_image[j], dg);
    for (int i = 0; i < rows; ++i) aug[i][j] = dg[i];
  }
  for (int i = 0; i < rows; ++i) aug[i][cols + i] = 1;
  FieldRef fp = make_field(p, 1);
  int r = 0;
  em->pivot_cols.assign(cols, -1);
  for (int c = 0; c < cols && r < rows; ++c) {
    int piv = -1;
    for (int i = r; i < rows; ++i)
      if (aug[i][c]) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    std::swap(aug[piv], aug[r]);
    uint64_t s = fp->inv(aug[r][c]);
    for (auto& x : aug[r]) x = fp->mul(x, s);
    for (int i = 0; i < rows; ++i) {
      if (i == r || aug[i][c] == 0) continue;
      uint64_t k = aug[i][c];
      for (int jj = 0; jj < cols + rows; ++jj)
        aug[i][jj] = fp->sub(aug[i][jj], fp->mul(k, aug[r][jj]));
    }
    em->pivot_cols[c] = r;
    ++r;
  }
  if (r != cols) throw CheckFail("embedding basis not independent");
  em->solve_rows = std::move(aug);

  it = reg.emplace(key, std::move(em)).first;
  return *it->second;
}

uint64_t EmbeddingMap::apply(uint64_t v) const {
  uint64_t dg[64];
  src->decode(v, dg);
  uint64_t r = 0;
  for (int i = 0; i < src->n; ++i)
    if (dg[i]) r = dst->add(r, dst->mul(dg[i], basis_image[i]));
  return r;
}

std::optional<uint64_t> EmbeddingMap::preimage(uint64_t w) const {
  FieldRef fp = make_field(dst->p, 1);
  int rows = dst->n, cols = src->n;
  uint64_t dg[64];
  dst->decode(w, dg);
  // y = T * w where solve_rows = [rref(M) | T]
  std::vector<uint64_t> y(rows, 0);
  for (int i = 0; i < rows; ++i) {
    uint64_t acc = 0;
    for (int j = 0; j < rows; ++j)
      acc = fp->add(acc, fp->mul(solve_rows[i][cols + j], dg[j]));
    y[i] = acc;
  }
  std::vector<uint64_t> c(cols, 0);
  for (int j = 0; j < cols; ++j) c[j] = y[pivot_cols[j]];
  // consistency: rows beyond the pivots must vanish
  for (int i = cols; i < rows; ++i)
    if (y[i] != 0) return std::nullopt;
  uint64_t v = src->encode(c.data());
  if (apply(v) != w) return std::nullopt;
  return v;
}

uint64_t frobenius(FieldRef f, uint64_t a, uint64_t base_order, int e) {
  // check base_order is a power of the characteristic
  uint64_t q = base_order;
  int steps = 0;
  while (q > 1 && q % f->p == 0) q /= f->p, ++steps;
  if (q != 1 || steps == 0)
    throw Error("frobenius: base order is not a power of the characteristic");
  uint64_t r = a;
  for (int i = 0; i < e * steps; ++i) r = f->frob_p(r);
  return r;
}

uint64_t trace_to(FieldRef f, uint64_t a, FieldRef sub) {
  const EmbeddingMap& em = embed(sub, f);
  int k = f->n / sub->n;
  uint64_t acc = 0, cur = a;
  for (int i = 0; i < k; ++i) {
    acc = f->add(acc, cur);
    cur = frobenius(f, cur, sub->order, 1);
  }
  auto pre = em.preimage(acc);
  if (!pre) throw CheckFail("trace did not land in subfield");
  return *pre;
}

uint64_t norm_to(FieldRef f, uint64_t a, FieldRef sub) {
  const EmbeddingMap& em = embed(sub, f);
  if (a == 0) return 0;
  uint64_t e = (f->order - 1) / (sub->order - 1);
  uint64_t r = f->pow(a, e);
  auto pre = em.preimage(r);
  if (!pre) throw CheckFail("norm did not land in subfield");
  return *pre;
}

int quadratic_character(FieldRef f, uint64_t a) {
  if (f->p == 2) throw Error("quadratic character needs odd characteristic");
  if (a == 0) return 0;
  uint64_t r = f->pow(a, (f->order - 1) / 2);
  if (r == 1) return 1;
  if (r == f->neg(1)) return -1;
  throw CheckFail("Euler criterion returned non-unit");
}

uint64_t mult_order(FieldRef f, uint64_t a) {
  if (a == 0) throw Error("mult_order of zero");
  uint64_t t = f->order - 1;
  for (auto [r, e] : f->unit_factors) {
    for (int i = 0; i < e && t % r == 0 && f->pow(a, t / r) == 1; ++i) t /= r;
  }
  return t;
}

std::vector<uint64_t> nth_roots_of_unity(FieldRef f, uint64_t n) {
  if (n == 0 || n % f->p == 0) throw Error("n must be coprime to p");
  uint64_t d = std::__gcd(n, f->order - 1);
  std::vector<uint64_t> out;
  uint64_t step = (f->order - 1) / d;
  for (uint64_t j = 0; j < d; ++j) out.push_back(f->pow(f->gen, step * j));
  std::sort(out.begin(), out.end());
  return out;
}

std::pair<FieldRef, uint64_t> primitive_cube_root(FieldRef f) {
  if (f->p == 3) throw Error("no primitive cube root in characteristic 3");
  FieldRef K = (f->order - 1) % 3 == 0 ? f : make_field(f->p, 2 * f->n);
  auto mu = nth_roots_of_unity(K, 3);
  for (uint64_t w : mu)
    if (w != 1) return {K, w};
  throw CheckFail("cube roots of unity missing");
}

std::optional<uint64_t> sqrt_elem(FieldRef f, uint64_t a) {
  if (a == 0) return 0;
  if (f->p == 2) return f->pow(a, f->order / 2);
  if (quadratic_character(f, a) < 0) return std::nullopt;
  // Tonelli-Shanks with the least nonsquare as auxiliary
  uint64_t q1 = f->order - 1;
  int s = 0;
  uint64_t m = q1;
  while ((m & 1) == 0) m >>= 1, ++s;
  uint64_t z = f->pow(least_nonsquare(f), m);
  uint64_t x = f->pow(a, (m + 1) / 2);
  uint64_t t = f->pow(a, m);
  int r = s;
  while (t != 1) {
    uint64_t tt = t;
    int i = 0;
    while (tt != 1) {
      tt = f->mul(tt, tt);
      ++i;
    }
    uint64_t b = z;
    for (int j = 0; j < r - i - 1; ++j) b = f->mul(b, b);
    x = f->mul(x, b);
    z = f->mul(b, b);
    t = f->mul(t, z);
    r = i;
  }
  return std::min(x, f->neg(x));
}

std::optional<uint64_t> dlog_small(FieldRef f, uint64_t base, uint64_t target) {
  uint64_t ord = mult_order(f, base);
  if (ord > brute_bound()) throw Error("dlog subgroup exceeds brute bound");
  uint64_t cur = 1;
  for (uint64_t k = 0; k < ord; ++k) {
    if (cur == target) return k;
    cur = f->mul(cur, base);
  }
  return std::nullopt;
}

uint64_t least_nonsquare(FieldRef f) {
  if (f->p == 2) throw Error("no nonsquares in even characteristic");
  for (uint64_t v = 1; v < f->order; ++v)
    if (quadratic_character(f, v) < 0) return v;
  throw CheckFail("no nonsquare found");
}

std::string elem_to_string(FieldRef f, uint64_t v) {
  uint64_t dg[64];
  f->decode(v, dg);
  std::string s = "[";
  for (int i = 0; i < f->n; ++i) {
    if (i) s += ",";
    s += std::to_string(dg[i]);
  }
  return s + "]";
}

uint64_t elem_from_string(FieldRef f, const std::string& s) {
  std::string t = s;
  uint64_t v = 0;
  if (!t.empty() && t.front() == '[') {
    if (t.back() != ']') throw Error("bad element encoding: " + s);
    t = t.substr(1, t.size() - 2);
    uint64_t dg[64] = {0};
    int i = 0;
    size_t pos = 0;
    while (pos < t.size()) {
      size_t comma = t.find(',', pos);
      std::string part = t.substr(pos, comma == std::string::npos
                                           ? std::string::npos
                                           : comma - pos);
      if (i >= f->n) throw Error("too many coefficients: " + s);
      uint64_t d = std::strtoull(part.c_str(), nullptr, 10);
      if (d >= f->p) throw Error("coefficient out of range: " + s);
      dg[i++] = d;
      if (comma == std::string::npos) break;
      pos = comma + 1;
    }
    v = f->encode(dg);
  } else {
    v = std::strtoull(t.c_str(), nullptr, 10);
  }
  if (v >= f->order) throw Error("element out of range: " + s);
  return v;
}

}  // namespace artinv
