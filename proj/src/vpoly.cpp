#include "artinv/detail/vpoly.hpp"

#include <algorithm>

namespace artinv::detail {

void vp_trim(VP& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

VP vp_add(FieldRef f, const VP& a, const VP& b) {
  VP r(std::max(a.size(), b.size()), 0);
  for (size_t i = 0; i < r.size(); ++i) {
    uint64_t x = i < a.size() ? a[i] : 0;
    uint64_t y = i < b.size() ? b[i] : 0;
    r[i] = f->add(x, y);
  }
  vp_trim(r);
  return r;
}

VP vp_sub(FieldRef f, const VP& a, const VP& b) {
  VP r(std::max(a.size(), b.size()), 0);
  for (size_t i = 0; i < r.size(); ++i) {
    uint64_t x = i < a.size() ? a[i] : 0;
    uint64_t y = i < b.size() ? b[i] : 0;
    r[i] = f->sub(x, y);
  }
  vp_trim(r);
  return r;
}

VP vp_scale(FieldRef f, const VP& a, uint64_t k) {
  if (k == 0) return {};
  VP r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = f->mul(a[i], k);
  return r;
}

VP vp_mul(FieldRef f, const VP& a, const VP& b) {
  if (a.empty() || b.empty()) return {};
  VP r(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < b.size(); ++j) {
      if (b[j] == 0) continue;
      r[i + j] = f->add(r[i + j], f->mul(a[i], b[j]));
    }
  }
  vp_trim(r);
  return r;
}

VP vp_monic(FieldRef f, VP a) {
  vp_trim(a);
  if (a.empty() || a.back() == 1) return a;
  uint64_t s = f->inv(a.back());
  for (auto& c : a) c = f->mul(c, s);
  return a;
}

void vp_divrem(FieldRef f, VP a, const VP& b, VP& q, VP& r) {
  if (b.empty()) throw Error("polynomial division by zero");
  int db = vp_deg(b);
  uint64_t lb = f->inv(b.back());
  q.assign(a.size() > b.size() - 1 ? a.size() - b.size() + 1 : 0, 0);
  while (vp_deg(a) >= db) {
    int k = vp_deg(a) - db;
    uint64_t c = f->mul(a.back(), lb);
    q[k] = c;
    for (int i = 0; i <= db; ++i)
      a[k + i] = f->sub(a[k + i], f->mul(c, b[i]));
    vp_trim(a);
  }
  vp_trim(q);
  r = std::move(a);
}

VP vp_rem(FieldRef f, const VP& a, const VP& b) {
  VP q, r;
  vp_divrem(f, a, b, q, r);
  return r;
}

VP vp_gcd_monic(FieldRef f, VP a, VP b) {
  vp_trim(a);
  vp_trim(b);
  while (!b.empty()) {
    VP r = vp_rem(f, a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return vp_monic(f, std::move(a));
}

VP vp_mulmod(FieldRef f, const VP& a, const VP& b, const VP& m) {
  return vp_rem(f, vp_mul(f, a, b), m);
}

VP vp_powmod(FieldRef f, VP base, uint64_t e, const VP& m) {
  base = vp_rem(f, base, m);
  VP r{1};
  if (vp_deg(m) == 0) return {};
  while (e) {
    if (e & 1) r = vp_mulmod(f, r, base, m);
    e >>= 1;
    if (e) base = vp_mulmod(f, base, base, m);
  }
  return r;
}

uint64_t vp_eval(FieldRef f, const VP& a, uint64_t x) {
  uint64_t r = 0;
  for (size_t i = a.size(); i-- > 0;) r = f->add(f->mul(r, x), a[i]);
  return r;
}

VP vp_deriv(FieldRef f, const VP& a) {
  if (a.size() <= 1) return {};
  VP r(a.size() - 1);
  uint64_t k = 0;
  for (size_t i = 1; i < a.size(); ++i) {
    k = k + 1 == f->p ? 0 : k + 1;
    r[i - 1] = f->mul(a[i], k);
  }
  vp_trim(r);
  return r;
}

VP vp_from_root(FieldRef f, uint64_t r) { return {f->neg(r), 1}; }

VP vp_xpow_qd_mod(FieldRef f, uint64_t q, int d, const VP& m) {
  VP r = vp_rem(f, VP{0, 1}, m);
  for (int i = 0; i < d; ++i) r = vp_powmod(f, r, q, m);
  return r;
}

bool vp_is_irreducible(FieldRef f, const VP& a) {
  int m = vp_deg(a);
  if (m <= 0) return false;
  if (m == 1) return true;
  uint64_t q = f->order;
  // Rabin test: x^{q^m} = x mod a, and gcd(x^{q^{m/r}} - x, a) = 1 for
  // every prime r | m.
  VP x{0, 1};
  VP top = vp_xpow_qd_mod(f, q, m, a);
  if (vp_sub(f, top, x) != VP{}) return false;
  for (auto [r, e] : factorize_u64(static_cast<uint64_t>(m))) {
    (void)e;
    VP t = vp_xpow_qd_mod(f, q, m / static_cast<int>(r), a);
    if (vp_gcd_monic(f, vp_sub(f, t, x), a) != VP{1}) return false;
  }
  return true;
}

namespace {

// deterministic sequence of field values for splitting attempts
uint64_t split_candidate(FieldRef f, uint64_t j) {
  if (j < 8) return (j + 1) % f->order;
  return (j * 0x9e3779b97f4a7c15ull) % f->order;
}

// split s (monic, squarefree, all roots in K) into linear factors
void split_linear(FieldRef K, const VP& s, std::vector<uint64_t>& out) {
  int d = vp_deg(s);
  if (d <= 0) return;
  if (d == 1) {
    out.push_back(K->neg(s[0]));
    return;
  }
  for (uint64_t j = 0;; ++j) {
    if (j > 4096) throw CheckFail("linear split did not converge");
    uint64_t c = split_candidate(K, j);
    VP g;
    if (K->p != 2) {
      VP u{c, 1};
      VP t = vp_powmod(K, u, (K->order - 1) / 2, s);
      t = vp_sub(K, t, VP{1});
      g = vp_gcd_monic(K, t, s);
    } else {
      // trace map splitting in characteristic 2
      VP u = vp_rem(K, VP{0, c}, s);
      VP t = u;
      VP acc = u;
      for (int i = 1; i < K->n; ++i) {
        t = vp_mulmod(K, t, t, s);
        acc = vp_add(K, acc, t);
      }
      g = vp_gcd_monic(K, acc, s);
    }
    if (vp_deg(g) > 0 && vp_deg(g) < d) {
      VP q, r;
      vp_divrem(K, s, g, q, r);
      split_linear(K, g, out);
      split_linear(K, q, out);
      return;
    }
  }
}

}  // namespace

std::vector<uint64_t> vp_roots(FieldRef K, const VP& h0) {
  VP h = vp_monic(K, h0);
  std::vector<uint64_t> out;
  if (vp_deg(h) <= 0) return out;
  if (K->order <= 65536) {
    for (uint64_t v = 0; v < K->order; ++v)
      if (vp_eval(K, h, v) == 0) out.push_back(v);
    return out;
  }
  // distinct-root part over K
  VP r{0, 1};
  for (int i = 0; i < K->n; ++i) r = vp_powmod(K, r, K->p, h);
  VP s = vp_gcd_monic(K, vp_sub(K, r, VP{0, 1}), h);
  split_linear(K, s, out);
  std::sort(out.begin(), out.end());
  return out;
}

VP vp_equal_degree_factor(FieldRef f, VP h, int t) {
  h = vp_monic(f, std::move(h));
  if (vp_deg(h) == t) return h;
  if (vp_deg(h) % t != 0 || vp_deg(h) < t)
    throw Error("equal-degree factor: bad degree");
  uint64_t qt = 1;
  for (int i = 0; i < t; ++i) qt *= f->order;
  auto mix = [](uint64_t& s) {
    s += 0x9e3779b97f4a7c15ull;
    uint64_t z = s;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  };
  uint64_t seed = 0xed5f00d ^ (static_cast<uint64_t>(t) << 32);
  for (uint64_t j = 0;; ++j) {
    if (j > 4096) throw CheckFail("equal-degree split did not converge");
    VP u(static_cast<size_t>(std::min(2 * t + 1, vp_deg(h))), 0);
    for (size_t i = 0; i < u.size(); ++i) u[i] = mix(seed) % f->order;
    vp_trim(u);
    if (u.empty()) continue;
    VP g;
    if (f->p != 2) {
      VP w = vp_powmod(f, u, (qt - 1) / 2, h);
      g = vp_gcd_monic(f, vp_sub(f, w, VP{1}), h);
    } else {
      VP acc = vp_rem(f, u, h);
      VP w = acc;
      int m = f->n * t;
      for (int i = 1; i < m; ++i) {
        w = vp_mulmod(f, w, w, h);
        acc = vp_add(f, acc, w);
      }
      g = vp_gcd_monic(f, acc, h);
    }
    if (vp_deg(g) > 0 && vp_deg(g) < vp_deg(h)) {
      VP q, r;
      vp_divrem(f, h, g, q, r);
      const VP& pick = vp_deg(g) <= vp_deg(q) ? g : q;
      return vp_equal_degree_factor(f, pick, t);
    }
  }
}

}  // namespace artinv::detail
