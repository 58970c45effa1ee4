#include "artinv/addpoly.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>

namespace artinv {

namespace {

int log_base(uint64_t P, uint64_t p) {
  int m = 0;
  uint64_t v = P;
  while (v > 1 && v % p == 0) v /= p, ++m;
  if (v != 1 || m == 0) throw Error("P is not a power of the characteristic");
  return m;
}

std::mutex g_pc_mutex;
std::map<std::pair<FieldRef, uint64_t>, std::unique_ptr<PCoords>>&
pc_registry() {
  static std::map<std::pair<FieldRef, uint64_t>, std::unique_ptr<PCoords>> reg;
  return reg;
}

}  // namespace

const PCoords& pcoords(FieldRef f, uint64_t P) {
  int m = log_base(P, f->p);
  if (f->n % m != 0) throw Error("F_P is not a subfield of F_q");
  std::lock_guard<std::mutex> lock(g_pc_mutex);
  auto key = std::make_pair(f, P);
  auto& reg = pc_registry();
  auto it = reg.find(key);
  if (it != reg.end()) return *it->second;

  auto pc = std::make_unique<PCoords>();
  pc->f = f;
  pc->fP = make_field(f->p, m);
  pc->e = f->n / m;
  const EmbeddingMap& em = embed(pc->fP, f);
  // F_P-basis of F_q: powers of the field generator x
  pc->basis_elems.resize(pc->e);
  uint64_t x = f->n == 1 ? 1 : f->ppow[1];
  uint64_t cur = 1;
  for (int j = 0; j < pc->e; ++j) {
    pc->basis_elems[j] = cur;
    cur = f->mul(cur, x);
  }
  // flatten to F_p: columns (j,k) are x^j * embed(y^k), y generating F_P
  int nn = f->n;
  FieldRef fp = make_field(f->p, 1);
  uint64_t y = pc->fP->n == 1 ? 1 : pc->fP->ppow[1];
  std::vector<std::vector<uint64_t>> aug(nn, std::vector<uint64_t>(2 * nn, 0));
  for (int j = 0; j < pc->e; ++j) {
    uint64_t yk = 1;
    for (int k = 0; k < m; ++k) {
      uint64_t col_el = f->mul(pc->basis_elems[j], em.apply(yk));
      uint64_t dg[64];
      f->decode(col_el, dg);
      for (int r = 0; r < nn; ++r) aug[r][j * m + k] = dg[r];
      yk = pc->fP->mul(yk, y);
    }
  }
  for (int r = 0; r < nn; ++r) aug[r][nn + r] = 1;
  for (int c = 0; c < nn; ++c) {
    int piv = -1;
    for (int r = c; r < nn; ++r)
      if (aug[r][c]) {
        piv = r;
        break;
      }
    if (piv < 0) throw CheckFail("P-basis of F_q is singular");
    std::swap(aug[piv], aug[c]);
    uint64_t s = fp->inv(aug[c][c]);
    for (auto& v : aug[c]) v = fp->mul(v, s);
    for (int r = 0; r < nn; ++r) {
      if (r == c || aug[r][c] == 0) continue;
      uint64_t k2 = aug[r][c];
      for (int j = 0; j < 2 * nn; ++j)
        aug[r][j] = fp->sub(aug[r][j], fp->mul(k2, aug[c][j]));
    }
  }
  pc->solver.assign(nn, std::vector<uint64_t>(nn));
  for (int r = 0; r < nn; ++r)
    for (int j = 0; j < nn; ++j) pc->solver[r][j] = aug[r][nn + j];

  it = reg.emplace(key, std::move(pc)).first;
  return *it->second;
}

std::vector<uint64_t> PCoords::to_coords(uint64_t v) const {
  FieldRef fp = make_field(f->p, 1);
  int nn = f->n, m = f->n / e;
  uint64_t dg[64];
  f->decode(v, dg);
  std::vector<uint64_t> sol(nn, 0);
  for (int r = 0; r < nn; ++r) {
    uint64_t acc = 0;
    for (int j = 0; j < nn; ++j)
      acc = fp->add(acc, fp->mul(solver[r][j], dg[j]));
    sol[r] = acc;
  }
  std::vector<uint64_t> out(e);
  for (int j = 0; j < e; ++j) {
    uint64_t digs[64];
    for (int k = 0; k < m; ++k) digs[k] = sol[j * m + k];
    out[j] = fP->encode(digs);
  }
  return out;
}

uint64_t PCoords::from_coords(const std::vector<uint64_t>& c) const {
  const EmbeddingMap& em = embed(fP, f);
  uint64_t acc = 0;
  for (int j = 0; j < e; ++j)
    if (c[j]) acc = f->add(acc, f->mul(em.apply(c[j]), basis_elems[j]));
  return acc;
}

namespace {

std::vector<std::vector<uint64_t>> echelonize(
    FieldRef fP, std::vector<std::vector<uint64_t>> rows) {
  size_t r = 0;
  size_t cols = rows.empty() ? 0 : rows[0].size();
  for (size_t c = 0; c < cols && r < rows.size(); ++c) {
    size_t piv = SIZE_MAX;
    for (size_t i = r; i < rows.size(); ++i)
      if (rows[i][c]) {
        piv = i;
        break;
      }
    if (piv == SIZE_MAX) continue;
    std::swap(rows[piv], rows[r]);
    uint64_t s = fP->inv(rows[r][c]);
    for (auto& x : rows[r]) x = fP->mul(x, s);
    for (size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][c] == 0) continue;
      uint64_t k = rows[i][c];
      for (size_t j = 0; j < cols; ++j)
        rows[i][j] = fP->sub(rows[i][j], fP->mul(k, rows[r][j]));
    }
    ++r;
  }
  rows.resize(r);
  return rows;
}

}  // namespace

Subspace span_subspace(FieldRef f, uint64_t P,
                       const std::vector<uint64_t>& gens) {
  const PCoords& pc = pcoords(f, P);
  std::vector<std::vector<uint64_t>> rows;
  for (uint64_t g : gens) rows.push_back(pc.to_coords(g));
  rows = echelonize(pc.fP, std::move(rows));
  Subspace W{f, P, {}};
  for (auto& row : rows) W.basis.push_back(pc.from_coords(row));
  return W;
}

Subspace make_subspace(FieldRef f, uint64_t P,
                       const std::vector<uint64_t>& gens) {
  Subspace W = span_subspace(f, P, gens);
  if (W.dim() != static_cast<int>(gens.size()))
    throw Error("subspace basis is F_P-dependent");
  return W;
}

std::vector<uint64_t> subspace_elements(const Subspace& W) {
  FieldRef f = W.f;
  const PCoords& pc = pcoords(f, W.P);
  const EmbeddingMap& em = embed(pc.fP, f);
  uint64_t size = 1;
  for (int i = 0; i < W.dim(); ++i) {
    size *= W.P;
    if (size > brute_bound()) throw Error("subspace exceeds brute bound");
  }
  std::vector<uint64_t> out{0};
  out.reserve(size);
  for (uint64_t b : W.basis) {
    size_t cur = out.size();
    for (uint64_t s = 1; s < W.P; ++s) {
      uint64_t sb = f->mul(em.apply(s), b);
      for (size_t i = 0; i < cur; ++i) out.push_back(f->add(out[i], sb));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool subspace_contains(const Subspace& W, uint64_t v) {
  const PCoords& pc = pcoords(W.f, W.P);
  std::vector<std::vector<uint64_t>> rows;
  for (uint64_t b : W.basis) rows.push_back(pc.to_coords(b));
  rows.push_back(pc.to_coords(v));
  return static_cast<int>(echelonize(pc.fP, std::move(rows)).size()) ==
         W.dim();
}

AdditivePoly addpoly_from_poly(const Poly& h, uint64_t P) {
  if (h.deg() < 1 || h.lc() != 1)
    throw Error("additive polynomial must be monic of degree >= 1");
  if (h.coeff(0) != 0) throw Error("additive polynomial has a constant term");
  std::vector<uint64_t> exps{1};
  while (exps.back() < static_cast<uint64_t>(h.deg()))
    exps.push_back(exps.back() * P);
  if (exps.back() != static_cast<uint64_t>(h.deg()))
    throw Error("degree is not a P-power");
  std::vector<uint64_t> a(exps.size());
  int support = 0;
  for (size_t i = 0; i < exps.size(); ++i) {
    a[i] = h.coeff(static_cast<int>(exps[i]));
    if (a[i]) ++support;
  }
  int nonzero = 0;
  for (int i = 0; i <= h.deg(); ++i)
    if (h.coeff(i)) ++nonzero;
  if (nonzero != support) throw Error("polynomial has non-P-power terms");
  return AdditivePoly{h.f, P, std::move(a)};
}

Poly addpoly_to_poly(const AdditivePoly& L) {
  std::vector<uint64_t> exps{1};
  for (int i = 1; i <= L.d(); ++i) exps.push_back(exps.back() * L.P);
  std::vector<uint64_t> c(exps.back() + 1, 0);
  for (int i = 0; i <= L.d(); ++i) c[exps[i]] = L.a[i];
  return p_of(L.f, c);
}

uint64_t add_eval(const AdditivePoly& L, uint64_t x) {
  FieldRef f = L.f;
  uint64_t acc = 0, xp = x;
  for (size_t i = 0; i < L.a.size(); ++i) {
    if (L.a[i]) acc = f->add(acc, f->mul(L.a[i], xp));
    if (i + 1 < L.a.size()) xp = frobenius(f, xp, L.P, 1);
  }
  return acc;
}

AdditivePoly add_compose(const AdditivePoly& M, const AdditivePoly& L) {
  if (M.f != L.f || M.P != L.P) throw Error("mixed additive contexts");
  FieldRef f = M.f;
  AdditivePoly R{f, M.P, std::vector<uint64_t>(M.d() + L.d() + 1, 0)};
  for (int j = 0; j <= M.d(); ++j) {
    if (M.a[j] == 0) continue;
    for (int i = 0; i <= L.d(); ++i) {
      if (L.a[i] == 0) continue;
      uint64_t t = f->mul(M.a[j], frobenius(f, L.a[i], M.P, j));
      R.a[i + j] = f->add(R.a[i + j], t);
    }
  }
  return R;
}

AdditivePoly xq_minus_x(FieldRef f, uint64_t P) {
  int m = log_base(P, f->p);
  int e = f->n / m;
  AdditivePoly R{f, P, std::vector<uint64_t>(e + 1, 0)};
  R.a[0] = f->neg(1);
  R.a[e] = 1;
  return R;
}

AdditivePoly qw_from_subspace(const Subspace& W) {
  FieldRef f = W.f;
  auto elems = subspace_elements(W);
  Poly prod = p_from_roots(f, elems);
  AdditivePoly L = addpoly_from_poly(prod, W.P);
  // spot-check F_P-linearity
  const PCoords& pc = pcoords(f, W.P);
  const EmbeddingMap& em = embed(pc.fP, f);
  for (uint64_t t = 0; t < 4; ++t) {
    uint64_t x = (t * 0x9e3779b97f4a7c15ull + 1) % f->order;
    uint64_t y = (t * 0xbf58476d1ce4e5b9ull + 2) % f->order;
    uint64_t lam = em.apply(t % W.P);
    uint64_t lhs = add_eval(L, f->add(f->mul(lam, x), y));
    uint64_t rhs = f->add(f->mul(lam, add_eval(L, x)), add_eval(L, y));
    if (lhs != rhs) throw CheckFail("Q_W is not F_P-additive");
  }
  return L;
}

Subspace image_subspace(const AdditivePoly& L) {
  const PCoords& pc = pcoords(L.f, L.P);
  const EmbeddingMap& em = embed(pc.fP, L.f);
  int m = log_base(L.P, L.f->p);
  uint64_t y = pc.fP->n == 1 ? 1 : pc.fP->ppow[1];
  std::vector<uint64_t> images;
  for (int j = 0; j < pc.e; ++j) {
    uint64_t yk = 1;
    for (int k = 0; k < m; ++k) {
      images.push_back(
          add_eval(L, L.f->mul(pc.basis_elems[j], em.apply(yk))));
      yk = pc.fP->mul(yk, y);
    }
  }
  return span_subspace(L.f, L.P, images);
}

std::pair<AdditivePoly, AdditivePoly> reciprocity_pair(const Subspace& W) {
  FieldRef f = W.f;
  AdditivePoly QW = qw_from_subspace(W);
  Subspace Y = image_subspace(QW);
  AdditivePoly QY = qw_from_subspace(Y);
  AdditivePoly target = xq_minus_x(f, W.P);
  if (!(add_compose(QY, QW) == target)) throw CheckFail("Q_Y o Q_W != x^q-x");
  if (!(add_compose(QW, QY) == target)) throw CheckFail("Q_W o Q_Y != x^q-x");
  if (!(image_subspace(QY) == W)) throw CheckFail("Q_Y(F_q) != W");
  return {QW, QY};
}

std::optional<AdditivePoly> split_test(const AdditivePoly& L) {
  FieldRef f = L.f;
  if (L.a.empty() || L.a[0] == 0) throw Error("split_test needs a_0 != 0");
  if (L.a.back() != 1) throw Error("split_test needs a monic polynomial");
  int m = log_base(L.P, f->p);
  int e = f->n / m;
  int d = L.d();
  if (d > e) return std::nullopt;
  // top-down triangular solve; the pivot multiplier a_d^{P^{k-d}} is 1
  std::vector<uint64_t> b(e - d + 1, 0);
  b[e - d] = 1;
  for (int k = e - 1; k >= d; --k) {
    uint64_t acc = 0;
    for (int j = k - d + 1; j <= std::min(e - d, k); ++j) {
      int i = k - j;
      if (i < 0 || i > d || L.a[i] == 0 || b[j] == 0) continue;
      acc = f->add(acc, f->mul(b[j], frobenius(f, L.a[i], L.P, j)));
    }
    b[k - d] = f->neg(acc);
  }
  AdditivePoly M{f, L.P, std::move(b)};
  AdditivePoly target = xq_minus_x(f, L.P);
  if (!(add_compose(M, L) == target)) return std::nullopt;
  if (!(add_compose(L, M) == target))
    throw CheckFail("M o L = x^q-x but L o M != x^q-x");
  return M;
}

bool matrix_criterion_oracle(const AdditivePoly& L) {
  FieldRef f = L.f;
  if (L.a.empty() || L.a[0] == 0) throw Error("oracle needs a_0 != 0");
  int m = log_base(L.P, f->p);
  int e = f->n / m;
  int d = L.d();
  if (d == 0) throw Error("oracle needs degree >= 1");
  auto matmul = [&](const std::vector<uint64_t>& x,
                    const std::vector<uint64_t>& y) {
    std::vector<uint64_t> z(d * d, 0);
    for (int i = 0; i < d; ++i)
      for (int k = 0; k < d; ++k) {
        if (x[i * d + k] == 0) continue;
        for (int j = 0; j < d; ++j)
          z[i * d + j] =
              f->add(z[i * d + j], f->mul(x[i * d + k], y[k * d + j]));
      }
    return z;
  };
  std::vector<uint64_t> C(d * d, 0);
  for (int i = 1; i < d; ++i) C[i * d + (i - 1)] = 1;
  for (int i = 0; i < d; ++i) C[i * d + (d - 1)] = f->neg(L.a[i]);
  std::vector<uint64_t> A = C;
  std::vector<uint64_t> Cp = C;
  for (int s = 1; s < e; ++s) {
    for (auto& x : Cp) x = frobenius(f, x, L.P, 1);
    A = matmul(A, Cp);
  }
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      if (A[i * d + j] != (i == j ? 1u : 0u)) return false;
  return true;
}

bool analyze_deg3_special(FieldRef f, uint64_t P, uint64_t a_coef,
                          uint64_t b_coef) {
  int m = log_base(P, f->p);
  if (f->n != 7 * m) throw Error("analyze_deg3_special needs F_{P^7}");
  if (a_coef == 0) throw Error("a must be nonzero");
  AdditivePoly L{f, P, {f->neg(a_coef), f->neg(b_coef), 0, 1}};
  bool split = split_test(L).has_value();
  bool formula = false;
  if (P % 2 == 0 && b_coef != 0) {
    FieldRef fP = make_field(f->p, m);
    bool norm1 = norm_to(f, b_coef, fP) == 1;
    uint64_t expo = P * P * P * P + P * P;
    bool aok = a_coef == f->pow(f->inv(b_coef), expo);
    formula = norm1 && aok;
  }
  if (split != formula)
    throw CheckFail("deg-3 splitting characterization disagrees");
  return split;
}

std::vector<uint64_t> subfield_orders(FieldRef f) {
  std::vector<uint64_t> out;
  for (int m = 1; m <= f->n; ++m) {
    if (f->n % m != 0) continue;
    uint64_t P = 1;
    for (int i = 0; i < m; ++i) P *= f->p;
    out.push_back(P);
  }
  return out;
}

std::vector<Subspace> all_subspaces(FieldRef f, uint64_t P) {
  const PCoords& pc = pcoords(f, P);
  int e = pc.e;
  std::vector<Subspace> out;
  for (int k = 0; k <= e; ++k) {
    std::vector<int> idx(k);
    auto emit = [&]() {
      std::vector<std::pair<int, int>> free_cells;
      for (int r = 0; r < k; ++r)
        for (int c2 = idx[r] + 1; c2 < e; ++c2) {
          bool is_pivot = false;
          for (int rr = 0; rr < k; ++rr)
            if (idx[rr] == c2) is_pivot = true;
          if (!is_pivot) free_cells.push_back({r, c2});
        }
      uint64_t total = 1;
      for (size_t i = 0; i < free_cells.size(); ++i) {
        total *= P;
        if (total > brute_bound())
          throw Error("subspace enumeration exceeds brute bound");
      }
      for (uint64_t code = 0; code < total; ++code) {
        std::vector<std::vector<uint64_t>> rows(k,
                                                std::vector<uint64_t>(e, 0));
        for (int r = 0; r < k; ++r) rows[r][idx[r]] = 1;
        uint64_t cc = code;
        for (auto [r, c2] : free_cells) {
          rows[r][c2] = cc % P;
          cc /= P;
        }
        Subspace W{f, P, {}};
        for (auto& row : rows) W.basis.push_back(pc.from_coords(row));
        out.push_back(std::move(W));
      }
    };
    auto rec = [&](auto&& self, int pos, int start) -> void {
      if (pos == k) {
        emit();
        return;
      }
      for (int c2 = start; c2 < e; ++c2) {
        idx[pos] = c2;
        self(self, pos + 1, c2 + 1);
      }
    };
    rec(rec, 0, 0);
  }
  return out;
}

}  // namespace artinv
