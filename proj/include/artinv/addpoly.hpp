#ifndef ARTINV_ADDPOLY_HPP
#define ARTINV_ADDPOLY_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "artinv/poly.hpp"

/*
 * F_P-additive (linearized) polynomials over F_q, where F_P is any subfield
 * of F_q: monic polynomials with only P-power exponents, stored by their
 * support coefficients.  Composition is the twisted convolution
 * (M o L)_k = sum_{i+j=k} M_j L_i^{P^j}.
 *
 * Subspaces of F_q over F_P carry a canonical reduced-row-echelon basis
 * with respect to F_P-coordinates, which makes equality testable.
 */

namespace artinv {

struct AdditivePoly {
  FieldRef f = nullptr;       // ambient F_q
  uint64_t P = 0;             // base order, a power of char(F_q)
  std::vector<uint64_t> a;    // coefficient of x^{P^i} at index i; monic

  int d() const { return static_cast<int>(a.size()) - 1; }
  bool operator==(const AdditivePoly& o) const {
    return f == o.f && P == o.P && a == o.a;
  }
};

struct Subspace {
  FieldRef f = nullptr;
  uint64_t P = 0;
  std::vector<uint64_t> basis;  // echelonized, canonical

  int dim() const { return static_cast<int>(basis.size()); }
  bool operator==(const Subspace& o) const {
    return f == o.f && P == o.P && basis == o.basis;
  }
};

// F_P-coordinates of F_q elements (cached per (f, P) pair)
struct PCoords {
  FieldRef f = nullptr;
  FieldRef fP = nullptr;  // the subfield as its own context
  int e = 0;              // [F_q : F_P]
  std::vector<uint64_t> to_coords(uint64_t v) const;    // e values of fP
  uint64_t from_coords(const std::vector<uint64_t>& c) const;

  std::vector<uint64_t> basis_elems;           // x^j, j < e
  std::vector<std::vector<uint64_t>> solver;   // F_p elimination rows
};
const PCoords& pcoords(FieldRef f, uint64_t P);

// echelonize; throws on an F_P-dependent generating list
Subspace make_subspace(FieldRef f, uint64_t P, const std::vector<uint64_t>& gens);
// same but silently drops dependent generators
Subspace span_subspace(FieldRef f, uint64_t P, const std::vector<uint64_t>& gens);
std::vector<uint64_t> subspace_elements(const Subspace& W);
bool subspace_contains(const Subspace& W, uint64_t v);

AdditivePoly qw_from_subspace(const Subspace& W);
Subspace image_subspace(const AdditivePoly& L);
// (Q_W, Q_Y) with both composition identities and W = Q_Y(F_q) verified
std::pair<AdditivePoly, AdditivePoly> reciprocity_pair(const Subspace& W);

// M with M o L = x^q - x, when all roots of L lie in F_q; empty otherwise
std::optional<AdditivePoly> split_test(const AdditivePoly& L);

// companion-matrix product criterion, used as an independent oracle
bool matrix_criterion_oracle(const AdditivePoly& L);

// the x^{P^3} - b x^P - a x characterization over F_{P^7}; returns the
// splitting verdict and cross-validates it against split_test
bool analyze_deg3_special(FieldRef f, uint64_t P, uint64_t a_coef,
                          uint64_t b_coef);

AdditivePoly add_compose(const AdditivePoly& M, const AdditivePoly& L);
uint64_t add_eval(const AdditivePoly& L, uint64_t x);
AdditivePoly addpoly_from_poly(const Poly& h, uint64_t P);
Poly addpoly_to_poly(const AdditivePoly& L);
AdditivePoly xq_minus_x(FieldRef f, uint64_t P);

// every F_P-subspace of F_q, canonical order (by dimension, then basis)
std::vector<Subspace> all_subspaces(FieldRef f, uint64_t P);
// subfield orders P with F_P a proper-or-improper subfield of F_q
std::vector<uint64_t> subfield_orders(FieldRef f);

}  // namespace artinv

#endif
