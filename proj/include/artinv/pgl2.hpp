#ifndef ARTINV_PGL2_HPP
#define ARTINV_PGL2_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "artinv/poly.hpp"

/*
 * Elements of PGL_2(F_q) as 2x2 matrices canonicalized by scaling so the
 * first nonzero entry of (a, b, c, d) equals 1.  Equality and ordering are
 * entrywise on the canonical form.  The Moebius action uses the projective
 * conventions a/0 = infinity.
 */

namespace artinv {

struct Mat {
  FieldRef f = nullptr;
  uint64_t a = 1, b = 0, c = 0, d = 1;

  bool operator==(const Mat& o) const {
    return f == o.f && a == o.a && b == o.b && c == o.c && d == o.d;
  }
  bool is_identity() const { return a == 1 && b == 0 && c == 0 && d == 1; }
  uint64_t det() const { return f->sub(f->mul(a, d), f->mul(b, c)); }
};

Mat mat_make(FieldRef f, uint64_t a, uint64_t b, uint64_t c, uint64_t d);
Mat mat_id(FieldRef f);
Mat mat_mul(const Mat& x, const Mat& y);
Mat mat_inv(const Mat& x);
bool mat_less(const Mat& x, const Mat& y);
Mat mat_conj(const Mat& h, const Mat& g);  // h g h^{-1}
// entries pushed through an embedding
Mat mat_embed(const Mat& x, FieldRef big);

ProjPoint act(const Mat& g, const ProjPoint& v);
int mat_order(const Mat& g);
uint64_t iota(const Mat& g);  // (a+d)^2 / det
std::vector<ProjPoint> fixed_points(const Mat& g);  // over F_{q^2}

// the unique element of PGL2 taking (infinity, 0, 1) to (a, b, c)
Mat mat_taking_std_triple(FieldRef f, const ProjPoint& a, const ProjPoint& b,
                          const ProjPoint& c);

struct DicksonForm {
  enum class Case { A, B, C } kind;
  // A: gamma ~ (1 b; 0 1), param = b, conj over F_q
  // B: gamma ~ (a 0; 0 1), param = a, conj over F_q
  // C: gamma = E_{zeta,lambda}, param = zeta, lambda in F_{q^2}, conj = C_lambda
  uint64_t param = 0;
  uint64_t lambda = 0;
  Mat conj;  // conj * normal_form * conj^{-1} = gamma
  int kappa() const {
    return kind == Case::A ? 0 : (kind == Case::B ? -1 : 1);
  }
};

DicksonForm dickson_classify(const Mat& g);

// change-of-frame matrix to the fixed-point pair {lambda, lambda^q};
// lives over F_{q^2} and is not canonicalized
Mat c_lambda(FieldRef ext, uint64_t lambda);
// rational matrices diagonalized by C_lambda; returned over the base field
Mat d_delta_lambda(FieldRef base, uint64_t delta, uint64_t lambda);
Mat e_zeta_lambda(FieldRef base, uint64_t zeta, uint64_t lambda);

// least element of F_{q^2} outside F_q
uint64_t least_irrational(FieldRef base, FieldRef ext);
FieldRef quadratic_ext(FieldRef base);

std::string mat_to_string(const Mat& g);
Mat mat_from_string(FieldRef f, const std::string& s);

}  // namespace artinv

#endif
