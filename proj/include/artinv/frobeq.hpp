#ifndef ARTINV_FROBEQ_HPP
#define ARTINV_FROBEQ_HPP

#include "artinv/subgroup.hpp"

/*
 * The Frobenius equation v^q = gamma(v): solution sets S_{gamma,q} on
 * P^1(F_qbar), their degree stratification, and the factorization shape of
 * x^q (cx + d) - (ax + b).  Solutions split into the rational fixed points
 * of gamma and a single centralizer orbit of degree-t points, t the
 * projective order of gamma.
 */

namespace artinv {

struct FrobShape {
  int t = 1;              // degree of the irrational factors
  long count_t = 0;       // number of irreducible degree-t factors
  long count_linear = 0;  // rational solutions, including inf when c = 0
  int kappa = 0;

  bool operator==(const FrobShape& o) const {
    return t == o.t && count_t == o.count_t &&
           count_linear == o.count_linear && kappa == o.kappa;
  }
};

// x^q (c x + d) - (a x + b)
Poly frob_poly(const Mat& g);

struct SGamma {
  std::vector<ProjPoint> rational;  // over the base field
  std::vector<ProjPoint> degree_t;  // over F_{q^t}; empty when not listed
  int t = 1;
  bool listed = false;  // degree-t points were materialized
};

SGamma s_gamma(const Mat& g);

FrobShape predict_factor_shape(const Mat& g);

struct ShapeCheck {
  FrobShape predicted, actual;
  bool agree = false;
};

// ddf-based verification of the predicted shape
ShapeCheck verify_factor_shape(const Mat& g);

}  // namespace artinv

#endif
