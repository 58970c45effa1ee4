#ifndef ARTINV_SUBGROUP_HPP
#define ARTINV_SUBGROUP_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "artinv/addpoly.hpp"
#include "artinv/pgl2.hpp"

/*
 * Finite subgroups of PGL_2(F_q) as explicit sorted element sets, with the
 * named constructors used throughout, orbits on P^1 over extension fields,
 * short orbits, and conjugacy classes.
 */

namespace artinv {

inline constexpr uint64_t kSubgroupBound = 100000;

struct Subgroup {
  FieldRef f = nullptr;
  std::vector<Mat> elems;  // sorted by mat_less, closed, contains identity
  std::string label = "custom";

  size_t size() const { return elems.size(); }
  bool contains(const Mat& g) const;
  bool operator==(const Subgroup& o) const {
    return f == o.f && elems == o.elems;
  }
};

struct ConjClass {
  Mat rep;                  // canonically least member
  std::vector<Mat> members; // sorted

  size_t size() const { return members.size(); }
  bool contains(const Mat& g) const;
  bool operator==(const ConjClass& o) const { return rep == o.rep; }
};

struct Orbit {
  std::vector<ProjPoint> points;  // sorted, over a stated field
  long multiplicity = 0;          // |G| / |points|

  size_t size() const { return points.size(); }
  bool contains(const ProjPoint& v) const;
};

Subgroup generate(FieldRef f, const std::vector<Mat>& gens,
                  const std::string& label = "custom");

Subgroup kummer_group(FieldRef f, uint64_t n);
Subgroup klein_group(FieldRef f, uint64_t b);
Subgroup g3_group(FieldRef f);
Subgroup g6_group(FieldRef f);
Subgroup borel_group(FieldRef f);
Subgroup borel_sub_group(FieldRef f, uint64_t P);
Subgroup unipotent_group(FieldRef f, const Subspace& W);
Subgroup cyclic_group(const Mat& g);
Subgroup order2_group(FieldRef f, uint64_t c);
Subgroup pgl2_full(FieldRef f);
Subgroup psl2_group(FieldRef f);

// orbit of v under G; v may live over any extension of G's field
Orbit orbit(const Subgroup& G, const ProjPoint& v);
Orbit orbit_infinity(const Subgroup& G);  // over the base field
// all orbits of size < |G|, over F_{q^2}
std::vector<Orbit> short_orbits(const Subgroup& G);

std::vector<ConjClass> conjugacy_classes(const Subgroup& G);
ConjClass class_of(const Subgroup& G, const Mat& g);
ConjClass identity_class(const Subgroup& G);

// centralizer of a non-identity element inside PGL_2(F_q)
Subgroup centralizer(const Mat& g);

std::vector<Mat> small_generating_set(const Subgroup& G);

}  // namespace artinv

#endif
