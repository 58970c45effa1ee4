#ifndef ARTINV_QUOTIENT_HPP
#define ARTINV_QUOTIENT_HPP

#include <optional>
#include <string>
#include <utility>

#include "artinv/subgroup.hpp"

/*
 * Quotient maps: G-invariant rational functions Q = f/g with
 * deg f = |G| > deg g and Q(inf) = inf.  Construction goes through the
 * zero/pole description: g collects the finite points of the orbit of
 * infinity with multiplicity, f collects a chosen Frobenius-stable orbit.
 * Named groups also get their preferred closed forms.
 */

namespace artinv {

struct QuotientMap {
  Subgroup group;
  RatFunc map;
  std::vector<ProjPoint> irregular;  // over F_{q^2}, sorted, incl. inf if short
};

struct VerifyResult {
  bool ok = false;
  std::string reason;  // names the violated condition and witness on failure
};

struct GroupSpec {
  enum class Kind {
    kummer,
    klein,
    g3,
    g6,
    borel,
    borel_sub,
    unipotent,
    cyclic,
    order2,
    pgl2,
    psl2
  } kind = Kind::g3;
  std::string arg;  // raw parameter text

  std::string to_string() const;
};

GroupSpec parse_group_spec(const std::string& s);
Subgroup build_group(FieldRef f, const GroupSpec& spec);
// "basis=[...]" with optional "P=..," prefix -> (P, basis elements)
std::pair<uint64_t, std::vector<uint64_t>> parse_unipotent_arg(
    FieldRef f, const std::string& arg);

// generic orbit-based construction (Frobenius-stable orbit over
// F_q, F_{q^2}, F_{q^3}, then stable short orbits)
QuotientMap build_quotient(const Subgroup& G);

// the paper-preferred closed form for a named group
QuotientMap named_quotient(FieldRef f, const GroupSpec& spec);

VerifyResult verify_quotient(const Subgroup& G, const RatFunc& R);

// (a, b) with R2 = a R1 + b, if any
std::optional<std::pair<uint64_t, uint64_t>> equivalent_up_to_affine(
    const RatFunc& R1, const RatFunc& R2);

// unique h with Q_G = h o Q_H for H inside G; deg h = |G|/|H|
RatFunc relate(const QuotientMap& QH, const QuotientMap& QG);

// quotient map for alpha G alpha^{-1}, with the infinity-restoring Moebius
QuotientMap conjugate_quotient(const QuotientMap& Q1, const Mat& alpha);
// the (alpha, beta) pair used by conjugate_quotient, for invariant transport
std::pair<Mat, Mat> conjugation_frame(const QuotientMap& Q1, const Mat& alpha);

std::vector<ProjPoint> irregular_set(const Subgroup& G, const RatFunc& R);

}  // namespace artinv

#endif
