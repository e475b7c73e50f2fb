#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "sl2chow/corr.hpp"
#include "sl2chow/sl2rep.hpp"

namespace sl2chow {

// The sl2 triple realized on the full cohomology space of A, together with
// the correspondence lifts of the generating group elements:
//   X = multiply by theta, Y = Pontryagin by theta^{g-1}/(d (g-1)!),
//   H = (i - g) on degree i.
struct ChowAction {
  PolarizedContext ctx;
  ProductVariety variety;
  std::vector<Mask> basis;  // monomial masks in ascending order
  Sl2Triple triple;

  bool has_lifts = false;  // correspondence lifts exist for g <= 3
  std::function<Correspondence(const Rational&)> lift_u;  // Delta_* e^{a theta}
  std::function<Correspondence(const Rational&)> lift_v;  // d^{-1} a^g e^{delta^* theta / a}
  std::function<Correspondence(const Rational&)> lift_t;  // t^{-g} sum t^i pi_i
  std::optional<Correspondence> lift_w;                   // d^{-1} e^P

  Vec to_vector(const CohClass& z) const;
  CohClass from_vector(const Vec& v) const;
};

// Guarded to g <= 4 for the operator triple and g <= 3 for the lifts.
ChowAction build_action(const PolarizedContext& ctx);

// Closed forms of the four generating shapes:
//   diag(t, 1/t): t^{-g} t^* z     w: F(z)      -w: F((-1)^g (-1)^* z)
//   (1 a; 0 1):   e^{a theta} z    (1 0; a 1): d^{-1} a^g e^{theta/a} * z
// The lower-unipotent form is the identity at a = 0.
CohClass act_closed_form(const GroupElement& m, const CohClass& z);

// Action of an arbitrary element through the elementary factorization.
CohClass act_general(const GroupElement& m, const CohClass& z);

struct RelationReport {
  std::vector<std::pair<std::string, bool>> checks;
  bool ok() const {
    for (const auto& [name, pass] : checks)
      if (!pass) return false;
    return true;
  }
};

// Correspondence-level relations w^4 = [Delta], (u w)^3 = w^2,
// w^2 = (-1)^g Gamma'_{-1}. Guarded to g <= 2.
RelationReport sl2z_relations_check(const PolarizedContext& ctx);

// (e^{delta^* theta / a})_* z = e^{theta/a} * z on seeded random classes.
// Guarded to g <= 3.
RelationReport sigma_identity_check(const PolarizedContext& ctx, const Rational& a,
                                    std::uint64_t seed);

}  // namespace sl2chow
