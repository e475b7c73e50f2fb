#pragma once

// Independent oracles used to pin expected values. These deliberately avoid
// the library's pushforward/adjoint code paths.

#include <bit>
#include <vector>

#include "sl2chow/abvar.hpp"

namespace sl2chow::oracle {

// Fiber integration along a projection A^m -> A^{kept}: a monomial pushes
// forward iff it contains the full generator block of every dropped factor;
// the sign is the parity of (dropped, kept) inversions in the generator
// order. Only valid for order-preserving projections (kept factors listed
// in increasing order), which covers p, q and every p_ij.
inline CohClass fiber_projection_pushforward(const HomMorphism& f, const CohClass& z) {
  const ProductVariety& src = f.source;
  const ProductVariety& tgt = f.target;
  int g = src.context().g;

  // Recover which source factor each target factor keeps.
  std::vector<int> kept;
  for (const auto& row : f.matrix) {
    int found = -1;
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (row[i] == 1 && found < 0)
        found = static_cast<int>(i);
      else if (row[i] != 0)
        throw std::logic_error("not a projection");
    }
    if (found < 0) throw std::logic_error("not a projection");
    if (!kept.empty() && found <= kept.back())
      throw std::logic_error("kept factors must increase");
    kept.push_back(found);
  }

  Mask kept_mask = 0;
  for (int kf : kept)
    for (int b = 0; b < 2 * g; ++b) kept_mask |= Mask(1) << (static_cast<std::size_t>(kf) * 2 * g + b);
  Mask dropped_mask = src.orientation() & ~kept_mask;

  ExtClass out(tgt.algebra());
  for (const auto& [m, c] : z.value.terms()) {
    if ((m & dropped_mask) != dropped_mask) continue;  // fiber block incomplete
    Mask kept_part = m & kept_mask;
    // Inversions: pairs (dropped generator d, kept generator k) with d < k.
    int inversions = 0;
    Mask rest = kept_part;
    while (rest) {
      int i = std::countr_zero(rest);
      rest &= rest - 1;
      inversions += std::popcount(dropped_mask & ((Mask(1) << i) - 1));
    }
    // Relabel kept generators onto the target's factor order.
    Mask relabeled = 0;
    for (std::size_t j = 0; j < kept.size(); ++j) {
      for (int b = 0; b < 2 * g; ++b) {
        Mask src_bit = Mask(1) << (static_cast<std::size_t>(kept[j]) * 2 * g + b);
        if (kept_part & src_bit) relabeled |= Mask(1) << (j * 2 * static_cast<std::size_t>(g) + static_cast<std::size_t>(b));
      }
    }
    Rational coeff = c;
    if (inversions % 2 != 0) coeff = -coeff;
    out.add_term(relabeled, coeff);
  }
  return {tgt, out};
}

// Pushforward through the defining adjoint property, solved densely: find u
// with integral(u ^ b) = integral(z ^ f^* b) for every basis monomial b.
// Exercises only wedge, integral, pullback and the generic linear solver.
inline CohClass dense_adjoint_pushforward(const HomMorphism& f, const CohClass& z) {
  const ProductVariety& tgt = f.target;
  std::size_t n = tgt.generator_count();
  std::size_t dim = std::size_t(1) << n;

  LinearMap pairing(dim, dim);
  for (std::size_t s = 0; s < dim; ++s) {
    for (std::size_t b = 0; b < dim; ++b) {
      ExtClass w = wedge(ExtClass::monomial(tgt.algebra(), Mask(s), 1),
                         ExtClass::monomial(tgt.algebra(), Mask(b), 1));
      Rational v = integral(w, tgt.orientation());
      if (v != 0) pairing.set(b, s, v);  // row b: equation for test monomial b
    }
  }
  Vec rhs(dim, Rational(0));
  for (std::size_t b = 0; b < dim; ++b) {
    CohClass pb = pullback(f, CohClass{tgt, ExtClass::monomial(tgt.algebra(), Mask(b), 1)});
    rhs[b] = integral(wedge(z.value, pb.value), f.source.orientation());
  }
  auto u = solve(pairing, rhs);
  if (!u) throw std::logic_error("degenerate pairing in oracle");
  ExtClass out(tgt.algebra());
  for (std::size_t s = 0; s < dim; ++s) out.add_term(Mask(s), (*u)[s]);
  return {tgt, out};
}

}  // namespace sl2chow::oracle
