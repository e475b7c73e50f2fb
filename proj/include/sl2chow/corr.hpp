#pragma once

#include <vector>

#include "sl2chow/abvar.hpp"

namespace sl2chow {

// An element of Corr(A): a class on A x A. Composition via the triple
// product makes these an associative unital algebra acting on CH(A).
struct Correspondence {
  CohClass value;

  static Correspondence on(const CohClass& z);
  const PolarizedContext& context() const { return value.variety.context(); }
  friend Correspondence operator+(const Correspondence& a, const Correspondence& b);
  friend Correspondence operator-(const Correspondence& a, const Correspondence& b);
  Correspondence scaled(const Rational& c) const { return {value.scaled(c)}; }
  bool operator==(const Correspondence& other) const { return value == other.value; }
};

// Unit element: the class of the diagonal.
Correspondence diagonal_class(const PolarizedContext& ctx);

// beta o alpha = (p13)_*(p12^* alpha . p23^* beta). Guarded to g <= 3.
Correspondence compose(const Correspondence& beta, const Correspondence& alpha);

// alpha_* z = q_*(alpha . p^* z).
CohClass apply(const Correspondence& alpha, const CohClass& z);

// Delta_* z; a Q-algebra homomorphism CH(A) -> Corr(A).
Correspondence diagonal_push(const CohClass& z);

// Gamma_n: class of the graph of n_A (pushforward of 1 along a -> (a, na));
// Gamma'_n is its transpose (a -> (na, a)).
Correspondence graph(const PolarizedContext& ctx, long n);
Correspondence transpose_graph(const PolarizedContext& ctx, long n);

// Orthogonal idempotents pi_0..pi_2g with sum [Delta], constructed as the
// second-factor degree split of the diagonal class.
std::vector<Correspondence> kunneth_idempotents(const PolarizedContext& ctx);

// Two-sided inverse in Corr(A) by exact linear solve; throws not_invertible.
// Guarded to g <= 2.
Correspondence invert(const Correspondence& alpha);

// An isogeny pi : A -> A0 between model contexts of the same dimension,
// acting on degree 1 by x_i -> x_i, y0_i -> sum_j B[i][j] y_j. The degree of
// pi is det B; theta = pi^* theta0 is required.
struct Isogeny {
  PolarizedContext source;
  PolarizedContext target;
  std::vector<std::vector<long>> matrix;

  static Isogeny make(PolarizedContext source, PolarizedContext target,
                      std::vector<std::vector<long>> matrix);
  Rational degree() const;
};

// (pi, pi)^* alpha0, a class on A x A.
Correspondence isogeny_pullback_pair(const Isogeny& pi, const Correspondence& alpha0);

// deg(pi)^{-1} (pi, pi)^*: an isomorphism of correspondence algebras.
Correspondence isogeny_transfer(const Isogeny& pi, const Correspondence& alpha0);

// Single-class pullback along pi (classes on A0 to classes on A).
CohClass isogeny_pullback(const Isogeny& pi, const CohClass& z0);

}  // namespace sl2chow
