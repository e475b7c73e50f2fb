#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "sl2chow/extalg.hpp"

namespace sl2chow {

// Dimension g with a polarization type (c_1..c_g) of positive elementary
// divisors; the polarization degree is d = prod c_i.
struct PolarizedContext {
  int g = 0;
  std::vector<long> type;

  static PolarizedContext make(int g, std::vector<long> type);
  Rational degree_d() const;
  bool operator==(const PolarizedContext& other) const = default;
};

// The model of A^m: an exterior algebra on 2gm degree-1 generators labelled
// x_i(k), y_i(k), ordered factor-major then x1,y1,..,xg,yg. The orientation
// monomial is the product of all generators in this order.
class ProductVariety {
 public:
  ProductVariety(PolarizedContext ctx, int factors);

  const PolarizedContext& context() const { return ctx_; }
  int factors() const { return factors_; }
  const ContextPtr& algebra() const { return algebra_; }
  std::size_t generator_count() const { return algebra_->size(); }
  Mask orientation() const { return algebra_->full_mask(); }

  // factor and i are 1-based; sym is 'x' or 'y'.
  std::size_t generator_index(int factor, char sym, int i) const;
  ExtClass generator(int factor, char sym, int i) const;

  bool operator==(const ProductVariety& other) const {
    return ctx_ == other.ctx_ && factors_ == other.factors_;
  }

 private:
  PolarizedContext ctx_;
  int factors_;
  ContextPtr algebra_;
};

// Homomorphism A^m -> A^n of self-products, encoded by an n x m integer
// matrix: the pullback sends the j-th target factor's degree-1 generator u
// to sum_i M[j][i] * (u on source factor i).
struct HomMorphism {
  ProductVariety source;
  ProductVariety target;
  std::vector<std::vector<long>> matrix;

  static HomMorphism make(const ProductVariety& source, const ProductVariety& target,
                          std::vector<std::vector<long>> matrix);
};

HomMorphism identity_hom(const ProductVariety& v);
HomMorphism mult_map(const ProductVariety& a, long n);      // n_A : A -> A
HomMorphism addition_map(const ProductVariety& a);          // m : A^2 -> A
HomMorphism difference_map(const ProductVariety& a);        // (a,b) -> b-a
HomMorphism diagonal_map(const ProductVariety& a);          // A -> A^2
HomMorphism sigma_map(const ProductVariety& a);             // (a,b) -> (b, a+b)
HomMorphism pair_embedding(const ProductVariety& a, long u, long v);  // t -> (ut, vt)
HomMorphism scale_pair(const ProductVariety& a, long u, long v);      // (s,t) -> (us, vt)
// Projection of A^m onto the listed 1-based factors, in the listed order.
HomMorphism projection(const ProductVariety& a, int source_factors, std::vector<int> kept);

// A cycle class in the model: an exterior-algebra element on its variety.
struct CohClass {
  ProductVariety variety;
  ExtClass value;

  bool is_zero() const { return value.is_zero(); }
  CohClass operator-() const { return {variety, -value}; }
  CohClass scaled(const Rational& c) const { return {variety, value.scaled(c)}; }
  friend CohClass operator+(const CohClass& a, const CohClass& b);
  friend CohClass operator-(const CohClass& a, const CohClass& b);
  friend CohClass operator*(const CohClass& a, const CohClass& b);  // intersection
  bool operator==(const CohClass& other) const;
};

CohClass zero_class(const ProductVariety& v);
CohClass one_class(const ProductVariety& v);

// theta = sum_i c_i x_i y_i on a single factor; symmetric by construction.
CohClass theta(const ProductVariety& v);

// Class of degree 2g with integral 1: theta^g / (g! d).
CohClass point_class(const ProductVariety& v);

// p*theta + q*theta - m*theta on A x A.
CohClass poincare_class(const ProductVariety& v);

CohClass pullback(const HomMorphism& f, const CohClass& z);

// Pushforward, defined as the Poincare-pairing adjoint of the pullback:
// <f_* z, w> = <z, f^* w> with <a, b> = integral(a wedge b).
CohClass pushforward(const HomMorphism& f, const CohClass& z);

// Convolution along the group law: m_*(p^*a . q^*b).
CohClass pontryagin(const CohClass& a, const CohClass& b);

// Fourier transform d^{-1} q_*(e^P . p^*z); maps degree i to 2g-i.
CohClass fourier(const CohClass& z);

CohClass exp_class(const CohClass& z);

// Split into the components on which n^* acts as n^i.
std::map<int, CohClass> weight_components(const CohClass& z);

Rational integral(const CohClass& z);

// Enumerates all masks of the given popcount over n bits (n < 64).
void for_each_mask_of_degree(std::size_t n, int degree, const std::function<void(Mask)>& fn);

}  // namespace sl2chow
