#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "sl2chow/exactla.hpp"

namespace sl2chow {

// A monomial is the set of its degree-1 generators, encoded as a bitmask in
// the context's fixed generator order. Degree = popcount.
using Mask = std::uint64_t;

// Generator list of an exterior algebra Lambda(V). Labels are unique and the
// order is fixed for the context's lifetime; all signs are relative to it.
struct AlgebraContext {
  std::vector<std::string> labels;

  std::size_t size() const { return labels.size(); }
  Mask full_mask() const { return size() == 64 ? ~Mask(0) : (Mask(1) << size()) - 1; }
};

using ContextPtr = std::shared_ptr<const AlgebraContext>;

ContextPtr make_context(std::vector<std::string> labels);
bool same_context(const ContextPtr& a, const ContextPtr& b);

int mask_degree(Mask m);

// Sign of merging two disjoint sorted monomials a, b into the sorted union:
// parity of the number of inversions in the concatenated index sequence.
// Returns 0 when the masks intersect.
int merge_sign(Mask a, Mask b);

// Sparse exterior-algebra element with exact rational coefficients. All
// stored coefficients are nonzero. Degree-0 scalars live on the empty mask.
class ExtClass {
 public:
  explicit ExtClass(ContextPtr ctx) : ctx_(std::move(ctx)) {}

  static ExtClass scalar(ContextPtr ctx, const Rational& c);
  static ExtClass monomial(ContextPtr ctx, Mask m, const Rational& c);

  const ContextPtr& context() const { return ctx_; }
  const std::map<Mask, Rational>& terms() const { return terms_; }

  bool is_zero() const { return terms_.empty(); }
  Rational coefficient(Mask m) const;
  void add_term(Mask m, const Rational& c);

  ExtClass operator-() const;
  ExtClass scaled(const Rational& c) const;
  friend ExtClass operator+(const ExtClass& a, const ExtClass& b);
  friend ExtClass operator-(const ExtClass& a, const ExtClass& b);
  bool operator==(const ExtClass& other) const;

  ExtClass graded_part(int degree) const;
  std::map<int, ExtClass> graded_parts() const;
  // True when all terms share one degree; the zero class is homogeneous of
  // every degree (reported as -1).
  bool is_homogeneous(int* degree = nullptr) const;
  int max_degree() const;

 private:
  ContextPtr ctx_;
  std::map<Mask, Rational> terms_;
};

// Graded-commutative product. On monomials: zero if the masks intersect,
// else the union mask with the inversion-parity sign.
ExtClass wedge(const ExtClass& a, const ExtClass& b);

// The unique algebra homomorphism sending generator i of `from` to
// images[i] (pure degree 1 in `to`), applied to cls.
ExtClass algebra_map(const ContextPtr& from, const ContextPtr& to,
                     const std::vector<ExtClass>& images, const ExtClass& cls);

// Coefficient of the orientation monomial (the full mask).
Rational integral(const ExtClass& cls, Mask orientation);

// Sum exp(cls) = sum cls^k / k!, finite by nilpotency. Requires cls even of
// positive degree.
ExtClass exp_even(const ExtClass& cls);

}  // namespace sl2chow
