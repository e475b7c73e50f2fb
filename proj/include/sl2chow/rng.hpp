#pragma once

#include <cstdint>
#include <random>
#include <string>

#include "sl2chow/abvar.hpp"

namespace sl2chow {

// Deterministic generator for test data. Only raw engine draws are used, so
// streams are reproducible across platforms and standard libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  long int_in(long lo, long hi) {  // inclusive bounds
    return lo + static_cast<long>(next() % static_cast<std::uint64_t>(hi - lo + 1));
  }

  Rational rational(long max_abs_num = 9, long max_den = 4) {
    long num = int_in(-max_abs_num, max_abs_num);
    long den = int_in(1, max_den);
    return rat(num, den);
  }

  Rational nonzero_rational(long max_abs_num = 9, long max_den = 4) {
    while (true) {
      Rational r = rational(max_abs_num, max_den);
      if (r != 0) return r;
    }
  }

  Mask mask(std::size_t bits) { return next() & ((Mask(1) << bits) - 1); }

  Mask mask_of_degree(std::size_t bits, int degree) {
    while (true) {
      Mask m = mask(bits);
      if (mask_degree(m) == degree) return m;
    }
  }

  // Sparse class with a handful of nonzero terms.
  CohClass coh_class(const ProductVariety& v, int terms = 5) {
    ExtClass z(v.algebra());
    for (int i = 0; i < terms; ++i) z.add_term(mask(v.generator_count()), rational());
    return {v, z};
  }

  // Class supported in even degrees: the image of an algebraic cycle class
  // in this model always is.
  CohClass even_coh_class(const ProductVariety& v, int terms = 5) {
    ExtClass z(v.algebra());
    for (int i = 0; i < terms; ++i) {
      Mask m = mask(v.generator_count());
      if (mask_degree(m) % 2 != 0) continue;
      z.add_term(m, rational());
    }
    return {v, z};
  }

  CohClass homogeneous_class(const ProductVariety& v, int degree, int terms = 4) {
    ExtClass z(v.algebra());
    for (int i = 0; i < terms; ++i)
      z.add_term(mask_of_degree(v.generator_count(), degree), rational());
    return {v, z};
  }

 private:
  std::mt19937_64 engine_;
};

// FNV-1a over a string; used for stable input digests in reports.
std::uint64_t fnv1a(const std::string& data);
std::string hex64(std::uint64_t value);

}  // namespace sl2chow
