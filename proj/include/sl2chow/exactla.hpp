#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace sl2chow {

// Exact rational scalar. GMP keeps values in lowest terms with positive
// denominator once canonicalized; every constructor below canonicalizes.
using Rational = mpq_class;
using Vec = std::vector<Rational>;

Rational rat(long num, long den = 1);
Rational rat_from_string(const std::string& text);
Rational factorial(unsigned long k);
// e may be negative; base must be nonzero in that case.
Rational pow_rat(const Rational& base, long e);
std::string to_string(const Rational& r);

enum class Errc {
  context_mismatch,
  variety_mismatch,
  not_diagonalizable,
  degenerate_pairing,
  missing_image,
  non_linear_image,
  odd_degree_term,
  constant_term,
  not_single_factor,
  not_two_factors,
  not_invertible,
  not_isogeny,
  polarization_mismatch,
  negative_lambda,
  invalid_bidegree,
  bracket_violation,
  not_homogeneous,
  not_decomposable,
  dimension_guard,
  unsupported_shape,
  not_unimodular,
  syntax_error,
  unknown_identifier,
  mixed_product_ambiguity,
  division_error,
  missing_bidegree,
  unknown_suite,
  bad_argument,
};

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message)
      : std::runtime_error(message), code_(code) {}
  Errc code() const { return code_; }

 private:
  Errc code_;
};

[[noreturn]] void fail(Errc code, const std::string& message);

// Sparse linear map between coordinate spaces over Q. Entries are stored as
// (row, col) -> value in canonical sorted order; zeros are never stored.
// Values are immutable once built; set() is a construction helper only.
class LinearMap {
 public:
  LinearMap(std::size_t codomain_dim, std::size_t domain_dim)
      : rows_(codomain_dim), cols_(domain_dim) {}

  static LinearMap identity(std::size_t n);

  std::size_t domain_dim() const { return cols_; }
  std::size_t codomain_dim() const { return rows_; }
  bool is_square() const { return rows_ == cols_; }

  void set(std::size_t row, std::size_t col, const Rational& value);
  void add_to(std::size_t row, std::size_t col, const Rational& value);
  Rational entry(std::size_t row, std::size_t col) const;

  const std::map<std::pair<std::size_t, std::size_t>, Rational>& entries() const {
    return entries_;
  }

  bool is_zero() const { return entries_.empty(); }

  Vec apply(const Vec& v) const;
  LinearMap transpose() const;
  LinearMap scaled(const Rational& c) const;
  LinearMap power(unsigned long e) const;

  friend LinearMap operator*(const LinearMap& a, const LinearMap& b);
  friend LinearMap operator+(const LinearMap& a, const LinearMap& b);
  friend LinearMap operator-(const LinearMap& a, const LinearMap& b);
  bool operator==(const LinearMap& other) const;

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::map<std::pair<std::size_t, std::size_t>, Rational> entries_;
};

// Rank over Q via fraction-free (Bareiss) elimination.
std::size_t rank(const LinearMap& m);

// Exact basis of the null space; empty iff injective.
std::vector<Vec> kernel_basis(const LinearMap& m);

// Bases of the eigenspaces for the claimed eigenvalue list. Throws
// not_diagonalizable when the direct sum does not fill the space.
std::vector<std::vector<Vec>> eigenspace_split(const LinearMap& m,
                                               const std::vector<Rational>& eigenvalues);

// Adjoint a of m with <a(w), v>_domain = <w, m(v)>_codomain for all w, v,
// where pairing_domain pairs the domain of m and pairing_codomain its
// codomain. For identity pairings this is the transpose.
LinearMap adjoint_wrt_pairing(const LinearMap& m, const LinearMap& pairing_domain,
                              const LinearMap& pairing_codomain);

// One exact solution of A x = b, or nullopt when inconsistent.
std::optional<Vec> solve(const LinearMap& a, const Vec& b);

// Exact inverse; throws not_invertible.
LinearMap inverse(const LinearMap& m);

bool is_zero_vec(const Vec& v);
Vec scaled_vec(const Vec& v, const Rational& c);
Vec add_vec(const Vec& a, const Vec& b);
Vec sub_vec(const Vec& a, const Vec& b);

}  // namespace sl2chow
