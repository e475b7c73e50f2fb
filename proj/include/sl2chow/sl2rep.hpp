#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "sl2chow/exactla.hpp"

namespace sl2chow {

// Operators (X, Y, H) on a finite-dimensional space over Q, expected to
// satisfy [H,X] = 2X, [H,Y] = -2Y, [X,Y] = H with H diagonalizable over Z
// and X, Y nilpotent.
struct Sl2Triple {
  std::size_t dim = 0;
  LinearMap X{0, 0};
  LinearMap Y{0, 0};
  LinearMap H{0, 0};
  std::vector<std::string> labels;  // optional basis labels
};

struct BracketReport {
  std::vector<std::string> violations;
  bool ok() const { return violations.empty(); }
};

BracketReport check_bracket(const Sl2Triple& t);

struct WeightSpace {
  long weight = 0;         // H-eigenvalue, equal to -lambda on primitives
  std::vector<Vec> basis;
};

// Basis of ker Y split by H-eigenvalue. Throws bracket_violation when the
// triple fails its bracket relations.
std::vector<WeightSpace> primitive_subspace(const Sl2Triple& t);

struct IrreducibleBlock {
  long lambda = 0;
  Vec lowest;
  std::vector<Vec> basis;  // lowest, X lowest, .., X^lambda lowest
};

// Direct-sum decomposition into irreducibles with lowest-weight bases.
std::vector<IrreducibleBlock> decompose(const Sl2Triple& t);

// Generator of a free module: one irreducible of highest weight lambda,
// optionally annotated with a bidegree (p, s) satisfying lambda = g+s-2p.
struct FreeGenerator {
  std::string label;
  long lambda = 0;
  std::optional<Rational> p;
  std::optional<long> s;
};

struct FreeBeauvilleModule {
  long g = 0;
  std::vector<FreeGenerator> generators;
  std::vector<std::size_t> offsets;  // basis offset per generator
  std::size_t dim = 0;
};

// Basis per generator: z, Xz, .., X^lambda z with H(X^q z) = (2q-lambda) X^q z
// and Y X^q z = q(lambda-q+1) X^{q-1} z.
std::pair<FreeBeauvilleModule, Sl2Triple> build_free_module(long g,
                                                            std::vector<FreeGenerator> generators);

// Element of SL2(Q): matrix (a b; c d) with determinant exactly 1.
struct GroupElement {
  Rational a, b, c, d;

  static GroupElement make(Rational a, Rational b, Rational c, Rational d);
  static GroupElement identity();
  static GroupElement upper(const Rational& a);  // (1 a; 0 1)
  static GroupElement lower(const Rational& a);  // (1 0; a 1)
  static GroupElement torus(const Rational& t);  // (t 0; 0 1/t)
  static GroupElement w();                       // (0 -1; 1 0)
  GroupElement inverse() const;
  friend GroupElement operator*(const GroupElement& m, const GroupElement& n);
  bool operator==(const GroupElement& other) const;
};

struct ElementaryFactor {
  bool lower = false;  // false: u(a) = (1 a; 0 1); true: v(a) = (1 0; a 1)
  Rational param;
};

// Writes M as a product of at most 4 elementary factors, deterministically.
std::vector<ElementaryFactor> factor_elementary(const GroupElement& m);
GroupElement factor_product(const std::vector<ElementaryFactor>& word);

// exp(cN) for a nilpotent operator N, by exact truncated series.
LinearMap exp_nilpotent(const LinearMap& n, const Rational& c);

// Group action through the elementary factorization: each u(a) acts as
// exp(aX), each v(a) as exp(aY).
Vec act(const GroupElement& m, const Sl2Triple& t, const Vec& v);
LinearMap act_matrix(const GroupElement& m, const Sl2Triple& t);

struct DemazureReport {
  std::vector<std::pair<std::string, bool>> conditions;
  bool ok() const {
    for (const auto& [name, pass] : conditions)
      if (!pass) return false;
    return true;
  }
};

// Verifies (i) h b(t) h^{-1} = b(t^{-1}) for t in {2, 3, -1} and
// (ii) h^2 = (b(u) h)^3 = b(-I) on a carrier given by operator-valued maps.
DemazureReport demazure_check(const std::function<LinearMap(const Rational&)>& beta_u,
                              const std::function<LinearMap(const Rational&)>& beta_t,
                              const LinearMap& h);

}  // namespace sl2chow
