#include <doctest.h>

#include <algorithm>
#include <map>

#include "sl2chow/action.hpp"
#include "sl2chow/expr.hpp"
#include "sl2chow/lefschetz.hpp"
#include "sl2chow/rng.hpp"

using namespace sl2chow;

namespace {

const PolarizedContext kE = PolarizedContext::make(1, {1});
const PolarizedContext kPP2 = PolarizedContext::make(2, {1, 1});

std::vector<FreeGenerator> plain(std::initializer_list<long> lambdas) {
  std::vector<FreeGenerator> gens;
  int i = 0;
  for (long l : lambdas)
    gens.push_back(FreeGenerator{"z" + std::to_string(i++), l, std::nullopt, std::nullopt});
  return gens;
}

}  // namespace

TEST_CASE("is_primitive on the model") {
  ProductVariety a(kPP2, 1);
  CHECK(is_primitive(one_class(a)));
  // theta = X 1 within the block of 1, so Y theta != 0 for g >= 2.
  CHECK(!is_primitive(theta(a)));

  ChowAction action = build_action(kPP2);
  CHECK(is_primitive(action.triple, action.to_vector(one_class(a))));
  CHECK(!is_primitive(action.triple, action.to_vector(theta(a))));
}

TEST_CASE("free module generators are primitive by construction") {
  auto [mod, t] = build_free_module(3, plain({3, 1}));
  Vec z(t.dim, Rational(0));
  z[mod.offsets[0]] = 1;
  CHECK(is_primitive(t, z));
  Vec xz(t.dim, Rational(0));
  xz[mod.offsets[0] + 1] = 1;
  CHECK(!is_primitive(t, xz));
}

TEST_CASE("primitive decomposition on the model") {
  ProductVariety a(kPP2, 1);

  // A primitive class decomposes as itself.
  auto parts1 = primitive_decomposition(one_class(a));
  REQUIRE(parts1.size() == 1);
  CHECK(parts1[0].theta_power == 0);
  CHECK(parts1[0].component == one_class(a));

  // theta = theta . 1: one component from q = 0.
  auto parts2 = primitive_decomposition(theta(a));
  REQUIRE(parts2.size() == 1);
  CHECK(parts2[0].theta_power == 1);
  CHECK(parts2[0].q_index == 0);
  CHECK(parts2[0].component == theta(a));
  CHECK(parts2[0].primitive == one_class(a));

  // Random degree-2 class: components recombine exactly.
  Rng rng(117);
  for (int k = 0; k < 10; ++k) {
    CohClass z = rng.homogeneous_class(a, 2);
    auto parts = primitive_decomposition(z);
    CohClass sum = zero_class(a);
    for (const auto& part : parts) {
      CHECK(is_primitive(part.primitive));
      CohClass reb = part.primitive;
      for (long i = 0; i < part.theta_power; ++i) reb = reb * theta(a);
      CHECK(reb == part.component);
      sum = sum + part.component;
    }
    CHECK(sum == z);
  }
}

TEST_CASE("reconstruction holds for 50 random homogeneous classes per model") {
  for (auto [g, type] : std::vector<std::pair<int, std::vector<long>>>{
           {1, {1}}, {2, {1, 2}}, {3, {1, 1, 2}}}) {
    ChowAction action = build_action(PolarizedContext::make(g, type));
    Rng rng(static_cast<std::uint64_t>(1170 + g));
    for (int k = 0; k < 50; ++k) {
      int degree = static_cast<int>(rng.int_in(0, 2 * g));
      CohClass z = rng.homogeneous_class(action.variety, degree);
      Vec sum(action.triple.dim, Rational(0));
      for (const auto& part : primitive_decomposition(action.triple, action.to_vector(z))) {
        CHECK(is_primitive(action.triple, part.primitive));
        sum = add_vec(sum, part.component);
      }
      CHECK(action.from_vector(sum) == z);
    }
  }
}

TEST_CASE("primitive decomposition edge cases") {
  ProductVariety a(kPP2, 1);
  // Degree-2 classes see q = 0 and q = 1 components generically.
  CohClass mixed = theta(a) + CohClass{a, ExtClass::monomial(a.algebra(),
                                                             (Mask(1) << 0) | (Mask(1) << 2), 1)};
  auto parts3 = primitive_decomposition(mixed);
  CHECK(parts3.size() == 2);

  CHECK_THROWS_AS(primitive_decomposition(one_class(a) + theta(a)), Error);
  CHECK(primitive_decomposition(zero_class(a)).empty());
}

TEST_CASE("fourier primitive identity on free modules") {
  auto [mod, t] = build_free_module(3, plain({3}));
  (void)mod;
  // q=1, lambda=3: F(Xz/1!) = (-1)^2 X^2 z / 2! = X^2 z / 2.
  LinearMap w = act_matrix(GroupElement::w(), t);
  Vec xz(t.dim, Rational(0));
  xz[1] = 1;
  Vec image = w.apply(xz);
  Vec expected(t.dim, Rational(0));
  expected[2] = rat(1, 2);
  CHECK(image == expected);

  for (long q = 0; q <= 3; ++q) CHECK(fourier_primitive_check(t, q).all_pass());

  // q = lambda: F(X^lambda z / lambda!) = z.
  Vec top(t.dim, Rational(0));
  top[3] = Rational(1) / factorial(3);
  Vec back = w.apply(top);
  Vec z0(t.dim, Rational(0));
  z0[0] = 1;
  CHECK(back == z0);
}

TEST_CASE("fourier primitive identity on cohomology models") {
  for (auto [g, type] : std::vector<std::pair<int, std::vector<long>>>{
           {1, {1}}, {2, {1, 2}}, {3, {1, 1, 2}}}) {
    ChowAction action = build_action(PolarizedContext::make(g, type));
    for (long q = 0; q <= g; ++q) {
      LefschetzReport report = fourier_primitive_check(action.triple, q);
      CHECK(report.all_pass());
    }
  }
  // g=1: F(1) = -theta is the q=0 instance on the block of 1.
  ProductVariety e(kE, 1);
  CHECK(fourier(one_class(e)) == -theta(e));
}

TEST_CASE("fourier primitive check on random free modules with lambda <= 10") {
  Rng rng(119);
  for (int trial = 0; trial < 10; ++trial) {
    std::vector<FreeGenerator> gens;
    long maxl = 0;
    int count = static_cast<int>(rng.int_in(1, 5));
    for (int i = 0; i < count; ++i) {
      long l = rng.int_in(0, 10);
      maxl = std::max(maxl, l);
      gens.push_back(FreeGenerator{"z" + std::to_string(i), l, std::nullopt, std::nullopt});
    }
    auto [mod, t] = build_free_module(3, gens);
    (void)mod;
    for (long q = 0; q <= maxl; ++q) CHECK(fourier_primitive_check(t, q).all_pass());
  }
}

TEST_CASE("hard Lefschetz on the model: bijective wall") {
  for (int g = 1; g <= 4; ++g) {
    std::vector<long> type(static_cast<std::size_t>(g), 1);
    if (g >= 2) type[1] = 2;
    PolarizedContext ctx = PolarizedContext::make(g, type);
    for (long i = 0; i <= g; ++i) {
      HardLefschetzResult res = hard_lefschetz_check(ctx, i, g, i);
      CHECK(res.matches);
      CHECK(res.injective);
      CHECK(res.surjective);
      CHECK(res.dim_domain == res.dim_target);
    }
  }
}

TEST_CASE("hard Lefschetz predicate sweep on the model") {
  for (auto [g, type] :
       std::vector<std::pair<int, std::vector<long>>>{{1, {1}}, {2, {1, 2}}}) {
    PolarizedContext ctx = PolarizedContext::make(g, type);
    for (long p = 0; p <= g + 1; ++p)
      for (long q = p; q <= g + 2; ++q)
        for (long s = -2; s <= 2; ++s) {
          HardLefschetzResult res = hard_lefschetz_check(ctx, p, q, s);
          CHECK(res.matches);
        }
  }
}

TEST_CASE("hard Lefschetz on free modules: all predicate regions") {
  auto [mod, t] = build_free_module(3, plain({0, 2, 5}));
  bool seen_strict_inj = false, seen_strict_surj = false, seen_wall = false;
  for (long p = 0; p <= 4; ++p)
    for (long q = p; q <= 5; ++q)
      for (long s = -2; s <= 4; ++s) {
        HardLefschetzResult res = hard_lefschetz_check(mod, t, p, q, s);
        CHECK(res.matches);
        if (res.dim_domain > 0 && res.dim_target > 0) {
          if (p + q < 3 + s) seen_strict_inj = true;
          if (p + q > 3 + s) seen_strict_surj = true;
          if (p + q == 3 + s) seen_wall = true;
        }
      }
  CHECK(seen_strict_inj);
  CHECK(seen_strict_surj);
  CHECK(seen_wall);

  // p = q: the identity map, injective and surjective.
  HardLefschetzResult same = hard_lefschetz_check(mod, t, 1, 1, 1);
  CHECK(same.injective);
  CHECK(same.surjective);
  CHECK(same.matches);
}

TEST_CASE("negative s annihilation") {
  // g=3, p=1, s=-1 (lambda = 0): X z = 0.
  CHECK(negative_s_annihilation_check(3, 1, -1).all_pass());
  // g=5, p=2, s=-1 (lambda = 0): X z = 0.
  CHECK(negative_s_annihilation_check(5, 2, -1).all_pass());
  // Control: g=4, p=1, s=0 (lambda = 2): X^2 z != 0.
  CHECK(negative_s_annihilation_check(4, 1, 0).all_pass());
  CHECK_THROWS_AS(negative_s_annihilation_check(2, 2, -1), Error);
}

TEST_CASE("filtration Lefschetz") {
  // All generators inside the filter: injective.
  auto [mod1, t1] = build_free_module(
      3, {FreeGenerator{"a", 3, Rational(0), 0}, FreeGenerator{"b", 2, Rational(1), 1}});
  CHECK(filtration_lefschetz_check(mod1, t1, 0, 2).all_pass());
  CHECK(filtration_lefschetz_check(mod1, t1, 1, 2).all_pass());

  // A generator with s below the cutoff is excluded, and the filtered part
  // stays injective: p+q-g = 1 excludes the s=0 generator whose X^{q-p}
  // would vanish on CH^p.
  auto [mod2, t2] = build_free_module(
      2, {FreeGenerator{"low", 0, Rational(1), 0}, FreeGenerator{"high", 3, Rational(0), 1}});
  CHECK(filtration_lefschetz_check(mod2, t2, 1, 2).all_pass());

  // p = q is trivially injective.
  CHECK(filtration_lefschetz_check(mod2, t2, 1, 1).all_pass());

  auto [mod3, t3] = build_free_module(2, plain({2}));
  CHECK_THROWS_AS(filtration_lefschetz_check(mod3, t3, 0, 1), Error);
}

TEST_CASE("primitive dimension accounting") {
  auto [mod, t] = build_free_module(4, plain({4, 2, 2, 0}));
  (void)mod;
  auto spaces = primitive_subspace(t);
  std::map<long, std::size_t> by_weight;
  for (const auto& ws : spaces) by_weight[ws.weight] = ws.basis.size();
  CHECK(by_weight[-4] == 1);
  CHECK(by_weight[-2] == 2);
  CHECK(by_weight[0] == 1);
  CHECK(decompose(t).size() == 4);
}
