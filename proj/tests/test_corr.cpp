#include <doctest.h>

#include "sl2chow/corr.hpp"
#include "sl2chow/expr.hpp"
#include "sl2chow/rng.hpp"

using namespace sl2chow;

namespace {

Correspondence random_even_corr(Rng& rng, const PolarizedContext& ctx, int terms = 6) {
  return Correspondence{rng.even_coh_class(ProductVariety(ctx, 2), terms)};
}

const PolarizedContext kE = PolarizedContext::make(1, {1});
const PolarizedContext kS12 = PolarizedContext::make(2, {1, 2});

}  // namespace

TEST_CASE("diagonal class for g=1, frozen expansion") {
  ProductVariety ee(kE, 2);
  ExtClass expected(ee.algebra());
  expected.add_term(0b0011, 1);   // x1(1) y1(1)
  expected.add_term(0b1100, 1);   // x1(2) y1(2)
  expected.add_term(0b1001, -1);  // x1(1) y1(2)
  expected.add_term(0b0110, 1);   // y1(1) x1(2)
  CHECK(diagonal_class(kE).value == CohClass{ee, expected});
}

TEST_CASE("compose unit laws") {
  for (const auto& ctx : {kE, kS12}) {
    Rng rng(51);
    Correspondence diag = diagonal_class(ctx);
    CHECK(compose(diag, diag) == diag);
    for (int k = 0; k < 5; ++k) {
      Correspondence alpha{rng.coh_class(ProductVariety(ctx, 2), 6)};
      CHECK(compose(diag, alpha) == alpha);
      CHECK(compose(alpha, diag) == alpha);
    }
  }
}

TEST_CASE("compose associativity: exhaustive monomial triples at g=1") {
  ProductVariety aa(kE, 2);
  for (Mask a = 0; a < 16; ++a)
    for (Mask b = 0; b < 16; ++b)
      for (Mask c = 0; c < 16; ++c) {
        Correspondence ca{CohClass{aa, ExtClass::monomial(aa.algebra(), a, 1)}};
        Correspondence cb{CohClass{aa, ExtClass::monomial(aa.algebra(), b, 1)}};
        Correspondence cc{CohClass{aa, ExtClass::monomial(aa.algebra(), c, 1)}};
        CHECK(compose(compose(cc, cb), ca) == compose(cc, compose(cb, ca)));
      }
}

TEST_CASE("compose associativity: randomized at g=2") {
  Rng rng(53);
  for (int k = 0; k < 5; ++k) {
    Correspondence a = random_even_corr(rng, kS12, 5);
    Correspondence b = random_even_corr(rng, kS12, 5);
    Correspondence c = random_even_corr(rng, kS12, 5);
    CHECK(compose(compose(c, b), a) == compose(c, compose(b, a)));
  }
}

TEST_CASE("apply is a representation") {
  for (const auto& ctx : {kE, kS12}) {
    ProductVariety a(ctx, 1);
    Rng rng(57);
    Correspondence diag = diagonal_class(ctx);
    for (int k = 0; k < 5; ++k) {
      CohClass z = rng.coh_class(a);
      CHECK(apply(diag, z) == z);
      Correspondence alpha = random_even_corr(rng, ctx);
      Correspondence beta = random_even_corr(rng, ctx);
      CHECK(apply(compose(beta, alpha), z) == apply(beta, apply(alpha, z)));
      CHECK(apply(alpha + beta, z) == apply(alpha, z) + apply(beta, z));
    }
  }
}

TEST_CASE("graph correspondences") {
  CHECK(graph(kE, 1) == diagonal_class(kE));
  CHECK(transpose_graph(kE, 1) == diagonal_class(kE));

  // Gamma'_n acts by n^*.
  for (const auto& ctx : {kE, kS12}) {
    ProductVariety a(ctx, 1);
    Rng rng(59);
    for (long n : {-1L, 2L, 3L}) {
      for (int k = 0; k < 3; ++k) {
        CohClass z = rng.coh_class(a);
        CHECK(apply(transpose_graph(ctx, n), z) == pullback(mult_map(a, n), z));
      }
    }
  }

  // Graph composition composes the maps: Gamma'_2 o Gamma'_3 = Gamma'_6.
  Correspondence composed = compose(transpose_graph(kE, 2), transpose_graph(kE, 3));
  CHECK(composed == transpose_graph(kE, 6));
  ProductVariety e(kE, 1);
  Rng rng(61);
  for (int k = 0; k < 3; ++k) {
    CohClass z = rng.coh_class(e);
    CHECK(apply(composed, z) == pullback(mult_map(e, 6), z));
  }
}

TEST_CASE("graph composition identities for u = n_A") {
  for (const auto& ctx : {kE, kS12}) {
    ProductVariety a(ctx, 1);
    Rng rng(63);
    for (long n : {-1L, 2L, 3L}) {
      for (int k = 0; k < 3; ++k) {
        Correspondence alpha = random_even_corr(rng, ctx);
        CHECK(compose(graph(ctx, n), alpha) ==
              Correspondence{pushforward(scale_pair(a, 1, n), alpha.value)});
        CHECK(compose(transpose_graph(ctx, n), alpha) ==
              Correspondence{pullback(scale_pair(a, 1, n), alpha.value)});
        CHECK(compose(alpha, graph(ctx, n)) ==
              Correspondence{pullback(scale_pair(a, n, 1), alpha.value)});
        CHECK(compose(alpha, transpose_graph(ctx, n)) ==
              Correspondence{pushforward(scale_pair(a, n, 1), alpha.value)});
      }
    }
  }
}

TEST_CASE("diagonal pushforward is an algebra map") {
  for (const auto& ctx : {kE, kS12}) {
    ProductVariety a(ctx, 1);
    Rng rng(67);
    CHECK(diagonal_push(one_class(a)) == diagonal_class(ctx));
    for (int k = 0; k < 5; ++k) {
      CohClass z = rng.even_coh_class(a);
      CohClass w = rng.even_coh_class(a);
      CHECK(diagonal_push(z * w) == compose(diagonal_push(w), diagonal_push(z)));

      Correspondence alpha = random_even_corr(rng, ctx);
      CHECK(compose(diagonal_push(z), alpha) ==
            Correspondence{alpha.value * pullback(projection(a, 2, {2}), z)});
      CHECK(compose(alpha, diagonal_push(z)) ==
            Correspondence{alpha.value * pullback(projection(a, 2, {1}), z)});
    }
  }
}

TEST_CASE("kunneth idempotents") {
  for (const auto& ctx : {kE, kS12, PolarizedContext::make(3, {1, 1, 2})}) {
    auto pis = kunneth_idempotents(ctx);
    REQUIRE(pis.size() == static_cast<std::size_t>(2 * ctx.g + 1));

    Correspondence sum{zero_class(pis.front().value.variety)};
    for (const auto& pi : pis) sum = sum + pi;
    CHECK(sum == diagonal_class(ctx));

    if (ctx.g <= 2) {
      for (std::size_t i = 0; i < pis.size(); ++i) {
        for (std::size_t j = 0; j < pis.size(); ++j) {
          Correspondence prod = compose(pis[i], pis[j]);
          if (i == j)
            CHECK(prod == pis[i]);
          else
            CHECK(prod.value.is_zero());
        }
      }
    }

    ProductVariety a(ctx, 1);
    for (long k : {2L, 3L}) {
      for (std::size_t i = 0; i < pis.size(); ++i) {
        CHECK(pullback(scale_pair(a, 1, k), pis[i].value) ==
              pis[i].value.scaled(pow_rat(rat(k), static_cast<long>(i))));
      }
    }
  }

  // g=1: (1,2)^* pi_1 = 2 pi_1 is the middle idempotent.
  auto pis = kunneth_idempotents(kE);
  ProductVariety e(kE, 1);
  CHECK(pullback(scale_pair(e, 1, 2), pis[1].value) == pis[1].value.scaled(2));
}

TEST_CASE("invert") {
  Correspondence diag = diagonal_class(kE);
  CHECK(invert(diag) == diag);

  // Delta_* e^theta inverts to Delta_* e^{-theta}.
  ProductVariety e(kE, 1);
  Correspondence u = diagonal_push(exp_class(theta(e)));
  CHECK(invert(u) == diagonal_push(exp_class(-theta(e))));

  ProductVariety a(kS12, 1);
  Correspondence u2 = diagonal_push(exp_class(theta(a)));
  CHECK(compose(invert(u2), u2) == diagonal_class(kS12));

  // invert(d^{-1} e^P) = (-1)^g Gamma'_{-1} o d^{-1} e^P.
  ProductVariety ee(kE, 2);
  Correspondence w = Correspondence::on(exp_class(poincare_class(ee)));
  Correspondence expected =
      compose(transpose_graph(kE, -1), w).scaled(pow_rat(-1, kE.g));
  CHECK(invert(w) == expected);

  // A nilpotent correspondence has no inverse.
  Correspondence nilpotent{CohClass{ee, ExtClass::monomial(ee.algebra(), 0b1111, 1)}};
  CHECK_THROWS_AS(invert(nilpotent), Error);

  CHECK_THROWS_AS(invert(diagonal_class(PolarizedContext::make(3, {1, 1, 1}))), Error);
}

TEST_CASE("compose guard beyond g=3") {
  PolarizedContext big = PolarizedContext::make(4, {1, 1, 1, 1});
  Correspondence diag = diagonal_class(big);
  CHECK_THROWS_AS(compose(diag, diag), Error);
}

TEST_CASE("context and variety mismatches") {
  CHECK_THROWS_AS(compose(diagonal_class(kE), diagonal_class(kS12)), Error);
  ProductVariety a2(kS12, 1);
  CHECK_THROWS_AS(apply(diagonal_class(kE), one_class(a2)), Error);
  ProductVariety ee(kE, 2);
  CHECK_THROWS_AS(apply(diagonal_class(kE), one_class(ee)), Error);
  CHECK_THROWS_AS(diagonal_push(one_class(ee)), Error);
  ProductVariety e(kE, 1);
  CHECK_THROWS_AS(pontryagin(one_class(e), one_class(a2)), Error);
  CHECK_THROWS_AS(Correspondence::on(one_class(e)), Error);
}

TEST_CASE("transpose graphs twist the Poincare exponential: t^{2g} e^P") {
  for (const auto& ctx : {kE, kS12}) {
    ProductVariety aa(ctx, 2);
    Correspondence ep = Correspondence::on(exp_class(poincare_class(aa)));
    for (long t : {2L, 3L}) {
      Correspondence gt = transpose_graph(ctx, t);
      CHECK(compose(gt, compose(ep, gt)) == ep.scaled(pow_rat(rat(t), 2 * ctx.g)));
    }
  }
}

TEST_CASE("isogeny transfer: E^2 with pi = diag(1,2)") {
  PolarizedContext a0 = PolarizedContext::make(2, {1, 1});
  Isogeny pi = Isogeny::make(kS12, a0, {{1, 0}, {0, 2}});
  CHECK(pi.degree() == 2);

  // Unit goes to unit.
  CHECK(isogeny_transfer(pi, diagonal_class(a0)) == diagonal_class(kS12));

  // (pi,pi)^* Delta0_* e^{theta0} = 2 Delta_* e^theta.
  ProductVariety av0(a0, 1);
  ProductVariety av(kS12, 1);
  Correspondence lhs = isogeny_pullback_pair(pi, diagonal_push(exp_class(theta(av0))));
  CHECK(lhs == diagonal_push(exp_class(theta(av))).scaled(2));

  // (pi,pi)^* e^{P0} = e^{P}.
  ProductVariety aa0(a0, 2);
  ProductVariety aa(kS12, 2);
  CHECK(isogeny_pullback_pair(pi, Correspondence::on(exp_class(poincare_class(aa0)))) ==
        Correspondence::on(exp_class(poincare_class(aa))));

  // Transfer of a composition is the composition of transfers.
  Rng rng(71);
  for (int k = 0; k < 3; ++k) {
    Correspondence alpha = random_even_corr(rng, a0, 4);
    Correspondence beta = random_even_corr(rng, a0, 4);
    CHECK(isogeny_transfer(pi, compose(beta, alpha)) ==
          compose(isogeny_transfer(pi, beta), isogeny_transfer(pi, alpha)));
  }
}

TEST_CASE("isogeny validation") {
  PolarizedContext a0 = PolarizedContext::make(2, {1, 1});
  CHECK_THROWS_AS(Isogeny::make(kS12, a0, {{1, 0}, {0, 0}}), Error);  // singular
  CHECK_THROWS_AS(Isogeny::make(kS12, a0, {{2, 0}, {0, 1}}), Error);  // wrong polarization
  CHECK_THROWS_AS(Isogeny::make(kS12, kE, {{1}}), Error);             // dimension mismatch
}
