#include <doctest.h>

#include "sl2chow/extalg.hpp"
#include "sl2chow/rng.hpp"

using namespace sl2chow;

namespace {

// Context with order x1 < y1 < x2 < y2, the g=1 two-factor layout.
ContextPtr xy2() { return make_context({"x1", "y1", "x2", "y2"}); }

ExtClass gen(const ContextPtr& ctx, int i) { return ExtClass::monomial(ctx, Mask(1) << i, 1); }

ExtClass random_class(Rng& rng, const ContextPtr& ctx, int terms = 4) {
  ExtClass z(ctx);
  for (int i = 0; i < terms; ++i) z.add_term(rng.mask(ctx->size()), rng.rational());
  return z;
}

ExtClass random_homogeneous(Rng& rng, const ContextPtr& ctx, int degree) {
  ExtClass z(ctx);
  for (int i = 0; i < 3; ++i) z.add_term(rng.mask_of_degree(ctx->size(), degree), rng.rational());
  return z;
}

}  // namespace

TEST_CASE("merge sign inversion parity") {
  CHECK(merge_sign(0b0001, 0b0010) == 1);   // x1 ^ y1
  CHECK(merge_sign(0b0010, 0b0001) == -1);  // y1 ^ x1
  CHECK(merge_sign(0b0001, 0b0001) == 0);   // repeated generator
  CHECK(merge_sign(0b0101, 0b1010) == -1);  // (x1 x2) ^ (y1 y2): one inversion (x2 past y1)
}

TEST_CASE("wedge: repeated generator and anticommutativity") {
  auto ctx = xy2();
  ExtClass x1 = gen(ctx, 0), y1 = gen(ctx, 1);
  CHECK(wedge(x1, x1).is_zero());
  CHECK(wedge(x1, y1) == ExtClass::monomial(ctx, 0b0011, 1));
  CHECK(wedge(y1, x1) == ExtClass::monomial(ctx, 0b0011, -1));
}

TEST_CASE("wedge: square of x1 y2 + x2 y1") {
  auto ctx = xy2();
  // x1^y2 has mask {0,3}; x2^y1 = -(y1^x2) has mask {1,2} with sign -1.
  ExtClass a = wedge(gen(ctx, 0), gen(ctx, 3)) + wedge(gen(ctx, 2), gen(ctx, 1));
  ExtClass sq = wedge(a, a);
  CHECK(sq == ExtClass::monomial(ctx, 0b1111, -2));
}

TEST_CASE("wedge context mismatch") {
  auto a = make_context({"x1", "y1"});
  CHECK_THROWS_AS(wedge(gen(a, 0), gen(xy2(), 0)), Error);
}

TEST_CASE("graded commutativity and associativity on random classes") {
  Rng rng(21);
  auto ctx = xy2();
  for (int trial = 0; trial < 25; ++trial) {
    int da = static_cast<int>(rng.int_in(0, 3));
    int db = static_cast<int>(rng.int_in(0, 3));
    ExtClass a = random_homogeneous(rng, ctx, da);
    ExtClass b = random_homogeneous(rng, ctx, db);
    ExtClass ab = wedge(a, b);
    ExtClass ba = wedge(b, a);
    CHECK(ab == ((da * db) % 2 == 0 ? ba : -ba));

    ExtClass c = random_class(rng, ctx);
    CHECK(wedge(wedge(a, c), b) == wedge(a, wedge(c, b)));
  }
}

TEST_CASE("algebra_map: identity, scaling, addition map") {
  auto ctx = xy2();
  std::vector<ExtClass> identity{gen(ctx, 0), gen(ctx, 1), gen(ctx, 2), gen(ctx, 3)};
  Rng rng(3);
  ExtClass z = random_class(rng, ctx);
  CHECK(algebra_map(ctx, ctx, identity, z) == z);

  // Scaling every generator by n multiplies a degree-i monomial by n^i.
  long n = 3;
  std::vector<ExtClass> scaled;
  for (int i = 0; i < 4; ++i) scaled.push_back(gen(ctx, i).scaled(rat(n)));
  ExtClass mono = ExtClass::monomial(ctx, 0b0111, 1);  // degree 3
  CHECK(algebra_map(ctx, ctx, scaled, mono) == mono.scaled(rat(27)));

  // g=1 addition map on x ^ y: x -> x1+x2, y -> y1+y2.
  auto target = xy2();
  auto src = make_context({"x", "y"});
  std::vector<ExtClass> images{gen(target, 0) + gen(target, 2), gen(target, 1) + gen(target, 3)};
  ExtClass xy = wedge(gen(src, 0), gen(src, 1));
  ExtClass expanded = algebra_map(src, target, images, xy);
  // (x1+x2)^(y1+y2) = x1y1 + x1y2 - y1x2 + x2y2
  ExtClass expected = ExtClass::monomial(target, 0b0011, 1);
  expected.add_term(0b1001, 1);
  expected.add_term(0b0110, -1);
  expected.add_term(0b1100, 1);
  CHECK(expanded == expected);
}

TEST_CASE("algebra_map errors") {
  auto ctx = xy2();
  auto src = make_context({"x", "y"});
  CHECK_THROWS_AS(algebra_map(src, ctx, {gen(ctx, 0)}, ExtClass::scalar(src, 1)), Error);
  ExtClass not_linear = gen(ctx, 0) + ExtClass::scalar(ctx, 1);
  CHECK_THROWS_AS(algebra_map(src, ctx, {not_linear, gen(ctx, 1)}, ExtClass::scalar(src, 1)),
                  Error);
}

TEST_CASE("algebra_map is multiplicative on random classes") {
  Rng rng(17);
  auto src = xy2();
  auto tgt = make_context({"u1", "v1", "u2", "v2"});
  // Images: a random degree-1 class per generator.
  std::vector<ExtClass> images;
  for (int i = 0; i < 4; ++i) {
    ExtClass img(tgt);
    for (int j = 0; j < 4; ++j) img.add_term(Mask(1) << j, rng.rational(3, 2));
    images.push_back(img);
  }
  for (int trial = 0; trial < 20; ++trial) {
    ExtClass a = random_class(rng, src);
    ExtClass b = random_class(rng, src);
    CHECK(algebra_map(src, tgt, images, wedge(a, b)) ==
          wedge(algebra_map(src, tgt, images, a), algebra_map(src, tgt, images, b)));
  }
}

TEST_CASE("integral picks the orientation coefficient") {
  auto ctx = xy2();
  Mask orientation = ctx->full_mask();
  CHECK(integral(ExtClass::monomial(ctx, orientation, 1), orientation) == 1);
  CHECK(integral(ExtClass::scalar(ctx, 1), orientation) == 0);

  // g=2 type (1,2): integral(theta^2 / 2) = 2 over x1<y1<x2<y2.
  ExtClass theta2 = wedge(gen(ctx, 0), gen(ctx, 1)) + wedge(gen(ctx, 2), gen(ctx, 3)).scaled(2);
  ExtClass sq = wedge(theta2, theta2).scaled(rat(1, 2));
  CHECK(integral(sq, orientation) == 2);
}

TEST_CASE("exp_even basics") {
  auto ctx = xy2();
  CHECK(exp_even(ExtClass(ctx)) == ExtClass::scalar(ctx, 1));

  // g=1 on two generators: exp(theta) = 1 + x^y.
  auto small = make_context({"x", "y"});
  ExtClass th = wedge(gen(small, 0), gen(small, 1));
  CHECK(exp_even(th) == ExtClass::scalar(small, 1) + th);

  // exp(P) = 1 + P - x1y1x2y2 for P = -(x1y2 + x2y1).
  ExtClass p = -(wedge(gen(ctx, 0), gen(ctx, 3)) + wedge(gen(ctx, 2), gen(ctx, 1)));
  ExtClass expected = ExtClass::scalar(ctx, 1) + p + ExtClass::monomial(ctx, 0b1111, -1);
  CHECK(exp_even(p) == expected);
}

TEST_CASE("exp_even rejects odd and constant terms") {
  auto ctx = xy2();
  CHECK_THROWS_AS(exp_even(gen(ctx, 0)), Error);
  CHECK_THROWS_AS(exp_even(ExtClass::scalar(ctx, 1)), Error);
}

TEST_CASE("exp_even is additive on commuting even classes") {
  Rng rng(29);
  auto ctx = make_context({"a", "b", "c", "d", "e", "f"});
  for (int trial = 0; trial < 15; ++trial) {
    ExtClass a = random_homogeneous(rng, ctx, 2);
    ExtClass b = random_homogeneous(rng, ctx, 2);
    CHECK(wedge(exp_even(a), exp_even(b)) == exp_even(a + b));
  }
}

TEST_CASE("graded part extraction is lossless") {
  Rng rng(31);
  auto ctx = xy2();
  for (int trial = 0; trial < 10; ++trial) {
    ExtClass z = random_class(rng, ctx, 6);
    ExtClass sum(ctx);
    for (const auto& [d, part] : z.graded_parts()) {
      int check = -1;
      CHECK(part.is_homogeneous(&check));
      CHECK(check == d);
      sum = sum + part;
    }
    CHECK(sum == z);
  }
}
