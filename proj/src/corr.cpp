#include "sl2chow/corr.hpp"

#include <bit>

namespace sl2chow {

namespace {

void guard_g(const PolarizedContext& ctx, int max_g, const char* what) {
  if (ctx.g > max_g)
    fail(Errc::dimension_guard,
         std::string(what) + " supports g <= " + std::to_string(max_g));
}

ProductVariety single(const PolarizedContext& ctx) { return ProductVariety(ctx, 1); }

}  // namespace

Correspondence Correspondence::on(const CohClass& z) {
  if (z.variety.factors() != 2)
    fail(Errc::not_two_factors, "a correspondence is a class on A x A");
  return Correspondence{z};
}

Correspondence operator+(const Correspondence& a, const Correspondence& b) {
  return {a.value + b.value};
}

Correspondence operator-(const Correspondence& a, const Correspondence& b) {
  return {a.value - b.value};
}

Correspondence diagonal_class(const PolarizedContext& ctx) {
  ProductVariety a = single(ctx);
  return Correspondence::on(pushforward(diagonal_map(a), one_class(a)));
}

Correspondence compose(const Correspondence& beta, const Correspondence& alpha) {
  if (!(alpha.context() == beta.context()))
    fail(Errc::context_mismatch, "composition across contexts");
  guard_g(alpha.context(), 3, "correspondence composition");
  ProductVariety a = single(alpha.context());
  CohClass a12 = pullback(projection(a, 3, {1, 2}), alpha.value);
  CohClass b23 = pullback(projection(a, 3, {2, 3}), beta.value);
  return Correspondence::on(pushforward(projection(a, 3, {1, 3}), a12 * b23));
}

CohClass apply(const Correspondence& alpha, const CohClass& z) {
  if (z.variety.factors() != 1) fail(Errc::variety_mismatch, "apply expects a class on A");
  if (!(alpha.context() == z.variety.context()))
    fail(Errc::variety_mismatch, "apply across contexts");
  const ProductVariety& a = z.variety;
  CohClass pz = pullback(projection(a, 2, {1}), z);
  return pushforward(projection(a, 2, {2}), alpha.value * pz);
}

Correspondence diagonal_push(const CohClass& z) {
  if (z.variety.factors() != 1)
    fail(Errc::variety_mismatch, "diagonal pushforward expects a class on A");
  return Correspondence::on(pushforward(diagonal_map(z.variety), z));
}

Correspondence graph(const PolarizedContext& ctx, long n) {
  ProductVariety a = single(ctx);
  return Correspondence::on(pushforward(pair_embedding(a, 1, n), one_class(a)));
}

Correspondence transpose_graph(const PolarizedContext& ctx, long n) {
  ProductVariety a = single(ctx);
  return Correspondence::on(pushforward(pair_embedding(a, n, 1), one_class(a)));
}

std::vector<Correspondence> kunneth_idempotents(const PolarizedContext& ctx) {
  Correspondence diag = diagonal_class(ctx);
  const ProductVariety& v = diag.value.variety;
  int g = ctx.g;
  Mask factor2 = 0;
  for (int i = 1; i <= g; ++i) {
    factor2 |= Mask(1) << v.generator_index(2, 'x', i);
    factor2 |= Mask(1) << v.generator_index(2, 'y', i);
  }
  std::vector<Correspondence> parts;
  for (int i = 0; i <= 2 * g; ++i) parts.push_back(Correspondence{zero_class(v)});
  for (const auto& [m, c] : diag.value.value.terms()) {
    int deg2 = std::popcount(m & factor2);
    parts[static_cast<std::size_t>(deg2)].value.value.add_term(m, c);
  }
  return parts;
}

Correspondence invert(const Correspondence& alpha) {
  guard_g(alpha.context(), 2, "correspondence inversion");
  const ProductVariety& v = alpha.value.variety;
  std::size_t n = v.generator_count();
  std::size_t dim = std::size_t(1) << n;

  // Matrix of beta -> beta o alpha over the monomial basis of A x A.
  LinearMap m(dim, dim);
  for (std::size_t j = 0; j < dim; ++j) {
    Correspondence basis{CohClass{v, ExtClass::monomial(v.algebra(), Mask(j), 1)}};
    Correspondence image = compose(basis, alpha);
    for (const auto& [mask, c] : image.value.value.terms()) m.set(static_cast<std::size_t>(mask), j, c);
  }
  Correspondence diag = diagonal_class(alpha.context());
  Vec rhs(dim, Rational(0));
  for (const auto& [mask, c] : diag.value.value.terms()) rhs[static_cast<std::size_t>(mask)] = c;
  auto x = solve(m, rhs);
  if (!x) fail(Errc::not_invertible, "correspondence has no inverse");
  ExtClass beta(v.algebra());
  for (std::size_t i = 0; i < dim; ++i) beta.add_term(Mask(i), (*x)[i]);
  Correspondence result{CohClass{v, beta}};
  if (!(compose(alpha, result) == diag))
    fail(Errc::not_invertible, "one-sided inverse only");
  return result;
}

Isogeny Isogeny::make(PolarizedContext source, PolarizedContext target,
                      std::vector<std::vector<long>> matrix) {
  if (source.g != target.g) fail(Errc::not_isogeny, "isogeny requires equal dimensions");
  std::size_t g = static_cast<std::size_t>(source.g);
  if (matrix.size() != g) fail(Errc::bad_argument, "isogeny matrix must be g x g");
  for (const auto& row : matrix)
    if (row.size() != g) fail(Errc::bad_argument, "isogeny matrix must be g x g");
  Isogeny pi{std::move(source), std::move(target), std::move(matrix)};
  if (pi.degree() == 0) fail(Errc::not_isogeny, "isogeny matrix is singular");

  // theta = pi^* theta0 must hold for the chosen types.
  ProductVariety a = ProductVariety(pi.source, 1);
  ProductVariety a0 = ProductVariety(pi.target, 1);
  CohClass pulled = isogeny_pullback(pi, theta(a0));
  if (!(pulled == theta(a)))
    fail(Errc::polarization_mismatch, "pi^* theta0 differs from theta");
  return pi;
}

Rational Isogeny::degree() const {
  // det of the action on the y-block (the x-block acts by the identity).
  std::size_t g = matrix.size();
  LinearMap m(g, g);
  for (std::size_t i = 0; i < g; ++i)
    for (std::size_t j = 0; j < g; ++j) m.set(i, j, Rational(matrix[i][j]));
  if (rank(m) < g) return Rational(0);
  std::function<Rational(std::vector<std::vector<Rational>>)> det =
      [&](std::vector<std::vector<Rational>> a) -> Rational {
    std::size_t n = a.size();
    Rational result(1);
    for (std::size_t col = 0; col < n; ++col) {
      std::size_t sel = col;
      while (sel < n && a[sel][col] == 0) ++sel;
      if (sel == n) return Rational(0);
      if (sel != col) {
        std::swap(a[sel], a[col]);
        result = -result;
      }
      result *= a[col][col];
      for (std::size_t i = col + 1; i < n; ++i) {
        if (a[i][col] == 0) continue;
        Rational f = a[i][col] / a[col][col];
        for (std::size_t j = col; j < n; ++j) a[i][j] -= f * a[col][j];
      }
    }
    return result;
  };
  std::vector<std::vector<Rational>> dense(g, std::vector<Rational>(g, Rational(0)));
  for (std::size_t i = 0; i < g; ++i)
    for (std::size_t j = 0; j < g; ++j) dense[i][j] = Rational(matrix[i][j]);
  Rational d = det(dense);
  d.canonicalize();
  return d;
}

namespace {

// Images of the generators of A0^m under (pi,..,pi)^*, factor by factor.
std::vector<ExtClass> isogeny_images(const Isogeny& pi, const ProductVariety& src,
                                     const ProductVariety& tgt) {
  int g = pi.source.g;
  std::vector<ExtClass> images;
  images.reserve(tgt.generator_count());
  for (int k = 1; k <= tgt.factors(); ++k) {
    for (int i = 1; i <= g; ++i) {
      images.push_back(src.generator(k, 'x', i));
      ExtClass y(src.algebra());
      for (int j = 1; j <= g; ++j) {
        long c = pi.matrix[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)];
        if (c != 0) y.add_term(Mask(1) << src.generator_index(k, 'y', j), Rational(c));
      }
      images.push_back(std::move(y));
    }
  }
  return images;
}

}  // namespace

CohClass isogeny_pullback(const Isogeny& pi, const CohClass& z0) {
  if (!(z0.variety.context() == pi.target))
    fail(Errc::variety_mismatch, "class not on the isogeny target");
  ProductVariety src(pi.source, z0.variety.factors());
  std::vector<ExtClass> images = isogeny_images(pi, src, z0.variety);
  ExtClass out = algebra_map(z0.variety.algebra(), src.algebra(), images, z0.value);
  return {src, out};
}

Correspondence isogeny_pullback_pair(const Isogeny& pi, const Correspondence& alpha0) {
  return Correspondence::on(isogeny_pullback(pi, alpha0.value));
}

Correspondence isogeny_transfer(const Isogeny& pi, const Correspondence& alpha0) {
  return isogeny_pullback_pair(pi, alpha0).scaled(Rational(1) / pi.degree());
}

}  // namespace sl2chow
