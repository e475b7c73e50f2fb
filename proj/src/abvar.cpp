#include "sl2chow/abvar.hpp"

#include <bit>

namespace sl2chow {

PolarizedContext PolarizedContext::make(int g, std::vector<long> type) {
  if (g < 1) fail(Errc::bad_argument, "dimension must be positive");
  if (static_cast<int>(type.size()) != g)
    fail(Errc::bad_argument, "polarization type must list g elementary divisors");
  for (long c : type)
    if (c < 1) fail(Errc::bad_argument, "polarization type entries must be positive");
  return PolarizedContext{g, std::move(type)};
}

Rational PolarizedContext::degree_d() const {
  Rational d(1);
  for (long c : type) d *= c;
  return d;
}

ProductVariety::ProductVariety(PolarizedContext ctx, int factors)
    : ctx_(std::move(ctx)), factors_(factors) {
  if (factors_ < 1) fail(Errc::bad_argument, "factor count must be positive");
  if (2 * ctx_.g * factors_ > 62) fail(Errc::dimension_guard, "ambient algebra too large");
  std::vector<std::string> labels;
  labels.reserve(static_cast<std::size_t>(2 * ctx_.g * factors_));
  for (int k = 1; k <= factors_; ++k) {
    for (int i = 1; i <= ctx_.g; ++i) {
      std::string suffix = factors_ == 1 ? "" : "(" + std::to_string(k) + ")";
      labels.push_back("x" + std::to_string(i) + suffix);
      labels.push_back("y" + std::to_string(i) + suffix);
    }
  }
  algebra_ = make_context(std::move(labels));
}

std::size_t ProductVariety::generator_index(int factor, char sym, int i) const {
  if (factor < 1 || factor > factors_ || i < 1 || i > ctx_.g || (sym != 'x' && sym != 'y'))
    fail(Errc::bad_argument, "generator out of range");
  return static_cast<std::size_t>((factor - 1) * 2 * ctx_.g + (i - 1) * 2 + (sym == 'y' ? 1 : 0));
}

ExtClass ProductVariety::generator(int factor, char sym, int i) const {
  return ExtClass::monomial(algebra_, Mask(1) << generator_index(factor, sym, i), 1);
}

HomMorphism HomMorphism::make(const ProductVariety& source, const ProductVariety& target,
                              std::vector<std::vector<long>> matrix) {
  if (!(source.context() == target.context()))
    fail(Errc::variety_mismatch, "morphism across different polarized contexts");
  if (static_cast<int>(matrix.size()) != target.factors())
    fail(Errc::bad_argument, "matrix must have one row per target factor");
  for (const auto& row : matrix)
    if (static_cast<int>(row.size()) != source.factors())
      fail(Errc::bad_argument, "matrix must have one column per source factor");
  return HomMorphism{source, target, std::move(matrix)};
}

HomMorphism identity_hom(const ProductVariety& v) {
  std::vector<std::vector<long>> m(static_cast<std::size_t>(v.factors()),
                                   std::vector<long>(static_cast<std::size_t>(v.factors()), 0));
  for (int i = 0; i < v.factors(); ++i) m[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = 1;
  return HomMorphism::make(v, v, std::move(m));
}

namespace {
ProductVariety power_of(const ProductVariety& a, int m) {
  if (a.factors() != 1) fail(Errc::not_single_factor, "expected a single-factor variety");
  return ProductVariety(a.context(), m);
}
}  // namespace

HomMorphism mult_map(const ProductVariety& a, long n) {
  return HomMorphism::make(power_of(a, 1), power_of(a, 1), {{n}});
}

HomMorphism addition_map(const ProductVariety& a) {
  return HomMorphism::make(power_of(a, 2), power_of(a, 1), {{1, 1}});
}

HomMorphism difference_map(const ProductVariety& a) {
  return HomMorphism::make(power_of(a, 2), power_of(a, 1), {{-1, 1}});
}

HomMorphism diagonal_map(const ProductVariety& a) {
  return HomMorphism::make(power_of(a, 1), power_of(a, 2), {{1}, {1}});
}

HomMorphism sigma_map(const ProductVariety& a) {
  return HomMorphism::make(power_of(a, 2), power_of(a, 2), {{0, 1}, {1, 1}});
}

HomMorphism pair_embedding(const ProductVariety& a, long u, long v) {
  return HomMorphism::make(power_of(a, 1), power_of(a, 2), {{u}, {v}});
}

HomMorphism scale_pair(const ProductVariety& a, long u, long v) {
  return HomMorphism::make(power_of(a, 2), power_of(a, 2), {{u, 0}, {0, v}});
}

HomMorphism projection(const ProductVariety& a, int source_factors, std::vector<int> kept) {
  ProductVariety src = power_of(a, source_factors);
  ProductVariety tgt = power_of(a, static_cast<int>(kept.size()));
  std::vector<std::vector<long>> m(kept.size(), std::vector<long>(static_cast<std::size_t>(source_factors), 0));
  for (std::size_t j = 0; j < kept.size(); ++j) {
    if (kept[j] < 1 || kept[j] > source_factors) fail(Errc::bad_argument, "kept factor out of range");
    m[j][static_cast<std::size_t>(kept[j] - 1)] = 1;
  }
  return HomMorphism::make(src, tgt, std::move(m));
}

CohClass operator+(const CohClass& a, const CohClass& b) {
  if (!(a.variety == b.variety)) fail(Errc::variety_mismatch, "sum across varieties");
  return {a.variety, a.value + b.value};
}

CohClass operator-(const CohClass& a, const CohClass& b) {
  if (!(a.variety == b.variety)) fail(Errc::variety_mismatch, "difference across varieties");
  return {a.variety, a.value - b.value};
}

CohClass operator*(const CohClass& a, const CohClass& b) {
  if (!(a.variety == b.variety)) fail(Errc::variety_mismatch, "product across varieties");
  return {a.variety, wedge(a.value, b.value)};
}

bool CohClass::operator==(const CohClass& other) const {
  return variety == other.variety && value == other.value;
}

CohClass zero_class(const ProductVariety& v) { return {v, ExtClass(v.algebra())}; }

CohClass one_class(const ProductVariety& v) {
  return {v, ExtClass::scalar(v.algebra(), 1)};
}

CohClass theta(const ProductVariety& v) {
  if (v.factors() != 1) fail(Errc::not_single_factor, "theta lives on a single factor");
  ExtClass t(v.algebra());
  for (int i = 1; i <= v.context().g; ++i) {
    Mask m = (Mask(1) << v.generator_index(1, 'x', i)) | (Mask(1) << v.generator_index(1, 'y', i));
    t.add_term(m, Rational(v.context().type[static_cast<std::size_t>(i - 1)]));
  }
  return {v, t};
}

CohClass point_class(const ProductVariety& v) {
  CohClass t = theta(v);
  CohClass acc = one_class(v);
  int g = v.context().g;
  for (int i = 0; i < g; ++i) acc = acc * t;
  return acc.scaled(Rational(1) / (factorial(static_cast<unsigned long>(g)) * v.context().degree_d()));
}

CohClass poincare_class(const ProductVariety& v) {
  if (v.factors() != 2) fail(Errc::not_two_factors, "Poincare class lives on A x A");
  ProductVariety a(v.context(), 1);
  CohClass th = theta(a);
  CohClass p = pullback(projection(a, 2, {1}), th);
  CohClass q = pullback(projection(a, 2, {2}), th);
  CohClass m = pullback(addition_map(a), th);
  return p + q - m;
}

namespace {

// Images of the target generators under the pullback, in target generator
// order.
std::vector<ExtClass> pullback_images(const HomMorphism& f) {
  const ProductVariety& src = f.source;
  const ProductVariety& tgt = f.target;
  int g = src.context().g;
  std::vector<ExtClass> images;
  images.reserve(tgt.generator_count());
  for (int j = 1; j <= tgt.factors(); ++j) {
    for (int i = 1; i <= g; ++i) {
      for (char sym : {'x', 'y'}) {
        ExtClass img(src.algebra());
        for (int k = 1; k <= src.factors(); ++k) {
          long coeff = f.matrix[static_cast<std::size_t>(j - 1)][static_cast<std::size_t>(k - 1)];
          if (coeff != 0)
            img.add_term(Mask(1) << src.generator_index(k, sym, i), Rational(coeff));
        }
        images.push_back(std::move(img));
      }
    }
  }
  return images;
}

ExtClass monomial_image(const ContextPtr& src_ctx, const std::vector<ExtClass>& images, Mask m) {
  ExtClass out = ExtClass::scalar(src_ctx, 1);
  Mask rest = m;
  while (rest && !out.is_zero()) {
    int i = std::countr_zero(rest);
    rest &= rest - 1;
    out = wedge(out, images[static_cast<std::size_t>(i)]);
  }
  return out;
}

}  // namespace

void for_each_mask_of_degree(std::size_t n, int degree, const std::function<void(Mask)>& fn) {
  if (n >= 64) fail(Errc::bad_argument, "mask enumeration limited to < 64 bits");
  if (degree < 0 || degree > static_cast<int>(n)) return;
  if (degree == 0) {
    fn(0);
    return;
  }
  Mask limit = (Mask(1) << n) - 1;
  Mask v = (Mask(1) << degree) - 1;
  while (v <= limit) {
    fn(v);
    Mask c = v & (~v + 1);
    Mask r = v + c;
    if (r > limit || r < v) break;
    v = (((r ^ v) >> 2) / c) | r;
  }
}

CohClass pullback(const HomMorphism& f, const CohClass& z) {
  if (!(z.variety == f.target)) fail(Errc::variety_mismatch, "pullback of class not on target");
  std::vector<ExtClass> images = pullback_images(f);
  ExtClass out = algebra_map(f.target.algebra(), f.source.algebra(), images, z.value);
  return {f.source, out};
}

CohClass pushforward(const HomMorphism& f, const CohClass& z) {
  if (!(z.variety == f.source)) fail(Errc::variety_mismatch, "pushforward of class not on source");
  const ProductVariety& src = f.source;
  const ProductVariety& tgt = f.target;
  int g = src.context().g;
  int shift = 2 * g * (tgt.factors() - src.factors());
  std::vector<ExtClass> images = pullback_images(f);
  Mask full_src = src.orientation();
  Mask full_tgt = tgt.orientation();
  std::size_t n_tgt = tgt.generator_count();

  ExtClass out(tgt.algebra());
  for (const auto& [d, zd] : z.value.graded_parts()) {
    int dt = d + shift;
    if (dt < 0 || dt > static_cast<int>(n_tgt)) continue;
    for_each_mask_of_degree(n_tgt, dt, [&](Mask t) {
      Mask tc = full_tgt ^ t;
      ExtClass pb = monomial_image(src.algebra(), images, tc);
      Rational s(0);
      for (const auto& [nu, c] : pb.terms()) {
        Mask comp = full_src ^ nu;
        Rational coeff = zd.coefficient(comp);
        if (coeff != 0) {
          Rational prod = coeff * c;
          if (merge_sign(comp, nu) < 0) prod = -prod;
          s += prod;
        }
      }
      if (s != 0) {
        if (merge_sign(t, tc) < 0) s = -s;
        out.add_term(t, s);
      }
    });
  }
  return {tgt, out};
}

CohClass pontryagin(const CohClass& a, const CohClass& b) {
  if (!(a.variety == b.variety)) fail(Errc::variety_mismatch, "Pontryagin across varieties");
  if (a.variety.factors() != 1)
    fail(Errc::not_single_factor, "Pontryagin product lives on a single factor");
  const ProductVariety& v = a.variety;
  CohClass pa = pullback(projection(v, 2, {1}), a);
  CohClass qb = pullback(projection(v, 2, {2}), b);
  return pushforward(addition_map(v), pa * qb);
}

CohClass exp_class(const CohClass& z) { return {z.variety, exp_even(z.value)}; }

CohClass fourier(const CohClass& z) {
  if (z.variety.factors() != 1)
    fail(Errc::not_single_factor, "Fourier transform lives on a single factor");
  const ProductVariety& v = z.variety;
  ProductVariety vv(v.context(), 2);
  CohClass kernel = exp_class(poincare_class(vv));
  CohClass pz = pullback(projection(v, 2, {1}), z);
  CohClass pushed = pushforward(projection(v, 2, {2}), kernel * pz);
  return pushed.scaled(Rational(1) / v.context().degree_d());
}

std::map<int, CohClass> weight_components(const CohClass& z) {
  std::map<int, CohClass> out;
  for (const auto& [d, part] : z.value.graded_parts()) out.emplace(d, CohClass{z.variety, part});
  return out;
}

Rational integral(const CohClass& z) { return integral(z.value, z.variety.orientation()); }

}  // namespace sl2chow
