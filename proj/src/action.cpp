#include "sl2chow/action.hpp"

#include "sl2chow/rng.hpp"

namespace sl2chow {

Vec ChowAction::to_vector(const CohClass& z) const {
  if (!(z.variety == variety)) fail(Errc::variety_mismatch, "class not on the action's variety");
  Vec v(basis.size(), Rational(0));
  for (const auto& [m, c] : z.value.terms()) v[static_cast<std::size_t>(m)] = c;
  return v;
}

CohClass ChowAction::from_vector(const Vec& v) const {
  ExtClass z(variety.algebra());
  for (std::size_t i = 0; i < v.size(); ++i) z.add_term(basis[i], v[i]);
  return {variety, z};
}

ChowAction build_action(const PolarizedContext& ctx) {
  if (ctx.g > 4) fail(Errc::dimension_guard, "action triple supports g <= 4");
  ProductVariety a(ctx, 1);
  std::size_t dim = std::size_t(1) << a.generator_count();

  ChowAction action{ctx, a, {}, {}, false, {}, {}, {}, std::nullopt};
  action.basis.reserve(dim);
  for (std::size_t m = 0; m < dim; ++m) action.basis.push_back(Mask(m));

  int g = ctx.g;
  Rational d = ctx.degree_d();
  CohClass th = theta(a);
  CohClass y_kernel = one_class(a);
  for (int i = 0; i + 1 < g; ++i) y_kernel = y_kernel * th;
  y_kernel = y_kernel.scaled(Rational(1) / (d * factorial(static_cast<unsigned long>(g - 1))));

  Sl2Triple t;
  t.dim = dim;
  t.X = LinearMap(dim, dim);
  t.Y = LinearMap(dim, dim);
  t.H = LinearMap(dim, dim);
  for (std::size_t j = 0; j < dim; ++j) {
    CohClass mu{a, ExtClass::monomial(a.algebra(), Mask(j), 1)};
    CohClass xz = th * mu;
    for (const auto& [m, c] : xz.value.terms()) t.X.set(static_cast<std::size_t>(m), j, c);
    CohClass yz = pontryagin(y_kernel, mu);
    for (const auto& [m, c] : yz.value.terms()) t.Y.set(static_cast<std::size_t>(m), j, c);
    t.H.set(j, j, Rational(mask_degree(Mask(j)) - g));
  }
  BracketReport brackets = check_bracket(t);
  if (!brackets.ok()) fail(Errc::bracket_violation, brackets.violations.front());
  action.triple = std::move(t);

  if (g <= 3) {
    action.has_lifts = true;
    PolarizedContext c = ctx;
    ProductVariety aa(ctx, 2);
    action.lift_u = [c](const Rational& s) {
      return diagonal_push(exp_class(theta(ProductVariety(c, 1)).scaled(s)));
    };
    action.lift_v = [c](const Rational& s) {
      if (s == 0) return diagonal_class(c);
      ProductVariety one(c, 1);
      CohClass dt = pullback(difference_map(one), theta(one));
      Rational scale = pow_rat(s, c.g) / c.degree_d();
      return Correspondence::on(exp_class(dt.scaled(Rational(1) / s)).scaled(scale));
    };
    action.lift_t = [c](const Rational& s) {
      if (s == 0) fail(Errc::bad_argument, "torus parameter must be nonzero");
      std::vector<Correspondence> pis = kunneth_idempotents(c);
      Correspondence sum{zero_class(pis.front().value.variety)};
      for (std::size_t i = 0; i < pis.size(); ++i)
        sum = sum + pis[i].scaled(pow_rat(s, static_cast<long>(i)));
      return sum.scaled(pow_rat(s, -c.g));
    };
    action.lift_w = Correspondence::on(
        exp_class(poincare_class(aa)).scaled(Rational(1) / ctx.degree_d()));
  }
  return action;
}

namespace {

CohClass scale_by_weight(const CohClass& z, const Rational& t, int g) {
  CohClass out = zero_class(z.variety);
  for (const auto& [i, part] : weight_components(z))
    out = out + part.scaled(pow_rat(t, i - g));
  return out;
}

CohClass minus_one_pullback(const CohClass& z) {
  return pullback(mult_map(z.variety, -1), z);
}

}  // namespace

CohClass act_closed_form(const GroupElement& m, const CohClass& z) {
  if (z.variety.factors() != 1) fail(Errc::not_single_factor, "action lives on classes on A");
  const PolarizedContext& ctx = z.variety.context();
  int g = ctx.g;
  Rational d = ctx.degree_d();

  if (m.b == 0 && m.c == 0) {
    // diag(t, 1/t): z_i -> t^{i-g} z_i.
    return scale_by_weight(z, m.a, g);
  }
  if (m.a == 1 && m.d == 1 && m.c == 0) {
    return exp_class(theta(z.variety).scaled(m.b)) * z;
  }
  if (m.a == 1 && m.d == 1 && m.b == 0) {
    if (m.c == 0) return z;
    CohClass kernel = exp_class(theta(z.variety).scaled(Rational(1) / m.c));
    return pontryagin(kernel, z).scaled(pow_rat(m.c, g) / d);
  }
  if (m.a == 0 && m.d == 0 && m.b == -1 && m.c == 1) {
    return fourier(z);
  }
  if (m.a == 0 && m.d == 0 && m.b == 1 && m.c == -1) {
    return fourier(minus_one_pullback(z).scaled(pow_rat(-1, g)));
  }
  fail(Errc::unsupported_shape, "closed form exists for diagonal, unipotent and +-w only");
}

CohClass act_general(const GroupElement& m, const CohClass& z) {
  if (z.variety.factors() != 1) fail(Errc::not_single_factor, "action lives on classes on A");
  CohClass out = z;
  std::vector<ElementaryFactor> word = factor_elementary(m);
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    GroupElement f = it->lower ? GroupElement::lower(it->param) : GroupElement::upper(it->param);
    out = act_closed_form(f, out);
  }
  return out;
}

RelationReport sl2z_relations_check(const PolarizedContext& ctx) {
  if (ctx.g > 2) fail(Errc::dimension_guard, "correspondence relations support g <= 2");
  RelationReport report;
  ProductVariety aa(ctx, 2);
  Correspondence w = Correspondence::on(
      exp_class(poincare_class(aa)).scaled(Rational(1) / ctx.degree_d()));
  Correspondence u = diagonal_push(exp_class(theta(ProductVariety(ctx, 1))));
  Correspondence diag = diagonal_class(ctx);

  Correspondence w2 = compose(w, w);
  Correspondence w4 = compose(w2, w2);
  report.checks.emplace_back("w^4 = [Delta]", w4 == diag);

  Correspondence uw = compose(u, w);
  Correspondence uw3 = compose(uw, compose(uw, uw));
  report.checks.emplace_back("(u w)^3 = w^2", uw3 == w2);

  Correspondence expected = transpose_graph(ctx, -1).scaled(pow_rat(-1, ctx.g));
  report.checks.emplace_back("w^2 = (-1)^g Gamma'_{-1}", w2 == expected);
  return report;
}

RelationReport sigma_identity_check(const PolarizedContext& ctx, const Rational& a,
                                    std::uint64_t seed) {
  if (ctx.g > 3) fail(Errc::dimension_guard, "sigma identity check supports g <= 3");
  if (a == 0) fail(Errc::bad_argument, "parameter a must be nonzero");
  RelationReport report;
  ProductVariety one(ctx, 1);
  CohClass dt = pullback(difference_map(one), theta(one));
  Correspondence kernel = Correspondence::on(exp_class(dt.scaled(Rational(1) / a)));
  CohClass pont_kernel = exp_class(theta(one).scaled(Rational(1) / a));

  Rng rng(seed);
  for (int k = 0; k < 5; ++k) {
    CohClass z = rng.coh_class(one);
    CohClass lhs = apply(kernel, z);
    CohClass rhs = pontryagin(pont_kernel, z);
    report.checks.emplace_back("(e^{delta^* theta/a})_* z = e^{theta/a} * z #" + std::to_string(k),
                               lhs == rhs);
  }
  return report;
}

}  // namespace sl2chow
