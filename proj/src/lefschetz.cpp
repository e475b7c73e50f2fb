#include "sl2chow/lefschetz.hpp"

#include <algorithm>

#include "sl2chow/action.hpp"

namespace sl2chow {

bool is_primitive(const Sl2Triple& t, const Vec& v) {
  return is_zero_vec(t.Y.apply(v));
}

bool is_primitive(const CohClass& z) {
  if (z.variety.factors() != 1)
    fail(Errc::not_single_factor, "primitivity is defined on classes on A");
  int g = z.variety.context().g;
  Rational d = z.variety.context().degree_d();
  CohClass kernel = one_class(z.variety);
  CohClass th = theta(z.variety);
  for (int i = 0; i + 1 < g; ++i) kernel = kernel * th;
  kernel = kernel.scaled(Rational(1) / (d * factorial(static_cast<unsigned long>(g - 1))));
  return pontryagin(kernel, z).is_zero();
}

namespace {

LinearMap column_matrix(std::size_t dim, const std::vector<Vec>& columns) {
  LinearMap m(dim, columns.size());
  for (std::size_t j = 0; j < columns.size(); ++j)
    for (std::size_t i = 0; i < dim; ++i)
      if (columns[j][i] != 0) m.set(i, j, columns[j][i]);
  return m;
}

}  // namespace

std::vector<PrimitiveComponent> primitive_decomposition(const Sl2Triple& t, const Vec& v) {
  if (is_zero_vec(v)) return {};
  Vec hv = t.H.apply(v);
  // Homogeneity: H v = w v for a single weight w.
  std::optional<Rational> weight;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] == 0) {
      if (hv[i] != 0) fail(Errc::not_homogeneous, "vector is not H-homogeneous");
      continue;
    }
    Rational w = hv[i] / v[i];
    if (weight && *weight != w) fail(Errc::not_homogeneous, "vector is not H-homogeneous");
    weight = w;
  }

  std::vector<IrreducibleBlock> blocks = decompose(t);
  std::vector<Vec> all;
  for (const auto& b : blocks) all.insert(all.end(), b.basis.begin(), b.basis.end());
  auto coords = solve(column_matrix(t.dim, all), v);
  if (!coords) fail(Errc::not_decomposable, "vector outside the block span");

  std::map<long, std::pair<Vec, Vec>> by_power;  // k -> (component, primitive)
  std::size_t col = 0;
  for (const auto& b : blocks) {
    for (long q = 0; q <= b.lambda; ++q, ++col) {
      const Rational& c = (*coords)[col];
      if (c == 0) continue;
      auto it = by_power.find(q);
      if (it == by_power.end())
        it = by_power.emplace(q, std::make_pair(Vec(t.dim, Rational(0)), Vec(t.dim, Rational(0))))
                 .first;
      it->second.first = add_vec(it->second.first, scaled_vec(b.basis[static_cast<std::size_t>(q)], c));
      it->second.second = add_vec(it->second.second, scaled_vec(b.lowest, c));
    }
  }
  std::vector<PrimitiveComponent> out;
  for (auto& [k, pair] : by_power)
    out.push_back(PrimitiveComponent{k, std::move(pair.first), std::move(pair.second)});
  return out;
}

std::vector<ModelComponent> primitive_decomposition(const CohClass& z) {
  if (z.variety.factors() != 1)
    fail(Errc::not_single_factor, "primitive decomposition lives on classes on A");
  int degree = 0;
  if (!z.value.is_homogeneous(&degree))
    fail(Errc::not_homogeneous, "class is not of pure degree");
  if (z.is_zero()) return {};

  ChowAction action = build_action(z.variety.context());
  std::vector<PrimitiveComponent> parts =
      primitive_decomposition(action.triple, action.to_vector(z));

  long p = (degree + 1) / 2;  // i even: p = i/2 (s = 0); i odd: p = (i+1)/2 (s = 1)
  std::vector<ModelComponent> out;
  for (const auto& part : parts) {
    out.push_back(ModelComponent{part.theta_power, p - part.theta_power,
                                 action.from_vector(part.component),
                                 action.from_vector(part.primitive)});
  }
  return out;
}

LefschetzReport fourier_primitive_check(const Sl2Triple& t, long q) {
  if (q < 0) fail(Errc::bad_argument, "q must be nonnegative");
  LefschetzReport report;
  LinearMap w_op = act_matrix(GroupElement::w(), t);
  std::vector<IrreducibleBlock> blocks = decompose(t);
  for (const auto& b : blocks) ++report.primitive_dims[b.lambda];
  std::size_t index = 0;
  for (const auto& b : blocks) {
    ++index;
    if (q > b.lambda) continue;
    long r = b.lambda - q;
    Vec lhs = w_op.apply(
        scaled_vec(b.basis[static_cast<std::size_t>(q)], Rational(1) / factorial(static_cast<unsigned long>(q))));
    Vec rhs = scaled_vec(b.basis[static_cast<std::size_t>(r)],
                         pow_rat(-1, r) / factorial(static_cast<unsigned long>(r)));
    report.checks.push_back(IdentityCheck{
        "block " + std::to_string(index) + " (lambda=" + std::to_string(b.lambda) +
            ", q=" + std::to_string(q) + ")",
        lhs == rhs});
  }
  return report;
}

namespace {

std::vector<Vec> weight_space(const Sl2Triple& t, long weight) {
  LinearMap shifted = t.H - LinearMap::identity(t.dim).scaled(Rational(weight));
  return kernel_basis(shifted);
}

bool block_contains_weight(long lambda, long h) {
  return h >= -lambda && h <= lambda && (lambda - h) % 2 == 0;
}

// X^{q-p} between the weight spaces hw1, hw2 on a sum of irreducibles:
// expected from the block multiset alone.
void block_oracle(const std::vector<long>& lambdas, long hw1, long hw2,
                  HardLefschetzResult& res) {
  res.oracle_injective = true;
  res.oracle_surjective = true;
  for (long lambda : lambdas) {
    if (block_contains_weight(lambda, hw1) && hw2 > lambda) res.oracle_injective = false;
    if (block_contains_weight(lambda, hw2) && hw1 < -lambda) res.oracle_surjective = false;
  }
}

void finish(HardLefschetzResult& res, long p, long q, long g, long s) {
  res.injective = res.rank == res.dim_domain;
  res.surjective = res.rank == res.dim_target;
  res.predicate_injective = p + q <= g + s;
  res.predicate_surjective = p + q >= g + s;
  bool implications = (!res.predicate_injective || res.injective) &&
                      (!res.predicate_surjective || res.surjective);
  res.matches = implications && res.injective == res.oracle_injective &&
                res.surjective == res.oracle_surjective;
}

HardLefschetzResult rank_check(std::size_t ambient, const LinearMap& power,
                               const std::vector<Vec>& domain, const std::vector<Vec>& target,
                               const std::vector<long>& lambdas, long p, long q, long g, long s) {
  HardLefschetzResult res;
  res.dim_domain = domain.size();
  res.dim_target = target.size();
  std::vector<Vec> images;
  images.reserve(domain.size());
  for (const Vec& v : domain) images.push_back(power.apply(v));
  res.rank = images.empty() ? 0 : rank(column_matrix(ambient, images));
  block_oracle(lambdas, 2 * p - g - s, 2 * q - g - s, res);
  finish(res, p, q, g, s);
  return res;
}

HardLefschetzResult triple_check(const Sl2Triple& t, const std::vector<long>& lambdas, long g,
                                 long p, long q, long s) {
  if (q < p) fail(Errc::bad_argument, "need q >= p");
  LinearMap power = t.X.power(static_cast<unsigned long>(q - p));
  std::vector<Vec> domain = weight_space(t, 2 * p - g - s);
  std::vector<Vec> target = weight_space(t, 2 * q - g - s);
  return rank_check(t.dim, power, domain, target, lambdas, p, q, g, s);
}

}  // namespace

HardLefschetzResult hard_lefschetz_check(const Sl2Triple& t, long g, long p, long q, long s) {
  std::vector<long> lambdas;
  for (const auto& b : decompose(t)) lambdas.push_back(b.lambda);
  return triple_check(t, lambdas, g, p, q, s);
}

HardLefschetzResult hard_lefschetz_check(const FreeBeauvilleModule& module, const Sl2Triple& t,
                                         long p, long q, long s) {
  std::vector<long> lambdas;
  for (const auto& gen : module.generators) lambdas.push_back(gen.lambda);
  return triple_check(t, lambdas, module.g, p, q, s);
}

HardLefschetzResult hard_lefschetz_check(const PolarizedContext& ctx, long p, long q, long s) {
  if (q < p) fail(Errc::bad_argument, "need q >= p");
  ProductVariety a(ctx, 1);
  long g = ctx.g;
  long i1 = 2 * p - s;
  long i2 = 2 * q - s;
  std::size_t n = a.generator_count();

  CohClass power = one_class(a);
  CohClass th = theta(a);
  for (long k = 0; k < q - p; ++k) power = power * th;

  std::vector<Vec> images;
  std::size_t dim_domain = 0;
  std::size_t dim_target = 0;
  std::size_t ambient = std::size_t(1) << n;
  if (i1 >= 0 && i1 <= static_cast<long>(n)) {
    for_each_mask_of_degree(n, static_cast<int>(i1), [&](Mask m) {
      ++dim_domain;
      CohClass img = power * CohClass{a, ExtClass::monomial(a.algebra(), m, 1)};
      Vec col(ambient, Rational(0));
      for (const auto& [mm, c] : img.value.terms()) col[static_cast<std::size_t>(mm)] = c;
      images.push_back(std::move(col));
    });
  }
  if (i2 >= 0 && i2 <= static_cast<long>(n)) {
    for_each_mask_of_degree(n, static_cast<int>(i2), [&](Mask) { ++dim_target; });
  }

  HardLefschetzResult res;
  res.dim_domain = dim_domain;
  res.dim_target = dim_target;
  res.rank = images.empty() ? 0 : rank(column_matrix(ambient, images));
  // The model splits into blocks with lambda = g-k for every k = 0..g.
  std::vector<long> lambdas;
  for (long k = 0; k <= g; ++k) lambdas.push_back(g - k);
  block_oracle(lambdas, i1 - g, i2 - g, res);
  finish(res, p, q, g, s);
  res.note = "cohomology model: only i = 2p-s is intrinsic (i1=" + std::to_string(i1) +
             ", i2=" + std::to_string(i2) + ")";
  return res;
}

LefschetzReport negative_s_annihilation_check(long g, long p, long s) {
  long lambda = g + s - 2 * p;
  if (lambda < 0) fail(Errc::invalid_bidegree, "g+s-2p must be nonnegative");
  if (g - 2 * p < 0) fail(Errc::invalid_bidegree, "need g >= 2p");
  FreeGenerator gen{"z", lambda, Rational(p), s};
  auto [mod, t] = build_free_module(g, {gen});
  (void)mod;
  Vec z(t.dim, Rational(0));
  z[0] = 1;
  Vec image = t.X.power(static_cast<unsigned long>(g - 2 * p)).apply(z);
  bool annihilated = is_zero_vec(image);
  bool expected = s < 0;

  LefschetzReport report;
  report.checks.push_back(IdentityCheck{
      "X^{g-2p} z " + std::string(expected ? "= 0" : "!= 0") + " (g=" + std::to_string(g) +
          ", p=" + std::to_string(p) + ", s=" + std::to_string(s) + ")",
      annihilated == expected});
  report.primitive_dims[lambda] = 1;
  return report;
}

LefschetzReport filtration_lefschetz_check(const FreeBeauvilleModule& module, const Sl2Triple& t,
                                           long p, long q) {
  if (q < p) fail(Errc::bad_argument, "need q >= p");
  LefschetzReport report;
  long cutoff = p + q - module.g;
  LinearMap power = t.X.power(static_cast<unsigned long>(q - p));

  std::vector<Vec> domain;
  std::size_t excluded = 0;
  for (std::size_t gi = 0; gi < module.generators.size(); ++gi) {
    const FreeGenerator& gen = module.generators[gi];
    if (!gen.p || !gen.s) fail(Errc::missing_bidegree, "generator without (p, s) annotation");
    if (*gen.s < cutoff) {
      ++excluded;
      continue;
    }
    Rational k = Rational(p) - *gen.p;  // power of theta reaching CH^p
    if (k.get_den() != 1 || k < 0 || k > gen.lambda) continue;
    Vec v(t.dim, Rational(0));
    v[module.offsets[gi] + static_cast<std::size_t>(k.get_num().get_si())] = 1;
    domain.push_back(std::move(v));
  }

  std::vector<Vec> images;
  for (const Vec& v : domain) images.push_back(power.apply(v));
  std::size_t r = images.empty() ? 0 : rank(column_matrix(t.dim, images));
  bool injective = r == domain.size();
  report.checks.push_back(IdentityCheck{
      "X^{q-p} injective on the s >= " + std::to_string(cutoff) + " part (" +
          std::to_string(domain.size()) + " vectors, " + std::to_string(excluded) + " excluded)",
      injective});
  return report;
}

}  // namespace sl2chow
