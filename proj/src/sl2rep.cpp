#include "sl2chow/sl2rep.hpp"

#include <algorithm>

namespace sl2chow {

BracketReport check_bracket(const Sl2Triple& t) {
  BracketReport report;
  if (t.X.domain_dim() != t.dim || t.X.codomain_dim() != t.dim ||
      t.Y.domain_dim() != t.dim || t.Y.codomain_dim() != t.dim ||
      t.H.domain_dim() != t.dim || t.H.codomain_dim() != t.dim) {
    report.violations.push_back("operator dimensions differ from dim");
    return report;
  }
  if (!(t.H * t.X - t.X * t.H == t.X.scaled(2)))
    report.violations.push_back("[H,X] != 2X");
  if (!(t.H * t.Y - t.Y * t.H == t.Y.scaled(-2)))
    report.violations.push_back("[H,Y] != -2Y");
  if (!(t.X * t.Y - t.Y * t.X == t.H))
    report.violations.push_back("[X,Y] != H");
  return report;
}

namespace {

void require_brackets(const Sl2Triple& t) {
  BracketReport r = check_bracket(t);
  if (!r.ok()) fail(Errc::bracket_violation, r.violations.front());
}

// Matrix whose columns are the given vectors.
LinearMap column_matrix(std::size_t dim, const std::vector<Vec>& columns) {
  LinearMap m(dim, columns.size());
  for (std::size_t j = 0; j < columns.size(); ++j)
    for (std::size_t i = 0; i < dim; ++i)
      if (columns[j][i] != 0) m.set(i, j, columns[j][i]);
  return m;
}

}  // namespace

std::vector<WeightSpace> primitive_subspace(const Sl2Triple& t) {
  require_brackets(t);
  std::vector<Vec> kernel = kernel_basis(t.Y);
  if (kernel.empty()) return {};

  // H preserves ker Y; split it into H-eigenspaces by restricting H to the
  // kernel coordinates.
  LinearMap k = column_matrix(t.dim, kernel);
  std::size_t r = kernel.size();
  LinearMap h_res(r, r);
  for (std::size_t j = 0; j < r; ++j) {
    Vec img = t.H.apply(kernel[j]);
    auto coords = solve(k, img);
    if (!coords) fail(Errc::not_diagonalizable, "H does not preserve ker Y");
    for (std::size_t i = 0; i < r; ++i) h_res.set(i, j, (*coords)[i]);
  }

  std::vector<WeightSpace> spaces;
  std::size_t found = 0;
  long bound = static_cast<long>(t.dim);
  for (long w = -bound; w <= bound && found < r; ++w) {
    LinearMap shifted = h_res - LinearMap::identity(r).scaled(Rational(w));
    std::vector<Vec> eig = kernel_basis(shifted);
    if (eig.empty()) continue;
    WeightSpace ws;
    ws.weight = w;
    for (const Vec& coords : eig) {
      Vec v(t.dim, Rational(0));
      for (std::size_t j = 0; j < r; ++j)
        if (coords[j] != 0) v = add_vec(v, scaled_vec(kernel[j], coords[j]));
      ws.basis.push_back(std::move(v));
    }
    found += ws.basis.size();
    spaces.push_back(std::move(ws));
  }
  if (found != r)
    fail(Errc::not_diagonalizable, "H has non-integer eigenvalues on ker Y");
  return spaces;
}

std::vector<IrreducibleBlock> decompose(const Sl2Triple& t) {
  std::vector<WeightSpace> primitives = primitive_subspace(t);
  std::vector<IrreducibleBlock> blocks;
  std::size_t total = 0;
  for (const WeightSpace& ws : primitives) {
    if (ws.weight > 0)
      fail(Errc::not_decomposable, "primitive vector with positive weight");
    long lambda = -ws.weight;
    for (const Vec& z : ws.basis) {
      IrreducibleBlock block;
      block.lambda = lambda;
      block.lowest = z;
      Vec cur = z;
      for (long q = 0; q <= lambda; ++q) {
        block.basis.push_back(cur);
        if (q < lambda) cur = t.X.apply(cur);
      }
      total += block.basis.size();
      blocks.push_back(std::move(block));
    }
  }
  if (total != t.dim)
    fail(Errc::not_decomposable, "block dimensions sum to " + std::to_string(total) +
                                     " instead of " + std::to_string(t.dim));
  // The union of block bases must be independent.
  std::vector<Vec> all;
  for (const auto& b : blocks) all.insert(all.end(), b.basis.begin(), b.basis.end());
  if (rank(column_matrix(t.dim, all)) != t.dim)
    fail(Errc::not_decomposable, "block bases are dependent");
  return blocks;
}

std::pair<FreeBeauvilleModule, Sl2Triple> build_free_module(
    long g, std::vector<FreeGenerator> generators) {
  FreeBeauvilleModule mod;
  mod.g = g;
  std::size_t dim = 0;
  for (const auto& gen : generators) {
    if (gen.lambda < 0) fail(Errc::negative_lambda, "generator with lambda < 0");
    if (gen.p && gen.s) {
      Rational lambda_from_ps = Rational(g) + Rational(*gen.s) - 2 * (*gen.p);
      if (lambda_from_ps != Rational(gen.lambda))
        fail(Errc::invalid_bidegree, "lambda != g+s-2p for generator " + gen.label);
    }
    mod.offsets.push_back(dim);
    dim += static_cast<std::size_t>(gen.lambda) + 1;
  }
  mod.generators = std::move(generators);
  mod.dim = dim;

  Sl2Triple t;
  t.dim = dim;
  t.X = LinearMap(dim, dim);
  t.Y = LinearMap(dim, dim);
  t.H = LinearMap(dim, dim);
  for (std::size_t gi = 0; gi < mod.generators.size(); ++gi) {
    const auto& gen = mod.generators[gi];
    std::size_t base = mod.offsets[gi];
    long lambda = gen.lambda;
    for (long q = 0; q <= lambda; ++q) {
      std::size_t idx = base + static_cast<std::size_t>(q);
      t.H.set(idx, idx, Rational(2 * q - lambda));
      if (q < lambda) t.X.set(idx + 1, idx, 1);
      if (q > 0) t.Y.set(idx - 1, idx, Rational(q * (lambda - q + 1)));
      std::string label = gen.label;
      if (q == 1) label = "theta*" + label;
      if (q > 1) label = "theta^" + std::to_string(q) + "*" + label;
      t.labels.push_back(label);
    }
  }
  return {std::move(mod), std::move(t)};
}

GroupElement GroupElement::make(Rational a, Rational b, Rational c, Rational d) {
  if (a * d - b * c != 1) fail(Errc::not_unimodular, "matrix determinant is not 1");
  return GroupElement{std::move(a), std::move(b), std::move(c), std::move(d)};
}

GroupElement GroupElement::identity() { return make(1, 0, 0, 1); }
GroupElement GroupElement::upper(const Rational& a) { return make(1, a, 0, 1); }
GroupElement GroupElement::lower(const Rational& a) { return make(1, 0, a, 1); }

GroupElement GroupElement::torus(const Rational& t) {
  if (t == 0) fail(Errc::bad_argument, "torus parameter must be nonzero");
  return make(t, 0, 0, Rational(1) / t);
}

GroupElement GroupElement::w() { return make(0, -1, 1, 0); }

GroupElement GroupElement::inverse() const { return make(d, -b, -c, a); }

GroupElement operator*(const GroupElement& m, const GroupElement& n) {
  return GroupElement::make(m.a * n.a + m.b * n.c, m.a * n.b + m.b * n.d,
                            m.c * n.a + m.d * n.c, m.c * n.b + m.d * n.d);
}

bool GroupElement::operator==(const GroupElement& other) const {
  return a == other.a && b == other.b && c == other.c && d == other.d;
}

std::vector<ElementaryFactor> factor_elementary(const GroupElement& m) {
  std::vector<ElementaryFactor> word;
  auto push_u = [&](const Rational& a) {
    if (a != 0) word.push_back({false, a});
  };
  auto push_v = [&](const Rational& a) {
    if (a != 0) word.push_back({true, a});
  };
  if (m.c != 0) {
    // (a b; c d) = u((a-1)/c) v(c) u((d-1)/c).
    push_u((m.a - 1) / m.c);
    push_v(m.c);
    push_u((m.d - 1) / m.c);
  } else if (m.a == 1) {
    push_u(m.b);
  } else {
    // c = 0, a != 1: right-multiply by v(a) to reach the generic case, then
    // cancel it. Gives a word of length at most 4.
    push_u(m.a + m.a * m.b - 1);
    push_v(1);
    push_u(Rational(1) / m.a - 1);
    push_v(-m.a);
  }
  return word;
}

GroupElement factor_product(const std::vector<ElementaryFactor>& word) {
  GroupElement m = GroupElement::identity();
  for (const auto& f : word)
    m = m * (f.lower ? GroupElement::lower(f.param) : GroupElement::upper(f.param));
  return m;
}

LinearMap exp_nilpotent(const LinearMap& n, const Rational& c) {
  if (!n.is_square()) fail(Errc::bad_argument, "exp of non-square map");
  std::size_t dim = n.domain_dim();
  LinearMap out = LinearMap::identity(dim);
  LinearMap pow = LinearMap::identity(dim);
  for (unsigned long k = 1; k <= dim + 1; ++k) {
    pow = pow * n;
    if (pow.is_zero()) return out;
    out = out + pow.scaled(pow_rat(c, static_cast<long>(k)) / factorial(k));
  }
  fail(Errc::bracket_violation, "operator is not nilpotent");
}

Vec act(const GroupElement& m, const Sl2Triple& t, const Vec& v) {
  require_brackets(t);
  std::vector<ElementaryFactor> word = factor_elementary(m);
  Vec out = v;
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    const LinearMap& op = it->lower ? t.Y : t.X;
    out = exp_nilpotent(op, it->param).apply(out);
  }
  return out;
}

LinearMap act_matrix(const GroupElement& m, const Sl2Triple& t) {
  require_brackets(t);
  std::vector<ElementaryFactor> word = factor_elementary(m);
  LinearMap out = LinearMap::identity(t.dim);
  for (const auto& f : word) {
    const LinearMap& op = f.lower ? t.Y : t.X;
    out = out * exp_nilpotent(op, f.param);
  }
  return out;
}

DemazureReport demazure_check(const std::function<LinearMap(const Rational&)>& beta_u,
                              const std::function<LinearMap(const Rational&)>& beta_t,
                              const LinearMap& h) {
  DemazureReport report;
  LinearMap minus_one = beta_t(-1);

  // (i) multiplied through by h on the right; equivalent to the conjugation
  // form since (ii) makes h invertible (h^2 = beta(-I)).
  for (long tv : {2L, 3L, -1L}) {
    Rational t(tv);
    bool pass = h * beta_t(t) == beta_t(Rational(1) / t) * h;
    report.conditions.emplace_back("(i) t=" + std::to_string(tv), pass);
  }
  LinearMap h2 = h * h;
  report.conditions.emplace_back("(ii) h^2 = beta(-I)", h2 == minus_one);
  LinearMap uh = beta_u(1) * h;
  report.conditions.emplace_back("(ii) (beta(u)h)^3 = beta(-I)", uh * uh * uh == minus_one);
  return report;
}

}  // namespace sl2chow
