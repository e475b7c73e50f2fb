#include "sl2chow/suites.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <functional>
#include <memory>
#include <thread>

#include "sl2chow/action.hpp"
#include "sl2chow/expr.hpp"
#include "sl2chow/lefschetz.hpp"
#include "sl2chow/rng.hpp"

namespace sl2chow {

namespace {

struct CheckSet {
  std::uint64_t seed = 0;
  std::vector<std::function<CheckRecord()>> checks;

  std::uint64_t check_seed(const std::string& id) const {
    return fnv1a(std::to_string(seed) + ":" + id);
  }

  void add(const std::string& id, std::function<std::pair<bool, std::string>()> fn) {
    checks.push_back([id, fn = std::move(fn)]() {
      try {
        auto [pass, inputs] = fn();
        return CheckRecord{id, hex64(fnv1a(inputs)), pass, ""};
      } catch (const std::exception& e) {
        return CheckRecord{id, hex64(fnv1a(std::string(e.what()))), false, e.what()};
      }
    });
  }
};

std::size_t worker_count() {
  const char* env = std::getenv("SL2CHOW_WORKERS");
  if (!env) return 1;
  long n = std::atol(env);
  return n < 1 ? 1 : static_cast<std::size_t>(n);
}

std::vector<CheckRecord> run_checks(const std::vector<std::function<CheckRecord()>>& checks) {
  std::vector<CheckRecord> records(checks.size());
  std::size_t workers = std::min(worker_count(), checks.size());
  if (workers <= 1) {
    for (std::size_t i = 0; i < checks.size(); ++i) records[i] = checks[i]();
    return records;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&]() {
      while (true) {
        std::size_t i = next.fetch_add(1);
        if (i >= checks.size()) return;
        records[i] = checks[i]();
      }
    });
  }
  for (auto& t : pool) t.join();
  return records;
}

std::string class_digest(const CohClass& z) { return print_monomials(z); }

// Random correspondences are drawn from the even-degree sector, which is
// where classes of algebraic cycles on A x A live in this model.
Correspondence random_correspondence(Rng& rng, const ProductVariety& aa, int terms = 6) {
  return Correspondence{rng.even_coh_class(aa, terms)};
}

// ---- brackets ----------------------------------------------------------

void brackets_checks(CheckSet& set, const PolarizedContext& ctx) {
  auto action = std::make_shared<const ChowAction>(build_action(ctx));
  std::string inputs = "g=" + std::to_string(ctx.g);
  set.add("brackets.hx", [action, inputs]() {
    const Sl2Triple& t = action->triple;
    return std::make_pair(t.H * t.X - t.X * t.H == t.X.scaled(2), inputs);
  });
  set.add("brackets.hy", [action, inputs]() {
    const Sl2Triple& t = action->triple;
    return std::make_pair(t.H * t.Y - t.Y * t.H == t.Y.scaled(-2), inputs);
  });
  set.add("brackets.xy", [action, inputs]() {
    const Sl2Triple& t = action->triple;
    return std::make_pair(t.X * t.Y - t.Y * t.X == t.H, inputs);
  });
  set.add("brackets.h_weights", [action, inputs]() {
    bool ok = true;
    int g = action->ctx.g;
    for (std::size_t j = 0; j < action->basis.size(); ++j) {
      if (action->triple.H.entry(j, j) != Rational(mask_degree(action->basis[j]) - g)) ok = false;
    }
    return std::make_pair(ok, inputs);
  });
}

// ---- sl2z --------------------------------------------------------------

void sl2z_checks(CheckSet& set, const PolarizedContext& ctx) {
  std::string inputs = "g=" + std::to_string(ctx.g);
  auto shared = std::make_shared<RelationReport>(sl2z_relations_check(ctx));
  const char* ids[] = {"sl2z.w4", "sl2z.uw3", "sl2z.w2_gamma"};
  for (std::size_t i = 0; i < 3; ++i) {
    set.add(ids[i], [shared, i, inputs]() {
      return std::make_pair(shared->checks.at(i).second, inputs);
    });
  }
  for (long t : {2L, 3L}) {
    set.add("sl2z.twist." + std::to_string(t), [ctx, t, inputs]() {
      ProductVariety aa(ctx, 2);
      Correspondence poincare = Correspondence::on(exp_class(poincare_class(aa)));
      Correspondence gt = transpose_graph(ctx, t);
      Correspondence lhs = compose(gt, compose(poincare, gt));
      Correspondence rhs = poincare.scaled(pow_rat(Rational(t), 2 * ctx.g));
      return std::make_pair(lhs == rhs, inputs);
    });
  }
}

// ---- formulas12 --------------------------------------------------------

void formulas12_checks(CheckSet& set, const PolarizedContext& ctx) {
  ProductVariety a(ctx, 1);
  ProductVariety aa(ctx, 2);
  for (int k = 0; k < 3; ++k) {
    std::string suffix = "." + std::to_string(k);
    set.add("formulas12.a_left" + suffix, [a, aa, &set, suffix]() {
      Rng rng(set.check_seed("formulas12.a_left" + suffix));
      Correspondence alpha = random_correspondence(rng, aa);
      CohClass z = rng.even_coh_class(a);
      Correspondence lhs = compose(diagonal_push(z), alpha);
      Correspondence rhs{alpha.value * pullback(projection(a, 2, {2}), z)};
      return std::make_pair(lhs == rhs, class_digest(alpha.value) + ";" + class_digest(z));
    });
    set.add("formulas12.a_right" + suffix, [a, aa, &set, suffix]() {
      Rng rng(set.check_seed("formulas12.a_right" + suffix));
      Correspondence alpha = random_correspondence(rng, aa);
      CohClass z = rng.even_coh_class(a);
      Correspondence lhs = compose(alpha, diagonal_push(z));
      Correspondence rhs{alpha.value * pullback(projection(a, 2, {1}), z)};
      return std::make_pair(lhs == rhs, class_digest(alpha.value) + ";" + class_digest(z));
    });
    set.add("formulas12.a_ringhom" + suffix, [a, &set, suffix]() {
      Rng rng(set.check_seed("formulas12.a_ringhom" + suffix));
      CohClass z = rng.even_coh_class(a);
      CohClass w = rng.even_coh_class(a);
      Correspondence lhs = diagonal_push(z * w);
      Correspondence rhs = compose(diagonal_push(w), diagonal_push(z));
      return std::make_pair(lhs == rhs, class_digest(z) + ";" + class_digest(w));
    });
  }
  for (long n : {-1L, 2L, 3L}) {
    for (int k = 0; k < 2; ++k) {
      std::string suffix = "." + std::to_string(n) + "." + std::to_string(k);
      set.add("formulas12.b_graph_left" + suffix, [ctx, a, aa, n, &set, suffix]() {
        Rng rng(set.check_seed("formulas12.b_graph_left" + suffix));
        Correspondence alpha = random_correspondence(rng, aa);
        Correspondence lhs = compose(graph(ctx, n), alpha);
        Correspondence rhs{pushforward(scale_pair(a, 1, n), alpha.value)};
        return std::make_pair(lhs == rhs, class_digest(alpha.value));
      });
      set.add("formulas12.b_tgraph_left" + suffix, [ctx, a, aa, n, &set, suffix]() {
        Rng rng(set.check_seed("formulas12.b_tgraph_left" + suffix));
        Correspondence alpha = random_correspondence(rng, aa);
        Correspondence lhs = compose(transpose_graph(ctx, n), alpha);
        Correspondence rhs{pullback(scale_pair(a, 1, n), alpha.value)};
        return std::make_pair(lhs == rhs, class_digest(alpha.value));
      });
      set.add("formulas12.b_graph_right" + suffix, [ctx, a, aa, n, &set, suffix]() {
        Rng rng(set.check_seed("formulas12.b_graph_right" + suffix));
        Correspondence alpha = random_correspondence(rng, aa);
        Correspondence lhs = compose(alpha, graph(ctx, n));
        Correspondence rhs{pullback(scale_pair(a, n, 1), alpha.value)};
        return std::make_pair(lhs == rhs, class_digest(alpha.value));
      });
      set.add("formulas12.b_tgraph_right" + suffix, [ctx, a, aa, n, &set, suffix]() {
        Rng rng(set.check_seed("formulas12.b_tgraph_right" + suffix));
        Correspondence alpha = random_correspondence(rng, aa);
        Correspondence lhs = compose(alpha, transpose_graph(ctx, n));
        Correspondence rhs{pushforward(scale_pair(a, n, 1), alpha.value)};
        return std::make_pair(lhs == rhs, class_digest(alpha.value));
      });
    }
  }
}

// ---- kunneth -----------------------------------------------------------

void kunneth_checks(CheckSet& set, const PolarizedContext& ctx) {
  auto pis = std::make_shared<const std::vector<Correspondence>>(kunneth_idempotents(ctx));
  std::string inputs = "g=" + std::to_string(ctx.g);
  set.add("kunneth.sum", [ctx, pis, inputs]() {
    Correspondence sum{zero_class(pis->front().value.variety)};
    for (const auto& pi : *pis) sum = sum + pi;
    return std::make_pair(sum == diagonal_class(ctx), inputs);
  });
  for (int i = 0; i <= 2 * ctx.g; ++i) {
    for (int j = 0; j <= 2 * ctx.g; ++j) {
      std::string id = "kunneth.orth." + std::to_string(i) + "." + std::to_string(j);
      set.add(id, [pis, i, j, inputs]() {
        Correspondence prod = compose(pis->at(static_cast<std::size_t>(i)),
                                      pis->at(static_cast<std::size_t>(j)));
        bool ok = (i == j) ? prod == pis->at(static_cast<std::size_t>(i))
                           : prod.value.is_zero();
        return std::make_pair(ok, inputs);
      });
    }
  }
  for (long k : {2L, 3L}) {
    for (int i = 0; i <= 2 * ctx.g; ++i) {
      std::string id = "kunneth.scale." + std::to_string(k) + "." + std::to_string(i);
      set.add(id, [ctx, pis, k, i, inputs]() {
        ProductVariety a(ctx, 1);
        CohClass pulled = pullback(scale_pair(a, 1, k), pis->at(static_cast<std::size_t>(i)).value);
        CohClass expected = pis->at(static_cast<std::size_t>(i)).value.scaled(pow_rat(Rational(k), i));
        return std::make_pair(pulled == expected, inputs);
      });
    }
  }
  if (ctx.g <= 2) {
    set.add("kunneth.eigensplit", [ctx, pis, inputs]() {
      // (1,2)^* is diagonalizable with eigenvalues 2^i and eigenspace
      // dimensions matching the idempotent split of the diagonal.
      ProductVariety a(ctx, 1);
      ProductVariety aa(ctx, 2);
      std::size_t dim = std::size_t(1) << aa.generator_count();
      LinearMap op(dim, dim);
      for (std::size_t j = 0; j < dim; ++j) {
        CohClass mu{aa, ExtClass::monomial(aa.algebra(), Mask(j), 1)};
        CohClass img = pullback(scale_pair(a, 1, 2), mu);
        for (const auto& [m, c] : img.value.terms()) op.set(static_cast<std::size_t>(m), j, c);
      }
      std::vector<Rational> eigenvalues;
      for (int i = 0; i <= 2 * ctx.g; ++i) eigenvalues.push_back(pow_rat(2, i));
      auto spaces = eigenspace_split(op, eigenvalues);
      bool ok = true;
      for (int i = 0; i <= 2 * ctx.g; ++i) {
        const CohClass& pi = pis->at(static_cast<std::size_t>(i)).value;
        Vec v(dim, Rational(0));
        for (const auto& [m, c] : pi.value.terms()) v[static_cast<std::size_t>(m)] = c;
        if (!is_zero_vec(sub_vec(op.apply(v), scaled_vec(v, pow_rat(2, i))))) ok = false;
        if (spaces[static_cast<std::size_t>(i)].empty()) ok = false;
      }
      return std::make_pair(ok, inputs);
    });
  }
}

// ---- fourier -----------------------------------------------------------

void fourier_checks(CheckSet& set, const PolarizedContext& ctx) {
  ProductVariety a(ctx, 1);
  for (int k = 0; k < 10; ++k) {
    std::string id = "fourier.inversion." + std::to_string(k);
    set.add(id, [ctx, a, &set, id]() {
      Rng rng(set.check_seed(id));
      CohClass z = rng.coh_class(a);
      CohClass lhs = fourier(fourier(z));
      CohClass rhs = pullback(mult_map(a, -1), z).scaled(pow_rat(-1, ctx.g));
      return std::make_pair(lhs == rhs, class_digest(z));
    });
  }
  for (int k = 0; k < 5; ++k) {
    std::string id = "fourier.weight." + std::to_string(k);
    set.add(id, [ctx, a, &set, id]() {
      Rng rng(set.check_seed(id));
      bool ok = true;
      for (const auto& [i, part] : weight_components(rng.coh_class(a))) {
        CohClass f = fourier(part);
        int deg = 0;
        if (!f.value.is_homogeneous(&deg)) ok = false;
        if (!f.is_zero() && deg != 2 * ctx.g - i) ok = false;
      }
      return std::make_pair(ok, id);
    });
    std::string id2 = "fourier.viacorr." + std::to_string(k);
    set.add(id2, [ctx, a, &set, id2]() {
      Rng rng(set.check_seed(id2));
      CohClass z = rng.coh_class(a);
      ProductVariety aa(ctx, 2);
      Correspondence f = Correspondence::on(
          exp_class(poincare_class(aa)).scaled(Rational(1) / ctx.degree_d()));
      return std::make_pair(apply(f, z) == fourier(z), class_digest(z));
    });
  }
  for (int q = 0; q <= ctx.g; ++q) {
    std::string id = "fourier.theta_power." + std::to_string(q);
    set.add(id, [ctx, a, q, id]() {
      CohClass th = theta(a);
      CohClass zq = one_class(a);
      for (int i = 0; i < q; ++i) zq = zq * th;
      zq = zq.scaled(Rational(1) / factorial(static_cast<unsigned long>(q)));
      int r = ctx.g - q;
      CohClass expected = one_class(a);
      for (int i = 0; i < r; ++i) expected = expected * th;
      expected = expected.scaled(pow_rat(-1, r) / factorial(static_cast<unsigned long>(r)));
      return std::make_pair(fourier(zq) == expected, id);
    });
  }
}

// ---- lefschetz ---------------------------------------------------------

FreeGenerator random_generator(Rng& rng, long g, int index) {
  while (true) {
    long p = rng.int_in(0, 3);
    long s = rng.int_in(-2, 4);
    long lambda = g + s - 2 * p;
    if (lambda >= 0 && lambda <= 10)
      return FreeGenerator{"z" + std::to_string(index), lambda, Rational(p), s};
  }
}

void lefschetz_checks(CheckSet& set, const PolarizedContext& ctx) {
  std::string inputs = "g=" + std::to_string(ctx.g);

  for (int i = 0; i <= ctx.g; ++i) {
    std::string id = "lefschetz.hl_bijective." + std::to_string(i);
    set.add(id, [ctx, i, inputs]() {
      // theta^{g-i}: H^i -> H^{2g-i} through (p, q, s) = (i, g, i).
      HardLefschetzResult res = hard_lefschetz_check(ctx, i, ctx.g, i);
      return std::make_pair(res.matches && res.injective && res.surjective, inputs);
    });
  }

  if (ctx.g <= 3) {
    auto action = std::make_shared<const ChowAction>(build_action(ctx));
    for (int k = 0; k < 5; ++k) {
      std::string id = "lefschetz.reconstruct." + std::to_string(k);
      set.add(id, [action, &set, id]() {
        Rng rng(set.check_seed(id));
        int degree = static_cast<int>(rng.int_in(0, 2 * action->ctx.g));
        CohClass z = rng.homogeneous_class(action->variety, degree);
        CohClass sum = zero_class(action->variety);
        for (const auto& part : primitive_decomposition(z)) {
          sum = sum + part.component;
          // component = theta^k primitive, exactly
          CohClass check = part.primitive;
          CohClass th = theta(action->variety);
          for (long i = 0; i < part.theta_power; ++i) check = check * th;
          if (!(check == part.component)) return std::make_pair(false, class_digest(z));
        }
        return std::make_pair(sum == z, class_digest(z));
      });
    }
    for (int q = 0; q <= ctx.g; ++q) {
      std::string id = "lefschetz.fourier_prim.model.q" + std::to_string(q);
      set.add(id, [action, q, inputs]() {
        LefschetzReport r = fourier_primitive_check(action->triple, q);
        return std::make_pair(r.all_pass(), inputs);
      });
    }
    set.add("lefschetz.predicate.model", [action, ctx, inputs]() {
      bool ok = true;
      for (long p = 0; p <= ctx.g + 1; ++p)
        for (long q = p; q <= ctx.g + 1; ++q)
          for (long s : {-1L, 0L, 1L, 2L})
            if (!hard_lefschetz_check(ctx, p, q, s).matches) ok = false;
      return std::make_pair(ok, inputs);
    });
    set.add("lefschetz.primdim", [action, inputs]() {
      auto spaces = primitive_subspace(action->triple);
      auto blocks = decompose(action->triple);
      std::map<long, std::size_t> from_blocks;
      for (const auto& b : blocks) ++from_blocks[-b.lambda];
      std::map<long, std::size_t> from_spaces;
      for (const auto& ws : spaces) from_spaces[ws.weight] = ws.basis.size();
      return std::make_pair(from_blocks == from_spaces, inputs);
    });
  }

  for (int k = 0; k < 4; ++k) {
    std::string id = "lefschetz.free" + std::to_string(k);
    set.add(id + ".fourier_prim", [ctx, &set, id]() {
      Rng rng(set.check_seed(id));
      std::vector<FreeGenerator> gens;
      int count = static_cast<int>(rng.int_in(1, 4));
      for (int i = 0; i < count; ++i) gens.push_back(random_generator(rng, ctx.g, i));
      auto [mod, t] = build_free_module(ctx.g, gens);
      (void)mod;
      bool ok = true;
      long max_lambda = 0;
      for (const auto& gen : gens) max_lambda = std::max(max_lambda, gen.lambda);
      for (long q = 0; q <= max_lambda; ++q)
        if (!fourier_primitive_check(t, q).all_pass()) ok = false;
      return std::make_pair(ok, id);
    });
    set.add(id + ".predicate", [ctx, &set, id]() {
      Rng rng(set.check_seed(id));
      std::vector<FreeGenerator> gens;
      int count = static_cast<int>(rng.int_in(1, 4));
      for (int i = 0; i < count; ++i) gens.push_back(random_generator(rng, ctx.g, i));
      auto [mod, t] = build_free_module(ctx.g, gens);
      bool ok = true;
      for (long p = 0; p <= 3; ++p)
        for (long q = p; q <= 4; ++q)
          for (long s = -2; s <= 4; ++s)
            if (!hard_lefschetz_check(mod, t, p, q, s).matches) ok = false;
      return std::make_pair(ok, id);
    });
    set.add(id + ".filtration", [ctx, &set, id]() {
      Rng rng(set.check_seed(id));
      std::vector<FreeGenerator> gens;
      int count = static_cast<int>(rng.int_in(1, 4));
      for (int i = 0; i < count; ++i) gens.push_back(random_generator(rng, ctx.g, i));
      auto [mod, t] = build_free_module(ctx.g, gens);
      bool ok = true;
      for (long p = 0; p <= 3; ++p)
        for (long q = p; q <= 4; ++q)
          if (!filtration_lefschetz_check(mod, t, p, q).all_pass()) ok = false;
      return std::make_pair(ok, id);
    });
  }

  for (long p = 0; p <= ctx.g / 2; ++p) {
    for (long s : {-2L, -1L, 0L}) {
      long lambda = ctx.g + s - 2 * p;
      if (lambda < 0) continue;
      std::string id = "lefschetz.annihilation.p" + std::to_string(p) + ".s" + std::to_string(s);
      set.add(id, [ctx, p, s, inputs]() {
        LefschetzReport r = negative_s_annihilation_check(ctx.g, p, s);
        return std::make_pair(r.all_pass(), inputs);
      });
    }
  }
}

// ---- demazure ----------------------------------------------------------

void demazure_checks(CheckSet& set, const PolarizedContext& ctx) {
  std::string inputs = "g=" + std::to_string(ctx.g);
  set.add("demazure.model", [ctx, inputs]() {
    ProductVariety a(ctx, 1);
    std::size_t dim = std::size_t(1) << a.generator_count();
    CohClass th = theta(a);
    auto beta_u = [&](const Rational& s) {
      LinearMap m(dim, dim);
      CohClass e = exp_class(th.scaled(s));
      for (std::size_t j = 0; j < dim; ++j) {
        CohClass img = e * CohClass{a, ExtClass::monomial(a.algebra(), Mask(j), 1)};
        for (const auto& [mm, c] : img.value.terms()) m.set(static_cast<std::size_t>(mm), j, c);
      }
      return m;
    };
    auto beta_t = [&](const Rational& t) {
      LinearMap m(dim, dim);
      for (std::size_t j = 0; j < dim; ++j)
        m.set(j, j, pow_rat(t, mask_degree(Mask(j)) - ctx.g));
      return m;
    };
    LinearMap h(dim, dim);
    for (std::size_t j = 0; j < dim; ++j) {
      CohClass img = fourier(CohClass{a, ExtClass::monomial(a.algebra(), Mask(j), 1)});
      for (const auto& [mm, c] : img.value.terms()) h.set(static_cast<std::size_t>(mm), j, c);
    }
    DemazureReport r = demazure_check(beta_u, beta_t, h);
    return std::make_pair(r.ok(), inputs);
  });
  set.add("demazure.free", [ctx, &set, inputs]() {
    Rng rng(set.check_seed("demazure.free"));
    std::vector<FreeGenerator> gens;
    int count = static_cast<int>(rng.int_in(2, 4));
    for (int i = 0; i < count; ++i) gens.push_back(random_generator(rng, ctx.g, i));
    auto built = build_free_module(ctx.g, gens);
    const Sl2Triple& t = built.second;
    auto beta_u = [&t](const Rational& s) { return exp_nilpotent(t.X, s); };
    auto beta_t = [&t](const Rational& s) {
      LinearMap m(t.dim, t.dim);
      for (std::size_t j = 0; j < t.dim; ++j) {
        Rational w = t.H.entry(j, j);
        m.set(j, j, pow_rat(s, w.get_num().get_si()));
      }
      return m;
    };
    LinearMap h = act_matrix(GroupElement::w(), t);
    DemazureReport r = demazure_check(beta_u, beta_t, h);
    return std::make_pair(r.ok(), inputs);
  });
  set.add("demazure.identity_fails", [ctx, inputs]() {
    // Control: h = identity violates (ii) on any module with a nonzero
    // weight space.
    auto built = build_free_module(ctx.g, {FreeGenerator{"z", ctx.g, Rational(0), 0}});
    const Sl2Triple& t = built.second;
    auto beta_u = [&t](const Rational& s) { return exp_nilpotent(t.X, s); };
    auto beta_t = [&t](const Rational& s) {
      LinearMap m(t.dim, t.dim);
      for (std::size_t j = 0; j < t.dim; ++j)
        m.set(j, j, pow_rat(s, t.H.entry(j, j).get_num().get_si()));
      return m;
    };
    DemazureReport r = demazure_check(beta_u, beta_t, LinearMap::identity(t.dim));
    return std::make_pair(!r.ok(), inputs);
  });
}

// ---- isogeny -----------------------------------------------------------

void isogeny_checks(CheckSet& set, const PolarizedContext& ctx) {
  std::string inputs = "g=" + std::to_string(ctx.g);
  PolarizedContext principal = PolarizedContext::make(ctx.g, std::vector<long>(ctx.g, 1));
  std::vector<std::vector<long>> diag(static_cast<std::size_t>(ctx.g),
                                      std::vector<long>(static_cast<std::size_t>(ctx.g), 0));
  for (int i = 0; i < ctx.g; ++i)
    diag[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = ctx.type[static_cast<std::size_t>(i)];
  auto pi = std::make_shared<const Isogeny>(Isogeny::make(ctx, principal, diag));

  set.add("isogeny.unit", [pi, principal, ctx, inputs]() {
    Correspondence transferred = isogeny_transfer(*pi, diagonal_class(principal));
    return std::make_pair(transferred == diagonal_class(ctx), inputs);
  });
  set.add("isogeny.delta_exp", [pi, principal, ctx, inputs]() {
    ProductVariety a0(principal, 1);
    ProductVariety a(ctx, 1);
    Correspondence lhs = isogeny_pullback_pair(*pi, diagonal_push(exp_class(theta(a0))));
    Correspondence rhs = diagonal_push(exp_class(theta(a))).scaled(pi->degree());
    return std::make_pair(lhs == rhs, inputs);
  });
  set.add("isogeny.poincare", [pi, principal, ctx, inputs]() {
    ProductVariety aa0(principal, 2);
    ProductVariety aa(ctx, 2);
    Correspondence lhs =
        isogeny_pullback_pair(*pi, Correspondence::on(exp_class(poincare_class(aa0))));
    Correspondence rhs = Correspondence::on(exp_class(poincare_class(aa)));
    return std::make_pair(lhs == rhs, inputs);
  });
  for (int k = 0; k < 3; ++k) {
    std::string id = "isogeny.compose." + std::to_string(k);
    set.add(id, [pi, principal, &set, id]() {
      Rng rng(set.check_seed(id));
      ProductVariety aa0(principal, 2);
      Correspondence alpha = random_correspondence(rng, aa0, 4);
      Correspondence beta = random_correspondence(rng, aa0, 4);
      Correspondence lhs = isogeny_transfer(*pi, compose(beta, alpha));
      Correspondence rhs = compose(isogeny_transfer(*pi, beta), isogeny_transfer(*pi, alpha));
      return std::make_pair(lhs == rhs,
                            class_digest(alpha.value) + ";" + class_digest(beta.value));
    });
  }
}

struct SuiteDef {
  const char* name;
  int max_g;
  void (*build)(CheckSet&, const PolarizedContext&);
};

const SuiteDef kSuites[] = {
    {"brackets", 4, brackets_checks},
    {"sl2z", 2, sl2z_checks},
    {"formulas12", 3, formulas12_checks},
    {"kunneth", 3, kunneth_checks},
    {"fourier", 3, fourier_checks},
    {"lefschetz", 4, lefschetz_checks},
    {"demazure", 4, demazure_checks},
    {"isogeny", 3, isogeny_checks},
};

}  // namespace

std::vector<std::string> suite_names() {
  std::vector<std::string> names;
  for (const auto& s : kSuites) names.push_back(s.name);
  names.push_back("all");
  return names;
}

int suite_max_g(const std::string& name) {
  if (name == "all") return 4;
  for (const auto& s : kSuites)
    if (name == s.name) return s.max_g;
  fail(Errc::unknown_suite, "unknown suite: " + name);
}

SuiteReport run_suite(const std::string& name, int g, std::vector<long> type,
                      std::uint64_t seed) {
  PolarizedContext ctx = PolarizedContext::make(g, std::move(type));
  SuiteReport report;
  report.suite = name;
  report.g = g;
  report.type = ctx.type;
  report.seed = seed;

  CheckSet set;
  set.seed = seed;
  bool found = false;
  for (const auto& s : kSuites) {
    if (name == "all") {
      found = true;
      if (g <= s.max_g) s.build(set, ctx);
    } else if (name == s.name) {
      found = true;
      if (g > s.max_g)
        fail(Errc::dimension_guard,
             "suite " + name + " supports g <= " + std::to_string(s.max_g));
      s.build(set, ctx);
    }
  }
  if (!found) fail(Errc::unknown_suite, "unknown suite: " + name);
  if (name == "all" && set.checks.empty())
    fail(Errc::dimension_guard, "no suite supports g = " + std::to_string(g));

  report.records = run_checks(set.checks);
  std::sort(report.records.begin(), report.records.end(),
            [](const CheckRecord& a, const CheckRecord& b) { return a.id < b.id; });
  return report;
}

}  // namespace sl2chow
