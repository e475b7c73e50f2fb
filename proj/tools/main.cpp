#include <CLI11.hpp>
#include <cctype>
#include <iostream>
#include <string>
#include <vector>

#include "sl2chow/action.hpp"
#include "sl2chow/expr.hpp"
#include "sl2chow/lefschetz.hpp"
#include "sl2chow/suites.hpp"

namespace {

using namespace sl2chow;

constexpr int kExitPass = 0;
constexpr int kExitCheckFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kExitDimensionGuard = 3;

std::vector<long> parse_type(const std::string& text) {
  std::vector<long> type;
  std::string cur;
  for (char c : text) {
    if (c == ',') {
      type.push_back(std::stol(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (!cur.empty()) type.push_back(std::stol(cur));
  return type;
}

GroupElement parse_matrix(const std::string& text) {
  std::vector<Rational> entries;
  std::string cur;
  for (char c : text) {
    if (c == ',' || c == ';') {
      entries.push_back(rat_from_string(cur));
      cur.clear();
    } else if (!std::isspace(static_cast<unsigned char>(c))) {
      cur += c;
    }
  }
  if (!cur.empty()) entries.push_back(rat_from_string(cur));
  if (entries.size() != 4) fail(Errc::bad_argument, "matrix must have 4 entries: \"a,b;c,d\"");
  return GroupElement::make(entries[0], entries[1], entries[2], entries[3]);
}

// Correspondence mini-language for `compose`:
//   diag | w | u:a | v:a | t:n | graph:n | tgraph:n | push:EXPR
Correspondence parse_correspondence(const std::string& text, const PolarizedContext& ctx) {
  auto colon = text.find(':');
  std::string head = text.substr(0, colon);
  std::string arg = colon == std::string::npos ? "" : text.substr(colon + 1);
  if (head == "diag") return diagonal_class(ctx);
  if (head == "w") {
    ProductVariety aa(ctx, 2);
    return Correspondence::on(exp_class(poincare_class(aa)).scaled(Rational(1) / ctx.degree_d()));
  }
  if (head == "u") return diagonal_push(exp_class(theta(ProductVariety(ctx, 1)).scaled(rat_from_string(arg))));
  if (head == "v") {
    Rational s = rat_from_string(arg);
    if (s == 0) return diagonal_class(ctx);
    ProductVariety one(ctx, 1);
    CohClass dt = pullback(difference_map(one), theta(one));
    return Correspondence::on(
        exp_class(dt.scaled(Rational(1) / s)).scaled(pow_rat(s, ctx.g) / ctx.degree_d()));
  }
  if (head == "t") {
    Rational s = rat_from_string(arg);
    if (s == 0) fail(Errc::bad_argument, "torus parameter must be nonzero");
    auto pis = kunneth_idempotents(ctx);
    Correspondence sum{zero_class(pis.front().value.variety)};
    for (std::size_t i = 0; i < pis.size(); ++i)
      sum = sum + pis[i].scaled(pow_rat(s, static_cast<long>(i)));
    return sum.scaled(pow_rat(s, -ctx.g));
  }
  if (head == "graph") return graph(ctx, std::stol(arg));
  if (head == "tgraph") return transpose_graph(ctx, std::stol(arg));
  if (head == "push") return diagonal_push(parse_class(arg, ProductVariety(ctx, 1)));
  fail(Errc::bad_argument, "unknown correspondence: " + text);
}

struct CommonOptions {
  int g = 1;
  std::string type = "1";
  std::string format = "text";

  PolarizedContext context() const { return PolarizedContext::make(g, parse_type(type)); }
};

void add_common(CLI::App* cmd, CommonOptions& opts) {
  cmd->add_option("--g", opts.g, "abelian variety dimension")->required();
  cmd->add_option("--type", opts.type, "polarization type c1,c2,..")->required();
  cmd->add_option("--format", opts.format, "text|structured")
      ->check(CLI::IsMember({"text", "structured"}));
}

void print_result(const CommonOptions& opts, const std::string& command,
                  const std::vector<std::pair<std::string, std::string>>& fields) {
  if (opts.format == "structured") {
    std::cout << "format: 1\n";
    std::cout << "command: " << command << "\n";
    std::cout << "g: " << opts.g << "\n";
    std::cout << "type: " << opts.type << "\n";
    for (const auto& [key, value] : fields) std::cout << key << ": " << value << "\n";
  } else {
    for (const auto& [key, value] : fields)
      if (key == "result") std::cout << value << "\n";
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact SL2 correspondence calculus on polarized abelian varieties"};
  app.require_subcommand(1);

  CommonOptions fourier_opts;
  std::string fourier_expr;
  CLI::App* cmd_fourier = app.add_subcommand("fourier", "Fourier transform of a class");
  add_common(cmd_fourier, fourier_opts);
  cmd_fourier->add_option("--expr", fourier_expr, "class expression")->required();

  CommonOptions act_opts;
  std::string act_expr;
  std::string act_matrix;
  CLI::App* cmd_act = app.add_subcommand("act", "act by an SL2(Q) element");
  add_common(cmd_act, act_opts);
  cmd_act->add_option("--expr", act_expr, "class expression")->required();
  cmd_act->add_option("--matrix", act_matrix, "matrix \"a,b;c,d\" with det 1")->required();

  CommonOptions compose_opts;
  std::string compose_lhs, compose_rhs;
  CLI::App* cmd_compose = app.add_subcommand("compose", "compose two correspondences");
  add_common(cmd_compose, compose_opts);
  cmd_compose->add_option("--lhs", compose_lhs, "left correspondence")->required();
  cmd_compose->add_option("--rhs", compose_rhs, "right correspondence")->required();

  CommonOptions decompose_opts;
  std::string decompose_expr;
  CLI::App* cmd_decompose = app.add_subcommand("decompose", "primitive decomposition");
  add_common(cmd_decompose, decompose_opts);
  cmd_decompose->add_option("--expr", decompose_expr, "homogeneous class expression")->required();

  CommonOptions suite_opts;
  std::string suite_name = "all";
  std::uint64_t suite_seed = 0;
  CLI::App* cmd_suite = app.add_subcommand("suite", "run a verification suite");
  add_common(cmd_suite, suite_opts);
  cmd_suite->add_option("--name", suite_name, "suite name (or 'all')");
  cmd_suite->add_option("--seed", suite_seed, "random seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitPass : kExitUsage;
  }

  try {
    if (cmd_fourier->parsed()) {
      ProductVariety a(fourier_opts.context(), 1);
      CohClass z = parse_class(fourier_expr, a);
      print_result(fourier_opts, "fourier",
                   {{"expr", fourier_expr}, {"result", print_class(fourier(z))}});
      return kExitPass;
    }
    if (cmd_act->parsed()) {
      ProductVariety a(act_opts.context(), 1);
      CohClass z = parse_class(act_expr, a);
      GroupElement m = parse_matrix(act_matrix);
      print_result(act_opts, "act",
                   {{"expr", act_expr}, {"matrix", act_matrix},
                    {"result", print_class(act_general(m, z))}});
      return kExitPass;
    }
    if (cmd_compose->parsed()) {
      PolarizedContext ctx = compose_opts.context();
      Correspondence lhs = parse_correspondence(compose_lhs, ctx);
      Correspondence rhs = parse_correspondence(compose_rhs, ctx);
      print_result(compose_opts, "compose",
                   {{"lhs", compose_lhs}, {"rhs", compose_rhs},
                    {"result", print_monomials(compose(lhs, rhs).value)}});
      return kExitPass;
    }
    if (cmd_decompose->parsed()) {
      ProductVariety a(decompose_opts.context(), 1);
      CohClass z = parse_class(decompose_expr, a);
      std::vector<std::pair<std::string, std::string>> fields{{"expr", decompose_expr}};
      std::string text;
      for (const auto& part : primitive_decomposition(z)) {
        std::string line = "q=" + std::to_string(part.q_index) +
                           " theta_power=" + std::to_string(part.theta_power) +
                           " component=" + print_class(part.component) +
                           " primitive=" + print_class(part.primitive);
        fields.emplace_back("component", line);
        text += line + "\n";
      }
      if (decompose_opts.format == "structured") {
        print_result(decompose_opts, "decompose", fields);
      } else {
        std::cout << (text.empty() ? "0\n" : text);
      }
      return kExitPass;
    }
    if (cmd_suite->parsed()) {
      SuiteReport report =
          run_suite(suite_name, suite_opts.g, parse_type(suite_opts.type), suite_seed);
      std::cout << (suite_opts.format == "structured" ? format_structured(report)
                                                      : format_text(report));
      return report.all_pass() ? kExitPass : kExitCheckFailure;
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.code() == Errc::dimension_guard ? kExitDimensionGuard : kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
