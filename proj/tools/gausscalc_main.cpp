// gausscalc: exact heat / Hermite semigroup experiments on polynomials.
//
// Every subcommand prints a JSON report on stdout and a short summary on
// stderr. Exit status: 0 pass (or inconclusive), 1 a checked identity failed,
// 2 usage error.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "gausscalc/experiments.hpp"
#include "gausscalc/text.hpp"

namespace {

using namespace gausscalc;

constexpr int kUsageError = 2;

struct Common {
  std::string s = "1";
  std::string lambda;
  std::string t;
  std::string f;
  std::uint64_t seed = 0;
  std::string json_out;
  double tol = 0.0;  // 0 = command default
};

VarianceParams variance_params(const Common& c) {
  const Rational s = parse_rational(c.s);
  if (!c.lambda.empty() && !c.t.empty())
    throw std::invalid_argument("give either --lambda or --t, not both");
  if (!c.t.empty()) return VarianceParams::from_time(s, parse_rational(c.t));
  if (c.lambda.empty()) throw std::invalid_argument("one of --lambda or --t is required");
  return VarianceParams::from_lambda(s, parse_rational(c.lambda));
}

std::vector<Rational> rational_list(const std::string& text) {
  std::vector<Rational> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ','))
    if (!item.empty()) out.push_back(parse_rational(item));
  return out;
}

// "x1=1, x2=-1/2"
std::map<Variable, double> parse_point(const std::string& text) {
  std::map<Variable, double> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    item.erase(0, item.find_first_not_of(" \t"));
    item.erase(item.find_last_not_of(" \t") + 1);
    if (item.empty()) continue;
    auto eq = item.find('=');
    if (eq == std::string::npos || item.front() != 'x')
      throw std::invalid_argument("point entries look like x1=1/2, got '" + item + "'");
    const auto var = static_cast<Variable>(std::stoul(item.substr(1, eq - 1)));
    if (var == 0) throw std::invalid_argument("variable indices start at 1");
    out[var] = to_double(parse_rational(item.substr(eq + 1)));
  }
  return out;
}

void summarize(const Report& r) {
  std::cerr << r.command << ": " << to_string(r.verdict) << "\n";
  for (const auto& [name, record] : r.results) {
    std::cerr << "  " << name;
    for (const char* key : {"value", "holds", "discrepancy", "ratio", "violates", "f"}) {
      if (record.contains(key)) std::cerr << "  " << key << "=" << record[key].dump();
    }
    std::cerr << "\n";
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"gausscalc: heat semigroup, Hermite polynomials and hypercontractivity on polynomials"};
  app.require_subcommand(1);
  Common c;

  auto add_common = [&c](CLI::App* sub) {
    sub->add_option("--s", c.s, "variance s (rational)");
    sub->add_option("--lambda", c.lambda, "dilation factor lambda; t = s (1 - lambda^2)");
    sub->add_option("--t", c.t, "heat time t (rational)");
    sub->add_option("--f", c.f, "polynomial, e.g. \"x1^2 - 3/2 x2\"");
    sub->add_option("--seed", c.seed, "random seed");
    sub->add_option("--json-out", c.json_out, "also write the report to this file");
    sub->add_option("--tol", c.tol, "tolerance for float comparisons");
  };

  auto* check_identity_cmd = app.add_subcommand("check-identity", "dilation . heat == Hermite semigroup");
  add_common(check_identity_cmd);

  auto* commutator_cmd = app.add_subcommand("check-commutator", "[Delta, D] = 2 Delta and [Delta,[Delta,D]] = 0");
  add_common(commutator_cmd);

  Variable m = 1;
  Exponent n = 4;
  auto* bch_cmd = app.add_subcommand("bch-check", "matrix BCH factorization on the graded space");
  add_common(bch_cmd);
  bch_cmd->add_option("--m", m, "number of variables")->check(CLI::PositiveNumber);
  bch_cmd->add_option("--n", n, "maximum degree");

  std::string alpha_text;
  auto* hermite_cmd = app.add_subcommand("hermite", "print h_{alpha,s}");
  add_common(hermite_cmd);
  hermite_cmd->add_option("--alpha", alpha_text, "monomial x^alpha, e.g. \"x1^2 x3\"")->required();

  auto* heat_cmd = app.add_subcommand("apply-heat", "print e^{t Delta/2} f");
  add_common(heat_cmd);

  std::uint32_t demo_n = 100;
  auto* demo_cmd = app.add_subcommand("nonclosability-demo", "f_n -> 0 while Delta f_n = 2");
  add_common(demo_cmd);
  demo_cmd->add_option("--n", demo_n, "number of coordinates")->check(CLI::PositiveNumber);

  double p = 2.0;
  double q = 2.0;
  Exponent degree_cap = 6;
  std::size_t nodes = 128;
  std::uint64_t samples = 1'000'000;
  std::size_t random_count = 10;
  std::string epsilon_grid = "1/10,1/2,1,2";

  auto* scan_cmd = app.add_subcommand("hypercontractivity-scan", "contraction ratios over a fixed grid");
  add_common(scan_cmd);
  scan_cmd->add_option("--p", p, "source exponent");
  scan_cmd->add_option("--q", q, "target exponent");
  scan_cmd->add_option("--degree-cap", degree_cap, "maximum degree");
  scan_cmd->add_option("--random", random_count, "number of seeded random polynomials");
  scan_cmd->add_option("--nodes", nodes, "quadrature nodes per variable (non-even p)");
  scan_cmd->add_option("--samples", samples, "Monte Carlo samples (non-even p)");

  auto* probe_cmd = app.add_subcommand("sharpness-probe", "test the Lp -> Lq contraction on a fixed battery");
  add_common(probe_cmd);
  probe_cmd->add_option("--p", p, "source exponent");
  probe_cmd->add_option("--q", q, "target exponent");
  probe_cmd->add_option("--degree-cap", degree_cap, "maximum Hermite degree");
  probe_cmd->add_option("--epsilon-grid", epsilon_grid, "comma-separated rationals for 1 + eps x1");
  probe_cmd->add_option("--nodes", nodes, "quadrature nodes per variable (non-even p)");
  probe_cmd->add_option("--samples", samples, "Monte Carlo samples (non-even p)");

  std::string point_text;
  std::optional<std::size_t> conv_nodes;
  auto* conv_cmd = app.add_subcommand("convolution-check", "heat kernel integral vs algebraic heat");
  add_common(conv_cmd);
  conv_cmd->add_option("--x", point_text, "evaluation point, e.g. \"x1=1,x2=-1/2\"");
  conv_cmd->add_option("--nodes", conv_nodes, "quadrature nodes per variable");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kUsageError;
  }

  Report report;
  try {
    auto polynomial = [&c]() {
      if (c.f.empty()) throw std::invalid_argument("--f is required");
      return parse_polynomial(c.f);
    };
    auto time = [&c]() {
      if (c.t.empty()) throw std::invalid_argument("--t is required");
      return parse_rational(c.t);
    };
    LpBudget budget;
    budget.nodes_per_variable = nodes;
    budget.mc_samples = samples;
    budget.seed = c.seed;

    if (*check_identity_cmd) {
      report = check_identity(polynomial(), variance_params(c), c.tol > 0 ? c.tol : 1e-12);
    } else if (*commutator_cmd) {
      report = check_commutator(polynomial());
    } else if (*bch_cmd) {
      if (c.lambda.empty()) throw std::invalid_argument("--lambda is required");
      report = run_bch_check(parse_rational(c.s), parse_rational(c.lambda), m, n,
                             c.tol > 0 ? c.tol : 1e-10);
    } else if (*hermite_cmd) {
      report = print_hermite(parse_multi_index(alpha_text), parse_rational(c.s));
    } else if (*heat_cmd) {
      report = apply_heat(polynomial(), time());
    } else if (*demo_cmd) {
      report = nonclosability_demo(parse_rational(c.s), demo_n, time());
    } else if (*scan_cmd) {
      ScanOptions opts;
      opts.p = p;
      opts.q = q;
      opts.degree_cap = degree_cap;
      opts.random_count = random_count;
      opts.seed = c.seed;
      opts.budget = budget;
      if (c.tol > 0) opts.rel_tol = c.tol;
      report = hypercontractivity_scan(variance_params(c), opts);
    } else if (*probe_cmd) {
      ProbeOptions opts;
      opts.p = p;
      opts.q = q;
      opts.degree_cap = degree_cap;
      opts.epsilon_grid = rational_list(epsilon_grid);
      opts.budget = budget;
      if (c.tol > 0) opts.rel_tol = c.tol;
      report = sharpness_probe(variance_params(c), opts);
    } else if (*conv_cmd) {
      const Polynomial f = polynomial();
      const std::size_t minimum = static_cast<std::size_t>(std::max<std::int64_t>(f.degree(), 0) + 2) / 2;
      report = convolution_check(f, time(), parse_point(point_text), conv_nodes.value_or(minimum + 2));
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n\n" << app.help();
    return kUsageError;
  }

  const std::string json = report.dump();
  std::cout << json;
  if (!c.json_out.empty()) {
    std::ofstream out(c.json_out, std::ios::binary);
    if (!out) {
      std::cerr << "error: cannot write " << c.json_out << "\n";
      return kUsageError;
    }
    out << json;
  }
  summarize(report);
  return exit_code(report.verdict);
}
