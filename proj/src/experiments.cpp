#include "gausscalc/experiments.hpp"

#include <cmath>
#include <random>
#include <sstream>

#include "gausscalc/evaluate.hpp"
#include "gausscalc/matrixrep.hpp"
#include "gausscalc/random_poly.hpp"
#include "gausscalc/text.hpp"

namespace gausscalc {

namespace {

Json float_polynomial(const PolynomialF& f) {
  Json terms = Json::array();
  for (auto it = f.terms().rbegin(); it != f.terms().rend(); ++it)
    terms.push_back(Json::array({to_string(it->first), it->second}));
  return terms;
}

Json lp_json(const LpEstimate& e) {
  return Json{{"value", e.value},
              {"abs_error_bound", e.abs_error_bound},
              {"method", std::string(to_string(e.method))},
              {"samples_or_nodes", e.samples_or_nodes}};
}

void put_params(Json& params, const VarianceParams& vp) {
  params["s"] = to_string(vp.s());
  if (vp.lambda()) params["lambda"] = to_string(*vp.lambda());
  params["lambda_squared"] = to_string(vp.lambda_squared());
  params["t"] = to_string(vp.t());
  params["tau"] = vp.tau();
}

bool is_two(double x) { return x == 2.0; }

}  // namespace

Report check_identity(const Polynomial& f, const VarianceParams& params, double tol) {
  Report r;
  r.command = "check-identity";
  r.params["f"] = to_string(f);
  put_params(r.params, params);
  if (params.lambda()) {
    r.params["mode"] = "exact";
    auto check = verify_ident2(f, params);
    r.add("dilated_heat", Json{{"value", to_string(check.lhs)}});
    r.add("hermite_semigroup", Json{{"value", to_string(check.rhs)}});
    r.add("witness", Json{{"value", to_string(check.witness)}, {"holds", check.holds}});
    if (!check.holds) r.fail();
  } else {
    r.params["mode"] = "float";
    r.params["tol"] = tol;
    auto check = verify_ident2_float(f, params, tol);
    r.add("dilated_heat", Json{{"terms", float_polynomial(check.lhs)}});
    r.add("hermite_semigroup", Json{{"terms", float_polynomial(check.rhs)}});
    r.add("witness", Json{{"terms", float_polynomial(check.witness)},
                          {"max_discrepancy", check.max_discrepancy},
                          {"holds", check.holds}});
    if (!check.holds) r.fail();
  }
  return r;
}

Report check_commutator(const Polynomial& f) {
  Report r;
  r.command = "check-commutator";
  r.params["f"] = to_string(f);
  auto single = verify_commutator(f);
  r.add("commutator", Json{{"lhs", to_string(single.lhs)},
                           {"rhs", to_string(single.rhs)},
                           {"witness", to_string(single.witness)},
                           {"holds", single.holds}});
  auto nested = verify_double_commutator(f);
  r.add("double_commutator", Json{{"value", to_string(nested.lhs)},
                                  {"witness", to_string(nested.witness)},
                                  {"holds", nested.holds}});
  if (!single.holds || !nested.holds) r.fail();
  return r;
}

Report run_bch_check(const Rational& s, const Rational& lambda, Variable m, Exponent n,
                     double tol) {
  const GradedBasis basis(m, n);
  const BchReport b = bch_check(s, lambda, basis, tol);
  Report r;
  r.command = "bch-check";
  r.params["s"] = to_string(s);
  r.params["lambda"] = to_string(lambda);
  r.params["t"] = to_string(b.t);
  r.params["tau"] = b.tau;
  r.params["m"] = m;
  r.params["n"] = n;
  r.params["tol"] = tol;
  r.add("basis", Json{{"dimension", b.dimension}});
  r.add("bch", Json{{"discrepancy", b.bch_discrepancy}});
  r.add("bch2", Json{{"discrepancy", b.bch2_discrepancy}});
  r.add("scalar", Json{{"float", b.scalar_float},
                       {"exact", to_string(b.scalar_exact)},
                       {"exact_matches", b.scalar_exact_matches}});
  Json mismatches = Json::array();
  for (const auto& alpha : b.exact_mismatches) mismatches.push_back(to_string(alpha));
  r.add("exact_route", Json{{"mismatches", mismatches},
                            {"float_vs_exact_discrepancy", b.float_vs_exact_discrepancy}});
  if (!b.passed()) r.fail();
  return r;
}

Report print_hermite(const MultiIndex& alpha, const Rational& s) {
  const Variance var(s);
  const Polynomial h = hermite(alpha, s);
  const Rational expected = alpha.factorial() * ipow(s, alpha.degree());
  const Rational actual = norm_squared(h, var);
  Report r;
  r.command = "hermite";
  r.params["alpha"] = to_string(alpha);
  r.params["s"] = to_string(s);
  r.add("hermite", Json{{"value", to_string(h)}});
  r.add("norm_squared", Json{{"value", to_string(actual)},
                             {"expected", to_string(expected)},
                             {"holds", actual == expected}});
  if (actual != expected) r.fail();
  return r;
}

Report apply_heat(const Polynomial& f, const Rational& t) {
  Report r;
  r.command = "apply-heat";
  r.params["f"] = to_string(f);
  r.params["t"] = to_string(t);
  r.add("heat", Json{{"value", to_string(heat(f, t))}});
  return r;
}

Report nonclosability_demo(const Rational& s, std::uint32_t n, const Rational& t) {
  const Variance var(s);
  const Polynomial fn = nonclosability_sequence(n, s);
  const Rational norm_sq = norm_squared(fn, var);
  const Rational expected_norm_sq = 2 * s * s / n;
  const Polynomial lap = laplacian(fn);
  const Polynomial heated = heat(fn, t);
  const Polynomial shift = heated - fn;

  Report r;
  r.command = "nonclosability-demo";
  r.params["s"] = to_string(s);
  r.params["n"] = n;
  r.params["t"] = to_string(t);
  r.add("norm_squared", Json{{"value", to_string(norm_sq)},
                             {"expected", to_string(expected_norm_sq)},
                             {"holds", norm_sq == expected_norm_sq}});
  r.add("laplacian", Json{{"value", to_string(lap)}, {"holds", lap == Polynomial(2)}});
  r.add("heat", Json{{"value", to_string(heated)}});
  r.add("heat_minus_f", Json{{"value", to_string(shift)}, {"holds", shift == Polynomial(t)}});
  if (norm_sq != expected_norm_sq || lap != Polynomial(2) || shift != Polynomial(t)) r.fail();
  return r;
}

Report convolution_check(const Polynomial& f, const Rational& t,
                         const std::map<Variable, double>& x, std::size_t nodes) {
  const ConvolutionCheck c = heat_convolution_oracle(f, t, x, nodes);
  Report r;
  r.command = "convolution-check";
  r.params["f"] = to_string(f);
  r.params["t"] = to_string(t);
  Json point = Json::object();
  for (const auto& [v, xv] : x) point["x" + std::to_string(v)] = xv;
  r.params["x"] = point;
  r.params["nodes"] = nodes;
  const bool ok = c.relative <= 1e-10;
  r.add("convolution", Json{{"numeric", c.numeric},
                            {"algebraic", c.algebraic},
                            {"discrepancy", c.discrepancy},
                            {"relative", c.relative},
                            {"holds", ok}});
  if (!ok) r.fail();
  return r;
}

Rational l2_contraction_ratio(const Polynomial& f, const VarianceParams& params) {
  if (f.is_zero()) throw std::invalid_argument("l2_contraction_ratio: f must be nonzero");
  const HermiteExpansion e = hermite_expand(f, params.s());
  const Rational target = params.s() - params.t();
  Rational num = 0;
  Rational den = 0;
  for (const auto& [alpha, c] : e.coeffs) {
    const Rational w = c * c * alpha.factorial();
    num += w * ipow(target, alpha.degree());
    den += w * ipow(params.s(), alpha.degree());
  }
  return num / den;
}

bool hypercontractive_condition(double p, double q, const VarianceParams& params) {
  // (q-1)/(p-1) <= 1/lambda^2, written without division.
  const double lhs = (q - 1.0) * to_double(params.lambda_squared());
  const double rhs = p - 1.0;
  return lhs <= rhs * (1.0 + 1e-12);
}

NormComparison compare_norms(const Polynomial& f, double p, double q,
                             const VarianceParams& params, const LpBudget& budget) {
  NormComparison out;
  out.f = f;
  out.lhs = lp_norm(heat(f, params.t()), q, Variance(params.s() - params.t()), budget);
  out.rhs = lp_norm(f, p, Variance(params.s()), budget);
  return out;
}

Report sharpness_probe(const VarianceParams& params, const ProbeOptions& options) {
  if (!(options.p > 1.0) || !(options.q > 1.0))
    throw std::invalid_argument("sharpness_probe: p and q must exceed 1");
  const bool condition = hypercontractive_condition(options.p, options.q, params);

  Report r;
  r.command = "sharpness-probe";
  r.params["p"] = options.p;
  r.params["q"] = options.q;
  put_params(r.params, params);
  r.params["degree_cap"] = options.degree_cap;
  Json grid = Json::array();
  for (const auto& eps : options.epsilon_grid) grid.push_back(to_string(eps));
  r.params["epsilon_grid"] = grid;
  r.params["rel_tol"] = options.rel_tol;
  r.params["nodes_per_variable"] = options.budget.nodes_per_variable;
  r.params["mc_samples"] = options.budget.mc_samples;
  r.seed = options.budget.seed;
  r.add("condition", Json{{"holds", condition},
                          {"q_minus_1_over_p_minus_1", (options.q - 1.0) / (options.p - 1.0)},
                          {"s_over_s_minus_t", 1.0 / to_double(params.lambda_squared())}});

  std::vector<Polynomial> battery;
  for (Exponent n = 0; n <= options.degree_cap; ++n)
    battery.push_back(hermite(MultiIndex::variable(1, n), params.s()));
  for (const auto& eps : options.epsilon_grid)
    battery.push_back(Polynomial(1) + Polynomial::variable(1) * eps);

  const bool l2 = is_two(options.p) && is_two(options.q);
  std::optional<std::size_t> witness;
  bool contraction_failed = false;
  for (std::size_t i = 0; i < battery.size(); ++i) {
    const auto cmp = compare_norms(battery[i], options.p, options.q, params, options.budget);
    const double excess = cmp.lhs.value - cmp.rhs.value;
    const bool beyond_tol = excess > options.rel_tol * cmp.rhs.value;
    const bool certain =
        excess > options.rel_tol * cmp.rhs.value + cmp.lhs.abs_error_bound + cmp.rhs.abs_error_bound;
    Json rec{{"f", to_string(battery[i])},
             {"lhs", lp_json(cmp.lhs)},
             {"rhs", lp_json(cmp.rhs)},
             {"ratio", cmp.lhs.value / cmp.rhs.value}};
    if (l2) rec["exact_l2_ratio"] = to_string(l2_contraction_ratio(battery[i], params));
    rec["violates"] = condition ? beyond_tol : certain;
    r.add("battery", std::move(rec));
    if (condition && beyond_tol) contraction_failed = true;
    if (!condition && certain && !witness) witness = i;
  }

  if (condition) {
    r.verdict = contraction_failed ? Verdict::Fail : Verdict::Pass;
  } else if (witness) {
    r.add("witness", Json{{"f", to_string(battery[*witness])}, {"index", *witness}});
    r.verdict = Verdict::Pass;
  } else {
    r.add("witness",
          Json{{"f", nullptr}, {"note", "none found up to degree_cap " +
                                            std::to_string(options.degree_cap)}});
    r.verdict = Verdict::Inconclusive;
  }
  return r;
}

Report hypercontractivity_scan(const VarianceParams& params, const ScanOptions& options) {
  if (!(options.p > 1.0) || !(options.q > 1.0))
    throw std::invalid_argument("hypercontractivity_scan: p and q must exceed 1");
  const bool condition = hypercontractive_condition(options.p, options.q, params);
  const bool l2 = is_two(options.p) && is_two(options.q);

  Report r;
  r.command = "hypercontractivity-scan";
  r.params["p"] = options.p;
  r.params["q"] = options.q;
  put_params(r.params, params);
  r.params["degree_cap"] = options.degree_cap;
  r.params["random_count"] = options.random_count;
  r.params["rel_tol"] = options.rel_tol;
  if (!l2) {
    r.params["nodes_per_variable"] = options.budget.nodes_per_variable;
    r.params["mc_samples"] = options.budget.mc_samples;
  }
  r.seed = options.seed;
  r.add("condition", Json{{"holds", condition}});

  struct Item {
    Polynomial f;
    std::optional<MultiIndex> hermite_index;
  };
  std::vector<Item> grid;
  for (const auto& alpha : all_multi_indices(2, options.degree_cap))
    grid.push_back({hermite(alpha, params.s()), alpha});
  std::mt19937_64 rng(options.seed);
  const RandomPolynomialSpec spec{3, options.degree_cap, 5, 9, 4};
  for (std::size_t k = 0; k < options.random_count; ++k) grid.push_back({random_polynomial(rng, spec), {}});

  bool all_ok = true;
  const Variance source(params.s());
  const Variance target(params.s() - params.t());
  for (const auto& item : grid) {
    Json rec{{"f", to_string(item.f)}};
    bool ok = true;
    if (l2) {
      const Rational ratio = l2_contraction_ratio(item.f, params);
      // Independent route: Gaussian moments of heat(f, t) and f directly.
      const Rational direct = norm_squared(heat(item.f, params.t()), target) / norm_squared(item.f, source);
      rec["ratio_squared"] = to_string(ratio);
      rec["ratio"] = std::sqrt(to_double(ratio));
      rec["direct_matches"] = ratio == direct;
      ok = ratio <= 1 && ratio == direct;
      if (item.hermite_index) {
        const bool pure = ratio == ipow(params.lambda_squared(), item.hermite_index->degree());
        rec["pure_hermite_matches"] = pure;
        ok = ok && pure;
      }
    } else {
      const auto cmp = compare_norms(item.f, options.p, options.q, params, options.budget);
      rec["lhs"] = lp_json(cmp.lhs);
      rec["rhs"] = lp_json(cmp.rhs);
      rec["ratio"] = cmp.lhs.value / cmp.rhs.value;
      ok = cmp.lhs.value <= cmp.rhs.value * (1.0 + options.rel_tol);
    }
    rec["contracts"] = ok;
    all_ok = all_ok && ok;
    r.add(item.hermite_index ? "hermite" : "random", std::move(rec));
  }
  if (!condition) {
    r.verdict = Verdict::Inconclusive;
  } else {
    r.verdict = all_ok ? Verdict::Pass : Verdict::Fail;
  }
  return r;
}

}  // namespace gausscalc
