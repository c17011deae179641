#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "gausscalc/gaussian.hpp"
#include "gausscalc/report.hpp"
#include "gausscalc/semigroups.hpp"

namespace gausscalc {

// Each function here backs one CLI subcommand and returns its report. Exact
// values are recorded as strings in the polynomial/rational wire format.

Report check_identity(const Polynomial& f, const VarianceParams& params, double tol = 1e-12);

Report check_commutator(const Polynomial& f);

Report run_bch_check(const Rational& s, const Rational& lambda, Variable m, Exponent n,
                     double tol = 1e-10);

Report print_hermite(const MultiIndex& alpha, const Rational& s);

Report apply_heat(const Polynomial& f, const Rational& t);

/// f_n = (1/n) sum_{k<=n} (x_k^2 - s): reports ||f_n||^2 (expected 2 s^2 / n),
/// Delta f_n (expected 2) and heat(f_n, t) - f_n (expected t).
Report nonclosability_demo(const Rational& s, std::uint32_t n, const Rational& t);

Report convolution_check(const Polynomial& f, const Rational& t,
                         const std::map<Variable, double>& x, std::size_t nodes);

/// Exact L^2 ratio ||heat(f,t)||^2_{mu_{s-t}} / ||f||^2_{mu_s}
///   = sum c_alpha^2 alpha! (s-t)^|alpha| / sum c_alpha^2 alpha! s^|alpha|
/// from the Hermite expansion of f at variance s. Requires f != 0 and t < s.
Rational l2_contraction_ratio(const Polynomial& f, const VarianceParams& params);

/// (q-1)/(p-1) <= s/(s-t)
bool hypercontractive_condition(double p, double q, const VarianceParams& params);

struct NormComparison {
  Polynomial f;
  LpEstimate lhs;  // ||heat(f,t)||_{L^q(mu_{s-t})}
  LpEstimate rhs;  // ||f||_{L^p(mu_s)}
};

/// Numeric ||heat(f,t)||_q vs ||f||_p.
NormComparison compare_norms(const Polynomial& f, double p, double q,
                             const VarianceParams& params, const LpBudget& budget);

struct ProbeOptions {
  double p = 2.0;
  double q = 2.0;
  Exponent degree_cap = 6;
  std::vector<Rational> epsilon_grid{Rational(1, 10), Rational(1, 2), Rational(1), Rational(2)};
  LpBudget budget{};
  double rel_tol = 1e-6;
};

/// Fixed battery {h_{(n),s} : n <= degree_cap} followed by {1 + eps x1 : eps in
/// grid}. When the hypercontractive condition holds every member must satisfy
/// ||heat(f,t)||_q <= (1 + rel_tol) ||f||_p (pass/fail). When it fails the
/// first member violating the inequality beyond rel_tol plus both error bounds
/// is reported as a witness (pass), or the verdict is inconclusive.
Report sharpness_probe(const VarianceParams& params, const ProbeOptions& options);

struct ScanOptions {
  double p = 2.0;
  double q = 2.0;
  Exponent degree_cap = 6;
  std::size_t random_count = 10;
  std::uint64_t seed = 0;
  LpBudget budget{};
  double rel_tol = 1e-6;
};

/// Grid: every h_{alpha,s} with alpha supported on {x1, x2} and |alpha| <=
/// degree_cap, in graded-lex order, then `random_count` seeded random
/// polynomials (<= 3 variables, degree <= degree_cap, <= 5 terms). For p = q = 2
/// the ratio is the exact rational above, cross-checked against direct Gaussian
/// inner products; otherwise norms are numeric.
Report hypercontractivity_scan(const VarianceParams& params, const ScanOptions& options);

}  // namespace gausscalc
