#include "gausscalc/semigroups.hpp"

#include <algorithm>
#include <vector>

#include "gausscalc/evaluate.hpp"
#include "gausscalc/gaussian.hpp"

namespace gausscalc {

VarianceParams::VarianceParams(Rational s, Rational t, std::optional<Rational> lambda)
    : s_(std::move(s)), t_(std::move(t)), lambda_(std::move(lambda)) {
  if (s_ <= 0) throw std::invalid_argument("s must be positive");
  if (t_ >= s_) throw std::invalid_argument("t must be smaller than s");
  lambda_sq_ = (s_ - t_) / s_;
  if (!lambda_) lambda_ = exact_sqrt(lambda_sq_);
}

VarianceParams VarianceParams::from_time(Rational s, Rational t) {
  return VarianceParams(std::move(s), std::move(t), std::nullopt);
}

VarianceParams VarianceParams::from_lambda(Rational s, Rational lambda) {
  if (lambda <= 0) throw std::invalid_argument("lambda must be positive");
  Rational t = s * (1 - lambda * lambda);
  return VarianceParams(std::move(s), std::move(t), std::move(lambda));
}

double VarianceParams::lambda_double() const {
  return lambda_ ? to_double(*lambda_) : std::sqrt(to_double(lambda_sq_));
}

double VarianceParams::tau() const {
  // log(s/(s-t))/2 = -log(lambda); computed from the ratio for accuracy near 0.
  return -0.5 * std::log(to_double(lambda_sq_));
}

namespace {

double as_double(const Rational& r) { return to_double(r); }
double as_double(double d) { return d; }

template <class C>
IdentityCheck<C> compare(BasicPolynomial<C> lhs, BasicPolynomial<C> rhs) {
  IdentityCheck<C> out;
  out.witness = lhs - rhs;
  out.max_discrepancy = as_double(max_abs_coefficient(out.witness));
  out.lhs = std::move(lhs);
  out.rhs = std::move(rhs);
  out.holds = out.witness.is_zero();
  return out;
}

}  // namespace

IdentityCheck<Rational> verify_ident2(const Polynomial& f, const VarianceParams& params) {
  if (!params.lambda())
    throw std::invalid_argument("verify_ident2: lambda^2 = " + to_string(params.lambda_squared()) +
                                " is not a rational square; use float mode");
  const Rational& lambda = *params.lambda();
  return compare(dilate(heat(f, params.t()), lambda),
                 hermite_semigroup(f, params.s(), lambda));
}

IdentityCheck<double> verify_ident2_float(const Polynomial& f, const VarianceParams& params,
                                          double tol) {
  const PolynomialF ff = polynomial_cast<double>(f);
  const double lambda = params.lambda_double();
  auto out = compare(dilate(heat(ff, to_double(params.t())), lambda),
                     hermite_semigroup(ff, to_double(params.s()), lambda));
  const double scale =
      std::max({1.0, max_abs_coefficient(out.lhs), max_abs_coefficient(out.rhs)});
  out.holds = out.max_discrepancy <= tol * scale;
  return out;
}

IdentityCheck<Rational> verify_commutator(const Polynomial& f) {
  return compare(laplacian(euler_d(f)) - euler_d(laplacian(f)), laplacian(f) * Rational(2));
}

IdentityCheck<Rational> verify_double_commutator(const Polynomial& f) {
  const Polynomial lap = laplacian(f);
  Polynomial lhs = laplacian(laplacian(euler_d(f))) - laplacian(euler_d(lap)) * Rational(2) +
                   euler_d(laplacian(lap));
  return compare(std::move(lhs), Polynomial{});
}

ConvolutionCheck heat_convolution_oracle(const Polynomial& f, const Rational& t,
                                         const std::map<Variable, double>& x, std::size_t nodes) {
  if (t <= 0) throw std::invalid_argument("convolution oracle needs t > 0");
  const std::int64_t deg = std::max<std::int64_t>(f.degree(), 0);
  const auto needed = static_cast<std::size_t>((deg + 2) / 2);
  if (nodes < needed)
    throw std::invalid_argument("convolution oracle needs at least " + std::to_string(needed) +
                                " nodes per variable for degree " + std::to_string(deg));

  ConvolutionCheck out;
  out.algebraic = evaluate(heat(f, t), x);

  Polynomial magnitude;
  std::map<Variable, double> abs_x;
  for (const auto& [alpha, c] : f.terms()) magnitude.add_term(alpha, abs(c));
  for (const auto& [v, xv] : x) abs_x[v] = std::abs(xv);
  const double scale = evaluate(heat(magnitude, t), abs_x);

  const HornerScheme<double> scheme(f);
  std::vector<double> shift;
  for (Variable v : scheme.variables()) {
    auto it = x.find(v);
    shift.push_back(it == x.end() ? 0.0 : it->second);
  }
  out.numeric = tensor_expectation([&](std::span<const double> p) { return scheme(p); }, shift,
                                   to_double(t), std::max<std::size_t>(nodes, 1));
  out.discrepancy = std::abs(out.numeric - out.algebraic);
  out.relative = scale > 0 ? out.discrepancy / scale : 0.0;
  return out;
}

Polynomial nonclosability_sequence(std::uint32_t n, const Rational& s) {
  if (n == 0) throw std::invalid_argument("nonclosability_sequence: n must be positive");
  Polynomial f;
  const Rational inv = Rational(1) / n;
  for (Variable k = 1; k <= n; ++k) f.add_term(MultiIndex::variable(k, 2), inv);
  f.add_term(MultiIndex{}, -s);
  return f;
}

}  // namespace gausscalc
