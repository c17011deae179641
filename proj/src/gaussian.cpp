#include "gausscalc/gaussian.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <mutex>
#include <random>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace gausscalc {

Variance::Variance(Rational s) : s_(std::move(s)) {
  if (s_ <= 0) throw std::invalid_argument("variance must be positive, got " + to_string(s_));
}

Rational gaussian_moment(const MultiIndex& alpha, const Variance& s) {
  Rational m = 1;
  for (const auto& [v, e] : alpha.entries()) {
    if (e % 2 != 0) return 0;
    m *= double_factorial(static_cast<std::int64_t>(e) - 1) * ipow(s.value(), e / 2);
  }
  return m;
}

Rational inner_product(const Polynomial& f, const Polynomial& g, const Variance& s) {
  Rational sum = 0;
  for (const auto& [alpha, a] : f.terms())
    for (const auto& [beta, b] : g.terms()) {
      Rational m = gaussian_moment(alpha + beta, s);
      if (m != 0) sum += a * b * m;
    }
  return sum;
}

namespace {

GaussHermiteRule compute_gauss_hermite(std::size_t n) {
  Eigen::VectorXd diag = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(n));
  Eigen::VectorXd sub(static_cast<Eigen::Index>(n > 0 ? n - 1 : 0));
  for (Eigen::Index k = 0; k < sub.size(); ++k) sub(k) = std::sqrt(static_cast<double>(k + 1));
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver;
  solver.computeFromTridiagonal(diag, sub, Eigen::EigenvaluesOnly);
  std::vector<double> x(solver.eigenvalues().data(), solver.eigenvalues().data() + n);
  std::sort(x.begin(), x.end());

  // Orthonormal recurrence p_{k+1} = (x p_k - sqrt(k) p_{k-1}) / sqrt(k+1).
  auto sweep = [n](double t, double& pn, double& pn1, double& sum_sq) {
    double prev = 0.0;
    double cur = 1.0;
    sum_sq = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
      sum_sq += cur * cur;
      double next = (t * cur - std::sqrt(static_cast<double>(k)) * prev) /
                    std::sqrt(static_cast<double>(k + 1));
      prev = cur;
      cur = next;
    }
    pn = cur;
    pn1 = prev;
  };

  GaussHermiteRule rule;
  rule.nodes.resize(n);
  rule.weights.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    double t = x[i];
    double pn = 0, pn1 = 0, sum_sq = 0;
    sweep(t, pn, pn1, sum_sq);
    // He_n / He_n' = p_n / (sqrt(n) p_{n-1})
    double step = pn / (std::sqrt(static_cast<double>(n)) * pn1);
    if (std::isfinite(step)) {
      t -= step;
      sweep(t, pn, pn1, sum_sq);
    }
    rule.nodes[i] = t;
    rule.weights[i] = std::isfinite(sum_sq) ? 1.0 / sum_sq : 0.0;
  }
  // Enforce the exact symmetry of the rule.
  for (std::size_t i = 0; i < n / 2; ++i) {
    std::size_t j = n - 1 - i;
    double a = 0.5 * (rule.nodes[j] - rule.nodes[i]);
    double w = 0.5 * (rule.weights[i] + rule.weights[j]);
    rule.nodes[i] = -a;
    rule.nodes[j] = a;
    rule.weights[i] = rule.weights[j] = w;
  }
  if (n % 2 == 1) rule.nodes[n / 2] = 0.0;
  double total = 0.0;
  for (double w : rule.weights) total += w;
  for (double& w : rule.weights) w /= total;
  return rule;
}

std::uint64_t checked_grid_size(std::size_t nodes, std::size_t dims, std::uint64_t cap) {
  std::uint64_t total = 1;
  for (std::size_t d = 0; d < dims; ++d) {
    if (total > cap / std::max<std::uint64_t>(nodes, 1))
      throw std::invalid_argument("quadrature grid of " + std::to_string(nodes) + "^" +
                                  std::to_string(dims) + " nodes exceeds the cap of " +
                                  std::to_string(cap));
    total *= nodes;
  }
  return total;
}

bool is_even_integer(double p) { return p == std::floor(p) && std::fmod(p, 2.0) == 0.0; }

}  // namespace

GaussHermiteRule gauss_hermite(std::size_t n) {
  if (n == 0) throw std::invalid_argument("gauss_hermite: need at least one node");
  static std::mutex mutex;
  static std::map<std::size_t, GaussHermiteRule> cache;
  std::lock_guard lock(mutex);
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, compute_gauss_hermite(n)).first;
  return it->second;
}

double tensor_expectation(const std::function<double(std::span<const double>)>& g,
                          std::span<const double> shift, double variance, std::size_t nodes) {
  const std::size_t dims = shift.size();
  const std::uint64_t total = checked_grid_size(nodes, dims, kMaxTensorNodes);
  const GaussHermiteRule rule = gauss_hermite(nodes);
  const double scale = std::sqrt(variance);

  std::vector<std::size_t> counter(dims, 0);
  std::vector<double> point(dims);
  double sum = 0.0;
  for (std::uint64_t k = 0; k < total; ++k) {
    double w = 1.0;
    for (std::size_t d = 0; d < dims; ++d) {
      point[d] = shift[d] + scale * rule.nodes[counter[d]];
      w *= rule.weights[counter[d]];
    }
    if (w != 0.0) sum += w * g(point);
    for (std::size_t d = 0; d < dims; ++d) {
      if (++counter[d] < nodes) break;
      counter[d] = 0;
    }
  }
  return sum;
}

std::string_view to_string(LpMethod m) {
  return m == LpMethod::Quadrature ? "quadrature" : "monte-carlo";
}

LpEstimate lp_norm(const Polynomial& f, double p, const Variance& s, const LpBudget& budget) {
  if (!(p >= 1.0) || !std::isfinite(p))
    throw std::invalid_argument("lp_norm: p must be a finite number >= 1");
  if (budget.nodes_per_variable == 0 || budget.mc_samples == 0)
    throw std::invalid_argument("lp_norm: budget must be at least 1");

  LpEstimate est;
  if (f.degree() <= 0) {
    Rational c = f.coefficient(MultiIndex{});
    est.value = std::abs(to_double(c));
    est.cross_check = est.value;
    est.samples_or_nodes = 1;
    return est;
  }

  const HornerScheme<double> scheme(f);
  const std::size_t dims = scheme.variables().size();
  const std::vector<double> origin(dims, 0.0);
  const double variance = s.to_double();

  if (is_even_integer(p)) {
    const auto power = static_cast<std::uint64_t>(p);
    const auto needed = static_cast<std::size_t>(
        (power * static_cast<std::uint64_t>(f.degree()) + 2) / 2);  // ceil((p deg + 1) / 2)
    est.samples_or_nodes = checked_grid_size(needed, dims, budget.max_total_nodes);
    double integral = tensor_expectation(
        [&](std::span<const double> x) { return ipow(scheme(x), power); }, origin, variance,
        needed);
    est.value = std::pow(integral, 1.0 / p);
    est.cross_check = est.value;
    return est;
  }

  checked_grid_size(budget.nodes_per_variable, dims, budget.max_total_nodes);
  double integral = tensor_expectation(
      [&](std::span<const double> x) { return std::pow(std::abs(scheme(x)), p); }, origin,
      variance, budget.nodes_per_variable);
  est.value = std::pow(integral, 1.0 / p);

  std::mt19937_64 rng(budget.seed);
  std::normal_distribution<double> normal(0.0, std::sqrt(variance));
  std::vector<double> x(dims);
  double mean = 0.0;
  double m2 = 0.0;
  for (std::uint64_t i = 0; i < budget.mc_samples; ++i) {
    for (double& xi : x) xi = normal(rng);
    double v = std::pow(std::abs(scheme(x)), p);
    double delta = v - mean;
    mean += delta / static_cast<double>(i + 1);
    m2 += delta * (v - mean);
  }
  const double n = static_cast<double>(budget.mc_samples);
  const double std_err = n > 1 ? std::sqrt(m2 / (n - 1) / n) : 0.0;
  est.cross_check = std::pow(mean, 1.0 / p);
  // Delta method: d(m^{1/p}) = m^{1/p - 1} / p dm.
  est.abs_error_bound = mean > 0 ? 3.0 * std_err * std::pow(mean, 1.0 / p - 1.0) / p : 0.0;
  est.method = LpMethod::MonteCarlo;
  est.samples_or_nodes = budget.mc_samples;
  return est;
}

CharCheck char_check(const std::map<Variable, double>& theta, const Variance& s,
                     std::size_t nodes) {
  const GaussHermiteRule rule = gauss_hermite(nodes);
  const double scale = std::sqrt(s.to_double());
  // Coordinates are independent, so the characteristic function factorizes.
  std::complex<double> phi = 1.0;
  double theta_sq = 0.0;
  for (const auto& [v, th] : theta) {
    if (th == 0.0) continue;
    theta_sq += th * th;
    std::complex<double> factor = 0.0;
    for (std::size_t i = 0; i < rule.nodes.size(); ++i)
      factor += rule.weights[i] * std::polar(1.0, th * scale * rule.nodes[i]);
    phi *= factor;
  }
  CharCheck out;
  out.lhs = phi.real();
  out.rhs = std::exp(-s.to_double() * theta_sq / 2.0);
  out.discrepancy = std::abs(out.lhs - out.rhs);
  return out;
}

}  // namespace gausscalc
