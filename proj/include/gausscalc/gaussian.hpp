#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <span>
#include <string_view>
#include <vector>

#include "gausscalc/evaluate.hpp"
#include "gausscalc/polynomial.hpp"

namespace gausscalc {

/// Coordinate variance s > 0 of the product Gaussian mu_s (each x_k ~ N(0, s)).
class Variance {
 public:
  explicit Variance(Rational s);
  const Rational& value() const noexcept { return s_; }
  double to_double() const { return s_.convert_to<double>(); }

 private:
  Rational s_;
};

/// E_{mu_s}[x^alpha] = prod (alpha_i - 1)!! s^{alpha_i / 2} when every alpha_i is even, else 0.
Rational gaussian_moment(const MultiIndex& alpha, const Variance& s);

/// E_{mu_s}[f g], exact.
Rational inner_product(const Polynomial& f, const Polynomial& g, const Variance& s);

inline Rational norm_squared(const Polynomial& f, const Variance& s) {
  return inner_product(f, f, s);
}

// ---------------------------------------------------------------------------
// Quadrature

/// Gauss-Hermite rule for the standard normal weight exp(-x^2/2)/sqrt(2 pi):
/// exact for polynomials of degree <= 2n - 1, weights sum to one.
struct GaussHermiteRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

/// Golub-Welsch: nodes are the eigenvalues of the symmetric tridiagonal Jacobi
/// matrix of the probabilists' Hermite recurrence. Nodes are polished with a
/// Newton step and weights come from the Christoffel sum, which keeps tail
/// weights accurate in relative terms.
GaussHermiteRule gauss_hermite(std::size_t n);

/// Total tensor-grid size above which quadrature requests are rejected.
inline constexpr std::uint64_t kMaxTensorNodes = 100'000'000;

/// Expectation of g(x + sqrt(variance) Z), Z standard normal in `dims`
/// dimensions, on a tensor Gauss-Hermite grid with `nodes` points per axis.
/// The grid is swept in a fixed order so the result is deterministic.
double tensor_expectation(const std::function<double(std::span<const double>)>& g,
                          std::span<const double> shift, double variance, std::size_t nodes);

// ---------------------------------------------------------------------------
// L^p norms

enum class LpMethod { Quadrature, MonteCarlo };
std::string_view to_string(LpMethod m);

struct LpEstimate {
  double value = 0.0;
  double abs_error_bound = 0.0;
  LpMethod method = LpMethod::Quadrature;
  std::uint64_t samples_or_nodes = 0;
  /// Monte Carlo value used to certify non-even p; equals `value` otherwise.
  double cross_check = 0.0;
};

struct LpBudget {
  std::size_t nodes_per_variable = 128;  // used for non-even p
  std::uint64_t mc_samples = 1'000'000;
  std::uint64_t seed = 0;
  std::uint64_t max_total_nodes = kMaxTensorNodes;
};

/// (E_{mu_s} |f|^p)^{1/p}. Even integer p: tensor quadrature that integrates
/// f^p exactly, abs_error_bound = 0. Otherwise: quadrature at the given budget
/// with a seeded Monte Carlo cross-check; abs_error_bound is three Monte Carlo
/// standard errors. Throws std::invalid_argument for p < 1 or an oversized grid.
LpEstimate lp_norm(const Polynomial& f, double p, const Variance& s, const LpBudget& budget = {});

// ---------------------------------------------------------------------------
// Characteristic function

struct CharCheck {
  double lhs = 0.0;  // quadrature estimate of E[cos(sum theta_k x_k)]
  double rhs = 0.0;  // exp(-s |theta|^2 / 2)
  double discrepancy = 0.0;
};

CharCheck char_check(const std::map<Variable, double>& theta, const Variance& s,
                     std::size_t nodes = 64);

}  // namespace gausscalc
