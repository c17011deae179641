#pragma once

#include <cmath>
#include <map>
#include <optional>
#include <stdexcept>

#include "gausscalc/polynomial.hpp"

namespace gausscalc {

// Differential operators on polynomials. All of them are linear and act term by
// term; templating on the coefficient type gives exact (Rational) and float
// (double) versions from the same code.

/// Sum of second derivatives d^2/dx_n^2 over the active variables.
template <class C>
BasicPolynomial<C> laplacian(const BasicPolynomial<C>& f) {
  BasicPolynomial<C> out;
  for (const auto& [alpha, c] : f.terms())
    for (const auto& [v, e] : alpha.entries())
      if (e >= 2) out.add_term(alpha.lowered(v, 2), c * C(static_cast<long>(e) * (e - 1)));
  return out;
}

/// Euler operator D = sum x_k d/dx_k; D x^alpha = |alpha| x^alpha.
template <class C>
BasicPolynomial<C> euler_d(const BasicPolynomial<C>& f) {
  BasicPolynomial<C> out;
  for (const auto& [alpha, c] : f.terms())
    out.add_term(alpha, c * C(static_cast<long>(alpha.degree())));
  return out;
}

/// e^{t Delta / 2} f = sum_k (t/2)^k Delta^k f / k!. The series terminates since
/// Delta lowers degree by two. Any sign of t is allowed: negative t is the
/// backward heat operator.
template <class C>
BasicPolynomial<C> heat(const BasicPolynomial<C>& f, const C& t) {
  BasicPolynomial<C> out = f;
  BasicPolynomial<C> term = f;
  C factor(1);
  for (long k = 1;; ++k) {
    term = laplacian(term);
    if (term.is_zero()) break;
    factor = factor * t / C(2 * k);
    if (factor == C(0)) break;
    out += term * factor;
  }
  return out;
}

/// h_{alpha,s} = e^{-s Delta / 2} x^alpha.
template <class C>
BasicPolynomial<C> hermite(const MultiIndex& alpha, const C& s) {
  return heat(BasicPolynomial<C>::monomial(alpha), C(-s));
}

/// Coefficients c_alpha of f = sum c_alpha h_{alpha,s}.
template <class C>
struct BasicHermiteExpansion {
  C base_variance{};
  std::map<MultiIndex, C> coeffs;
};
using HermiteExpansion = BasicHermiteExpansion<Rational>;

/// Since e^{s Delta/2} h_{alpha,s} = x^alpha, the Hermite coefficients of f are
/// the monomial coefficients of heat(f, s).
template <class C>
BasicHermiteExpansion<C> hermite_expand(const BasicPolynomial<C>& f, const C& s) {
  BasicHermiteExpansion<C> out{s, {}};
  const BasicPolynomial<C> lifted = heat(f, s);
  for (const auto& [alpha, c] : lifted.terms()) out.coeffs.emplace(alpha, c);
  return out;
}

/// sum c_alpha h_{alpha,s}
template <class C>
BasicPolynomial<C> resum(const BasicHermiteExpansion<C>& expansion) {
  BasicPolynomial<C> monomials;
  for (const auto& [alpha, c] : expansion.coeffs) monomials.add_term(alpha, c);
  return heat(monomials, C(-expansion.base_variance));
}

/// f(lambda x): the coefficient of x^alpha is scaled by lambda^{|alpha|}.
template <class C>
BasicPolynomial<C> dilate(const BasicPolynomial<C>& f, const C& lambda) {
  if (lambda == C(0)) throw std::invalid_argument("dilate: lambda = 0 is not a dilation");
  BasicPolynomial<C> out;
  for (const auto& [alpha, c] : f.terms()) out.add_term(alpha, c * ipow(lambda, alpha.degree()));
  return out;
}

/// N_s = D - s Delta, with N_s h_{alpha,s} = |alpha| h_{alpha,s}.
template <class C>
BasicPolynomial<C> number_op(const BasicPolynomial<C>& f, const C& s) {
  return euler_d(f) - laplacian(f) * s;
}

/// e^{-tau N_s} f with lambda = e^{-tau}: expand in {h_{alpha,s}}, scale each
/// coefficient by lambda^{|alpha|}, resum.
template <class C>
BasicPolynomial<C> hermite_semigroup(const BasicPolynomial<C>& f, const C& s, const C& lambda) {
  if (!(lambda > C(0))) throw std::invalid_argument("hermite_semigroup: lambda must be positive");
  auto expansion = hermite_expand(f, s);
  for (auto& [alpha, c] : expansion.coeffs) c *= ipow(lambda, alpha.degree());
  return resum(expansion);
}

// ---------------------------------------------------------------------------
// Parameters

/// The pair (s, t) with s > 0 and t < s, plus lambda^2 = (s - t)/s and
/// tau = log(s/(s - t))/2. lambda itself is kept exactly when lambda^2 is the
/// square of a rational.
class VarianceParams {
 public:
  static VarianceParams from_time(Rational s, Rational t);
  /// t = s (1 - lambda^2); requires lambda > 0.
  static VarianceParams from_lambda(Rational s, Rational lambda);

  const Rational& s() const noexcept { return s_; }
  const Rational& t() const noexcept { return t_; }
  const Rational& lambda_squared() const noexcept { return lambda_sq_; }
  const std::optional<Rational>& lambda() const noexcept { return lambda_; }
  double lambda_double() const;
  double tau() const;

 private:
  VarianceParams(Rational s, Rational t, std::optional<Rational> lambda);
  Rational s_, t_, lambda_sq_;
  std::optional<Rational> lambda_;
};

// ---------------------------------------------------------------------------
// Identity checks. They always return both sides and their difference.

template <class C>
struct IdentityCheck {
  bool holds = false;
  BasicPolynomial<C> lhs;
  BasicPolynomial<C> rhs;
  BasicPolynomial<C> witness;  // lhs - rhs; zero exactly when an exact check holds
  double max_discrepancy = 0.0;
};

/// D_{s,t} e^{t Delta/2} f == e^{-tau N_s} f, exact. Throws std::invalid_argument
/// when lambda is irrational; use verify_ident2_float then.
IdentityCheck<Rational> verify_ident2(const Polynomial& f, const VarianceParams& params);

/// Float-mode version for any lambda; holds when every coefficient of the
/// difference is within tol * max(1, largest coefficient of either side).
IdentityCheck<double> verify_ident2_float(const Polynomial& f, const VarianceParams& params,
                                          double tol = 1e-12);

/// [Delta, D] f == 2 Delta f.
IdentityCheck<Rational> verify_commutator(const Polynomial& f);

/// [Delta, [Delta, D]] f == 0, i.e. Delta Delta D f - 2 Delta D Delta f + D Delta Delta f == 0.
IdentityCheck<Rational> verify_double_commutator(const Polynomial& f);

struct ConvolutionCheck {
  double numeric = 0.0;    // E[f(x + z)], z ~ N(0, t I), tensor Gauss-Hermite
  double algebraic = 0.0;  // heat(f, t) evaluated at x
  double discrepancy = 0.0;
  /// discrepancy over the same convolution applied to |coefficients| at |x|,
  /// which bounds the size of every partial sum.
  double relative = 0.0;
};

/// Compares the heat-kernel integral with the algebraic heat operator. Throws
/// std::invalid_argument when t <= 0 or nodes < ceil((deg f + 1)/2).
ConvolutionCheck heat_convolution_oracle(const Polynomial& f, const Rational& t,
                                         const std::map<Variable, double>& x, std::size_t nodes);

/// (1/n) sum_{k<=n} (x_k^2 - s)
Polynomial nonclosability_sequence(std::uint32_t n, const Rational& s);

}  // namespace gausscalc
