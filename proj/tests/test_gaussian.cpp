#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <random>

#include "gausscalc/gaussian.hpp"
#include "gausscalc/random_poly.hpp"
#include "gausscalc/semigroups.hpp"
#include "gausscalc/text.hpp"
#include "oracle.hpp"

using namespace gausscalc;

namespace {

Polynomial P(std::string_view text) { return parse_polynomial(text); }

MultiIndex M(std::string_view text) { return parse_multi_index(text); }

}  // namespace

TEST_CASE("gaussian_moment examples") {
  CHECK(gaussian_moment(M("x1^2"), Variance(1)) == 1);
  CHECK(gaussian_moment(M("x1 x2"), Variance(7)) == 0);
  CHECK(gaussian_moment(M("1"), Variance(3)) == 1);
  const Rational fourth = gaussian_moment(M("x1^4"), Variance(2));
  CHECK(fourth == 12);
  // independent: 3-point rule is exact through degree 5
  CHECK(oracle::three_point_gaussian([](double x) { return x * x * x * x; }, 2.0) ==
        Catch::Approx(to_double(fourth)).epsilon(1e-14));
}

TEST_CASE("moments factor over variables and match the closed form") {
  for (Exponent a = 0; a <= 8; ++a)
    for (Exponent b = 0; b <= 6; ++b) {
      const MultiIndex alpha{{1, a}, {4, b}};
      const Rational s(5, 3);
      CHECK(gaussian_moment(alpha, Variance(s)) ==
            oracle::normal_moment(a, s) * oracle::normal_moment(b, s));
    }
}

TEST_CASE("Variance rejects nonpositive values") {
  CHECK_THROWS_AS(Variance(0), std::invalid_argument);
  CHECK_THROWS_AS(Variance(Rational(-1, 2)), std::invalid_argument);
}

TEST_CASE("inner_product examples") {
  CHECK(inner_product(P("x1^2 - 1"), P("x2^2 - 1"), Variance(1)) == 0);
  const Rational n = norm_squared(P("x1^2 - 3"), Variance(3));
  CHECK(n == 18);
  // alpha! s^|alpha| with alpha = (2), s = 3
  CHECK(n == MultiIndex::variable(1, 2).factorial() * ipow(Rational(3), 2));
}

TEST_CASE("inner_product is bilinear and symmetric", "[property]") {
  std::mt19937_64 rng(314);
  const RandomPolynomialSpec spec{3, 5, 4, 9, 4};
  for (int i = 0; i < 100; ++i) {
    const Polynomial f = random_polynomial(rng, spec);
    const Polynomial g = random_polynomial(rng, spec);
    const Polynomial h = random_polynomial(rng, spec);
    const Rational r = random_rational(rng, 5, 3);
    const Variance s(r * r + Rational(1, 7));
    const Rational k = random_rational(rng, 9, 4);
    REQUIRE(inner_product(f, g, s) == inner_product(g, f, s));
    REQUIRE(inner_product(f * k + h, g, s) == k * inner_product(f, g, s) + inner_product(h, g, s));
    REQUIRE(norm_squared(f, s) > 0);
  }
}

TEST_CASE("Gauss-Hermite rule structure") {
  for (std::size_t n : {1, 2, 3, 7, 20, 64, 128}) {
    const auto rule = gauss_hermite(n);
    REQUIRE(rule.nodes.size() == n);
    double total = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      CHECK(rule.weights[i] > 0.0);
      CHECK(rule.nodes[i] == -rule.nodes[n - 1 - i]);
      if (i > 0) CHECK(rule.nodes[i] > rule.nodes[i - 1]);
      total += rule.weights[i];
    }
    CHECK(total == Catch::Approx(1.0).epsilon(1e-15));
  }
  const auto three = gauss_hermite(3);
  CHECK(three.nodes[2] == Catch::Approx(std::sqrt(3.0)).epsilon(1e-15));
  CHECK(three.weights[1] == Catch::Approx(2.0 / 3.0).epsilon(1e-15));
  CHECK_THROWS_AS(gauss_hermite(0), std::invalid_argument);
}

TEST_CASE("Gauss-Hermite integrates monomials through degree 2n-1") {
  for (std::size_t n : {4, 10, 30}) {
    const auto rule = gauss_hermite(n);
    for (unsigned k = 0; k <= 2 * n - 1; ++k) {
      double sum = 0.0;
      double magnitude = 0.0;  // sum of |terms|, the scale of any rounding
      for (std::size_t i = 0; i < n; ++i) {
        const double term = rule.weights[i] * std::pow(rule.nodes[i], k);
        sum += term;
        magnitude += std::abs(term);
      }
      const double exact = to_double(oracle::normal_moment(k, 1));
      CHECK(std::abs(sum - exact) <= 1e-13 * std::max(1.0, magnitude));
    }
  }
}

TEST_CASE("quadrature of f g agrees with the exact inner product", "[property]") {
  std::mt19937_64 rng(2718);
  const RandomPolynomialSpec spec{3, 6, 4, 9, 4};
  for (int i = 0; i < 50; ++i) {
    const Polynomial f = random_polynomial(rng, spec);
    const Polynomial g = random_polynomial(rng, spec);
    const Rational s(1 + static_cast<long>(rng() % 4), 1 + static_cast<long>(rng() % 3));
    const Polynomial fg = f * g;
    const HornerScheme<double> scheme(fg);
    const std::vector<double> origin(scheme.variables().size(), 0.0);
    const double numeric = tensor_expectation(
        [&](std::span<const double> x) { return scheme(x); }, origin, to_double(s), 8);
    const double exact = to_double(inner_product(f, g, Variance(s)));
    // bounds |f g| pointwise: sum |c| |x|^alpha over the terms of fg
    const double scale = tensor_expectation(
        [&](std::span<const double> x) {
          std::map<Variable, double> point;
          for (std::size_t d = 0; d < x.size(); ++d)
            point[scheme.variables()[d]] = std::abs(x[d]);
          return oracle::naive_evaluate(oracle::abs_coefficients(fg), point);
        },
        origin, to_double(s), 8);
    REQUIRE(std::abs(numeric - exact) <= 1e-12 * std::max(1.0, scale));
  }
}

TEST_CASE("lp_norm examples") {
  const auto one = lp_norm(Polynomial(1), 17.3, Variance(5));
  CHECK(one.value == 1.0);
  CHECK(one.abs_error_bound == 0.0);

  const auto x1 = lp_norm(P("x1"), 2.0, Variance(4));
  CHECK(x1.value == Catch::Approx(2.0).epsilon(1e-14));
  CHECK(x1.method == LpMethod::Quadrature);
  CHECK(x1.value == Catch::Approx(std::sqrt(to_double(inner_product(P("x1"), P("x1"), Variance(4))))));

  // independent: E[(x^2-1)^4] from the moment expansion, 105 - 4*15 + 6*3 - 4 + 1 = 60
  const Polynomial h2 = P("x1^2 - 1");
  Rational fourth_power = 0;
  for (const auto& [alpha, c] : pow(h2, 4).terms())
    fourth_power += c * oracle::normal_moment(alpha.exponent(1), 1);
  REQUIRE(fourth_power == 60);
  const auto l4 = lp_norm(h2, 4.0, Variance(1));
  CHECK(l4.value == Catch::Approx(std::pow(60.0, 0.25)).epsilon(1e-13));
  CHECK(l4.value == Catch::Approx(2.78316).epsilon(1e-6));
  CHECK(l4.abs_error_bound == 0.0);
}

TEST_CASE("lp_norm for non-even p reports a Monte Carlo cross-check") {
  LpBudget budget;
  budget.mc_samples = 200'000;
  budget.seed = 11;
  const auto est = lp_norm(P("x1"), 3.0, Variance(1), budget);
  // E|Z|^3 = 2 sqrt(2/pi)
  const double exact = std::cbrt(2.0 * std::sqrt(2.0 / M_PI));
  CHECK(est.method == LpMethod::MonteCarlo);
  CHECK(est.value == Catch::Approx(exact).epsilon(1e-4));
  CHECK(est.abs_error_bound > 0.0);
  CHECK(std::abs(est.cross_check - exact) <= est.abs_error_bound);
  CHECK(est.samples_or_nodes == budget.mc_samples);

  const auto again = lp_norm(P("x1"), 3.0, Variance(1), budget);
  CHECK(again.value == est.value);
  CHECK(again.cross_check == est.cross_check);
}

TEST_CASE("lp_norm errors") {
  CHECK_THROWS_AS(lp_norm(P("x1"), 0.5, Variance(1)), std::invalid_argument);
  CHECK_THROWS_AS(lp_norm(P("x1"), std::nan(""), Variance(1)), std::invalid_argument);
  LpBudget tiny;
  tiny.max_total_nodes = 100;
  CHECK_THROWS_AS(lp_norm(P("x1 x2 x3"), 3.0, Variance(1), tiny), std::invalid_argument);
  // 12 variables of degree 2 at p = 4 need 5^12 > 1e8 nodes
  CHECK_THROWS_AS(lp_norm(P("x1^2 + x2^2 + x3^2 + x4^2 + x5^2 + x6^2 + x7^2 + x8^2 + x9^2 + x10^2 + "
                            "x11^2 + x12^2"),
                          4.0, Variance(1)),
                  std::invalid_argument);
}

TEST_CASE("L^p norms are nondecreasing in p", "[property]") {
  std::mt19937_64 rng(5);
  const RandomPolynomialSpec spec{2, 4, 3, 9, 4};
  LpBudget budget;
  budget.nodes_per_variable = 64;
  budget.mc_samples = 1000;
  for (int i = 0; i < 20; ++i) {
    const Polynomial f = random_polynomial(rng, spec);
    double previous = 0.0;
    for (double p : {1.0, 1.5, 2.0, 3.0, 4.0, 6.0}) {
      const double v = lp_norm(f, p, Variance(1), budget).value;
      REQUIRE(v >= previous * (1.0 - 1e-9));
      previous = v;
    }
  }
}

TEST_CASE("L^p norm scaling law under dilation", "[property]") {
  // ||f||_{L^p(mu_{c^2 s})} = ||f(c x)||_{L^p(mu_s)}
  std::mt19937_64 rng(6);
  const RandomPolynomialSpec spec{2, 4, 3, 9, 4};
  for (int i = 0; i < 20; ++i) {
    const Polynomial f = random_polynomial(rng, spec);
    const Rational c(1 + static_cast<long>(rng() % 3), 2);
    for (double p : {2.0, 4.0}) {
      const double lhs = lp_norm(f, p, Variance(c * c * 3)).value;
      const double rhs = lp_norm(dilate(f, c), p, Variance(3)).value;
      REQUIRE(lhs == Catch::Approx(rhs).epsilon(1e-11));
    }
  }
}

TEST_CASE("char_check examples") {
  const auto zero = char_check({}, Variance(1));
  CHECK(zero.lhs == 1.0);
  CHECK(zero.rhs == 1.0);

  const auto one = char_check({{1, 1.0}}, Variance(1));
  const double trapezoid =
      oracle::trapezoid_gaussian([](double x) { return std::cos(x); }, 1.0);
  CHECK(one.rhs == Catch::Approx(0.60653).epsilon(1e-5));
  CHECK(trapezoid == Catch::Approx(one.rhs).epsilon(1e-12));
  CHECK(one.lhs == Catch::Approx(trapezoid).epsilon(1e-12));
  CHECK(one.discrepancy < 1e-12);

  const auto two = char_check({{1, 1.0}, {2, 1.0}}, Variance(2));
  const double per_axis =
      oracle::trapezoid_gaussian([](double x) { return std::cos(x); }, 2.0);
  CHECK(two.rhs == Catch::Approx(0.13534).epsilon(1e-4));
  CHECK(two.lhs == Catch::Approx(per_axis * per_axis).epsilon(1e-12));
  CHECK(two.discrepancy < 1e-12);
}

TEST_CASE("Hermite polynomials are orthogonal with norm alpha! s^|alpha|") {
  const Rational s(3, 2);
  const auto basis = all_multi_indices(2, 5);
  std::vector<Polynomial> h;
  for (const auto& alpha : basis) h.push_back(hermite(alpha, s));
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = 0; j < basis.size(); ++j) {
      const Rational expected = i == j ? basis[i].factorial() * ipow(s, basis[i].degree()) : 0;
      REQUIRE(inner_product(h[i], h[j], Variance(s)) == expected);
    }
}
