#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "gausscalc/experiments.hpp"
#include "gausscalc/gaussian.hpp"
#include "gausscalc/random_poly.hpp"
#include "gausscalc/semigroups.hpp"
#include "gausscalc/text.hpp"
#include "oracle.hpp"

using namespace gausscalc;

namespace {

Polynomial P(std::string_view text) { return parse_polynomial(text); }
MultiIndex M(std::string_view text) { return parse_multi_index(text); }

Rational pick(std::mt19937_64& rng, std::initializer_list<Rational> options) {
  return *(options.begin() + rng() % options.size());
}

// degree <= 8, <= 4 variables
const RandomPolynomialSpec kSpec{4, 8, 6, 9, 4};

}  // namespace

TEST_CASE("laplacian examples") {
  CHECK(laplacian(P("x1^2")) == Polynomial(2));
  CHECK(laplacian(P("x1^2 x2^2")) == P("2 x2^2 + 2 x1^2"));
  for (std::uint32_t n : {1u, 3u, 17u})
    for (const Rational& s : {Rational(1), Rational(5, 2)})
      CHECK(laplacian(nonclosability_sequence(n, s)) == Polynomial(2));
  CHECK(laplacian(P("x1 x2 + x3 + 4")).is_zero());
}

TEST_CASE("euler_d examples") {
  CHECK(euler_d(P("x1^3")) == P("3 x1^3"));
  CHECK(euler_d(Polynomial(1)).is_zero());
  CHECK(euler_d(P("x1^2 x2 + 5")) == P("3 x1^2 x2"));
}

TEST_CASE("heat examples") {
  const Rational t(7, 3);
  CHECK(heat(P("x1^2"), t) == P("x1^2") + Polynomial(t));
  const Polynomial fn = nonclosability_sequence(5, 2);
  CHECK(heat(fn, t) == fn + Polynomial(t));
  CHECK(heat(heat(P("x1^4"), Rational(3)), Rational(-3)) == P("x1^4"));
  CHECK(heat(P("x1^3 x2"), Rational(0)) == P("x1^3 x2"));
}

TEST_CASE("hermite examples") {
  const Rational s(5, 2);
  CHECK(hermite(M("x1^2"), s) == P("x1^2") - Polynomial(s));
  CHECK(hermite(M("x1 x2"), s) == P("x1 x2"));
  CHECK(hermite(M("x1^4"), s) == P("x1^4") - P("x1^2") * (6 * s) + Polynomial(3 * s * s));
  CHECK(hermite(M("1"), s) == Polynomial(1));
}

TEST_CASE("hermite_expand examples") {
  const auto e = hermite_expand(P("x1^2"), Rational(4));
  CHECK(e.base_variance == 4);
  CHECK(e.coeffs == std::map<MultiIndex, Rational>{{M("1"), 4}, {M("x1^2"), 1}});
  const Rational s(3);
  CHECK(hermite_expand(hermite(M("x1^4"), s), s).coeffs ==
        std::map<MultiIndex, Rational>{{M("x1^4"), 1}});
  CHECK(hermite_expand(Polynomial{}, s).coeffs.empty());
}

TEST_CASE("dilate examples") {
  CHECK(dilate(P("x1^2 - 1"), Rational(1, 2)) == P("1/4 x1^2 - 1"));
  CHECK(dilate(P("x1^3 x2 - 7/2 x2 + 1"), Rational(1)) == P("x1^3 x2 - 7/2 x2 + 1"));
  // D_{s,t} h_{alpha,s-t} = ((s-t)/s)^{|alpha|/2} h_{alpha,s}, s = 4, t = 3
  CHECK(dilate(hermite(M("x1^2"), Rational(1)), Rational(1, 2)) ==
        hermite(M("x1^2"), Rational(4)) * Rational(1, 4));
  CHECK_THROWS_AS(dilate(P("x1"), Rational(0)), std::invalid_argument);
  CHECK(dilate(polynomial_cast<double>(P("x1^2 - 1")), 0.5) ==
        polynomial_cast<double>(P("1/4 x1^2 - 1")));
}

TEST_CASE("number_op examples") {
  const Rational s(3);
  CHECK(number_op(P("x1^2 - 3"), s) == P("2 x1^2 - 6"));
  CHECK(number_op(Polynomial(1), s).is_zero());
  const Polynomial h4 = P("x1^4 - 12 x1^2 + 12");
  REQUIRE(hermite(M("x1^4"), Rational(2)) == h4);
  CHECK(number_op(h4, Rational(2)) == h4 * Rational(4));
}

TEST_CASE("hermite_semigroup examples") {
  const Rational s(4);
  CHECK(hermite_semigroup(hermite(M("x1^2"), s), s, Rational(1, 2)) == P("1/4 x1^2 - 1"));
  CHECK(hermite_semigroup(P("x1^3 x2 - x2^2 + 1/3"), s, Rational(1)) ==
        P("x1^3 x2 - x2^2 + 1/3"));
  CHECK(hermite_semigroup(P("x1^2"), s, Rational(1, 2)) == P("1/4 x1^2 + 3"));
  CHECK_THROWS_AS(hermite_semigroup(P("x1"), s, Rational(0)), std::invalid_argument);
  CHECK_THROWS_AS(hermite_semigroup(P("x1"), s, Rational(-1, 2)), std::invalid_argument);
}

TEST_CASE("VarianceParams") {
  const auto a = VarianceParams::from_time(4, 3);
  CHECK(a.lambda_squared() == Rational(1, 4));
  REQUIRE(a.lambda());
  CHECK(*a.lambda() == Rational(1, 2));
  CHECK(a.tau() == Catch::Approx(std::log(2.0)));
  const auto b = VarianceParams::from_lambda(9, Rational(2, 3));
  CHECK(b.t() == 5);
  const auto c = VarianceParams::from_time(1, Rational(1, 2));
  CHECK_FALSE(c.lambda());
  CHECK(c.lambda_double() == Catch::Approx(std::sqrt(0.5)).epsilon(1e-15));
  const auto backward = VarianceParams::from_time(1, -3);
  CHECK(backward.lambda() == Rational(2));
  CHECK_THROWS_AS(VarianceParams::from_time(1, 1), std::invalid_argument);
  CHECK_THROWS_AS(VarianceParams::from_time(0, -1), std::invalid_argument);
  CHECK_THROWS_AS(VarianceParams::from_lambda(1, 0), std::invalid_argument);
}

TEST_CASE("verify_ident2 examples") {
  const auto a = verify_ident2(P("x1^2"), VarianceParams::from_time(4, 3));
  CHECK(a.holds);
  CHECK(a.lhs == P("1/4 x1^2 + 3"));
  CHECK(a.rhs == a.lhs);
  CHECK(a.witness.is_zero());

  const auto one = verify_ident2(Polynomial(1), VarianceParams::from_lambda(7, Rational(3, 5)));
  CHECK(one.holds);
  CHECK(one.lhs == Polynomial(1));

  const Polynomial h3 = hermite(M("x1^3"), Rational(9));
  const auto c = verify_ident2(h3, VarianceParams::from_time(9, 5));
  CHECK(c.holds);
  CHECK(c.lhs == h3 * Rational(8, 27));

  CHECK_THROWS_AS(verify_ident2(P("x1"), VarianceParams::from_time(1, Rational(1, 2))),
                  std::invalid_argument);
}

TEST_CASE("verify_commutator examples") {
  const auto a = verify_commutator(P("x1^4"));
  CHECK(a.holds);
  CHECK(a.lhs == P("24 x1^2"));
  CHECK(a.rhs == P("24 x1^2"));
  CHECK(verify_commutator(Polynomial(1)).holds);
  CHECK(verify_commutator(Polynomial(1)).lhs.is_zero());
  const auto c = verify_commutator(P("x1^2 x2^2"));
  CHECK(c.holds);
  CHECK(c.rhs == P("4 x2^2 + 4 x1^2"));
}

TEST_CASE("heat_convolution_oracle examples") {
  const auto a = heat_convolution_oracle(P("x1^2"), 1, {{1, 0.0}}, 2);
  CHECK(a.numeric == Catch::Approx(1.0).epsilon(1e-14));
  CHECK(a.algebraic == 1.0);
  const auto b = heat_convolution_oracle(P("x1"), Rational(5, 2), {{1, 0.0}}, 1);
  CHECK(b.numeric == Catch::Approx(0.0).margin(1e-15));
  CHECK(b.algebraic == 0.0);
  const auto c = heat_convolution_oracle(P("x1^4"), 2, {{1, 1.0}}, 3);
  CHECK(c.algebraic == 25.0);
  CHECK(c.numeric == Catch::Approx(25.0).epsilon(1e-13));
  // independent: E[(1 + z)^4], z ~ N(0, 2), by the 3-point rule
  CHECK(oracle::three_point_gaussian([](double z) { return std::pow(1.0 + z, 4); }, 2.0) ==
        Catch::Approx(25.0).epsilon(1e-13));
  CHECK_THROWS_AS(heat_convolution_oracle(P("x1^4"), 2, {{1, 1.0}}, 2), std::invalid_argument);
  CHECK_THROWS_AS(heat_convolution_oracle(P("x1^4"), 0, {{1, 1.0}}, 3), std::invalid_argument);
}

TEST_CASE("operators are linear", "[property]") {
  std::mt19937_64 rng(101);
  for (int i = 0; i < 100; ++i) {
    const Polynomial f = random_polynomial(rng, kSpec);
    const Polynomial g = random_polynomial(rng, kSpec);
    const Rational k = random_rational(rng, 9, 4);
    const Rational s(1 + static_cast<long>(rng() % 9), 1 + static_cast<long>(rng() % 2));
    const Rational t = random_rational(rng, 9, 4);
    const Rational lambda(1 + static_cast<long>(rng() % 4), 5);
    const Polynomial mix = f * k + g;
    REQUIRE(laplacian(mix) == laplacian(f) * k + laplacian(g));
    REQUIRE(euler_d(mix) == euler_d(f) * k + euler_d(g));
    REQUIRE(heat(mix, t) == heat(f, t) * k + heat(g, t));
    REQUIRE(dilate(mix, lambda) == dilate(f, lambda) * k + dilate(g, lambda));
    REQUIRE(number_op(mix, s) == number_op(f, s) * k + number_op(g, s));
    REQUIRE(hermite_semigroup(mix, s, lambda) ==
            hermite_semigroup(f, s, lambda) * k + hermite_semigroup(g, s, lambda));
  }
}

TEST_CASE("heat semigroup law for either sign of t", "[property]") {
  std::mt19937_64 rng(102);
  for (int i = 0; i < 100; ++i) {
    const Polynomial f = random_polynomial(rng, kSpec);
    const Rational t1 = random_rational(rng, 9, 4);
    const Rational t2 = random_rational(rng, 9, 4);
    REQUIRE(heat(heat(f, t1), t2) == heat(f, t1 + t2));
  }
}

TEST_CASE("expansion round-trips through resum", "[property]") {
  std::mt19937_64 rng(103);
  for (int i = 0; i < 100; ++i) {
    const Polynomial f = random_polynomial(rng, kSpec);
    const Rational s(1 + static_cast<long>(rng() % 9), 1 + static_cast<long>(rng() % 3));
    REQUIRE(resum(hermite_expand(f, s)) == f);
  }
}

TEST_CASE("Hermite intertwining and eigen-relation for |alpha| <= 6") {
  std::mt19937_64 rng(104);
  for (const auto& alpha : all_multi_indices(3, 6)) {
    const Rational s(1 + static_cast<long>(rng() % 9), 1 + static_cast<long>(rng() % 3));
    const Rational t = s - Rational(1 + static_cast<long>(rng() % 20), 4);  // t < s, either sign
    const Polynomial h = hermite(alpha, s);
    REQUIRE(heat(h, t) == hermite(alpha, s - t));
    REQUIRE(number_op(h, s) == h * Rational(alpha.degree()));
    REQUIRE(h.coefficient(alpha) == 1);
    REQUIRE(h.degree() == alpha.degree());
  }
}

TEST_CASE("commutator identity on random polynomials", "[property]") {
  std::mt19937_64 rng(105);
  for (int i = 0; i < 200; ++i) {
    const Polynomial f = random_polynomial(rng, kSpec);
    const auto c = verify_commutator(f);
    REQUIRE(c.holds);
    REQUIRE(c.witness.is_zero());
  }
}

TEST_CASE("double commutator vanishes and Delta^2 D - D Delta^2 = 4 Delta^2", "[property]") {
  std::mt19937_64 rng(106);
  for (int i = 0; i < 200; ++i) {
    const Polynomial f = random_polynomial(rng, kSpec);
    REQUIRE(verify_double_commutator(f).holds);
    const Polynomial dd = laplacian(laplacian(f));
    REQUIRE(laplacian(laplacian(euler_d(f))) - euler_d(dd) == dd * Rational(4));
  }
}

TEST_CASE("ident2 holds exactly on random inputs", "[property]") {
  std::mt19937_64 rng(107);
  for (int i = 0; i < 200; ++i) {
    const Polynomial f = random_polynomial(rng, kSpec);
    const Rational lambda =
        pick(rng, {Rational(1, 2), Rational(2, 3), Rational(3, 5), Rational(1)});
    const Rational s = pick(rng, {Rational(1), Rational(4), Rational(9)});
    const auto params = VarianceParams::from_lambda(s, lambda);
    const auto check = verify_ident2(f, params);
    REQUIRE(check.holds);
    REQUIRE(check.witness.is_zero());
    REQUIRE(check.lhs == dilate(heat(f, params.t()), lambda));
  }
}

TEST_CASE("ident2 in float mode for irrational lambda", "[property]") {
  std::mt19937_64 rng(108);
  for (int i = 0; i < 100; ++i) {
    const Polynomial f = random_polynomial(rng, kSpec);
    const Rational s = pick(rng, {Rational(1), Rational(2), Rational(3)});
    const auto params = VarianceParams::from_time(s, s / 2);  // lambda = 1/sqrt(2)
    REQUIRE_FALSE(params.lambda());
    const auto check = verify_ident2_float(f, params);
    REQUIRE(check.holds);
    REQUIRE(check.lhs.size() == check.rhs.size());
  }
}

TEST_CASE("Laplacian and Euler operator agree with interpolation oracles", "[property]") {
  std::mt19937_64 rng(109);
  const RandomPolynomialSpec spec{3, 6, 5, 9, 4};
  for (int i = 0; i < 50; ++i) {
    const Polynomial f = random_polynomial(rng, spec);
    std::map<Variable, Rational> x;
    for (Variable v = 1; v <= 3; ++v) x[v] = random_rational(rng, 5, 3);
    REQUIRE(evaluate(laplacian(f), x) == oracle::laplacian_at(f, x));
    REQUIRE(evaluate(euler_d(f), x) == oracle::euler_at(f, x));
  }
}

TEST_CASE("convolution oracle matches the algebraic heat operator", "[property]") {
  std::mt19937_64 rng(110);
  std::uniform_real_distribution<double> coord(-2.0, 2.0);
  for (int i = 0; i < 50; ++i) {
    const Polynomial f = random_polynomial(rng, kSpec);
    const Rational t(1 + static_cast<long>(rng() % 8), 1 + static_cast<long>(rng() % 4));
    std::map<Variable, double> x;
    for (Variable v = 1; v <= 4; ++v) x[v] = coord(rng);
    const auto c = heat_convolution_oracle(f, t, x, 6);
    REQUIRE(c.relative <= 1e-10);
  }
}

TEST_CASE("exact L2 contraction ratio", "[property]") {
  std::mt19937_64 rng(111);
  for (int i = 0; i < 100; ++i) {
    const Polynomial f = random_polynomial(rng, {3, 6, 5, 9, 4});
    const Rational lambda = pick(rng, {Rational(1, 2), Rational(2, 3), Rational(3, 5)});
    const Rational s = pick(rng, {Rational(1), Rational(4), Rational(9)});
    const auto params = VarianceParams::from_lambda(s, lambda);
    const Rational ratio = l2_contraction_ratio(f, params);
    REQUIRE(ratio <= 1);
    REQUIRE(ratio > 0);
    // independent route: Gaussian inner products on both sides
    const Rational direct = norm_squared(heat(f, params.t()), Variance(s - params.t())) /
                            norm_squared(f, Variance(s));
    REQUIRE(ratio == direct);
  }
  const auto params = VarianceParams::from_lambda(4, Rational(1, 2));
  for (const auto& alpha : all_multi_indices(2, 5))
    REQUIRE(l2_contraction_ratio(hermite(alpha, Rational(4)), params) ==
            ipow(Rational(1, 4), alpha.degree()));
}

TEST_CASE("nonclosability sequence") {
  const Rational s(3, 2);
  for (std::uint32_t n : {1u, 10u, 100u}) {
    const Polynomial fn = nonclosability_sequence(n, s);
    CHECK(norm_squared(fn, Variance(s)) == 2 * s * s / n);
    CHECK(heat(fn, Rational(1, 2)) - fn == Polynomial(Rational(1, 2)));
  }
  CHECK_THROWS_AS(nonclosability_sequence(0, s), std::invalid_argument);
}
