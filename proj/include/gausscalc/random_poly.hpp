#pragma once

#include <cstddef>
#include <random>

#include "gausscalc/polynomial.hpp"

namespace gausscalc {

/// Shape of the seeded random polynomials used by scans and property checks.
struct RandomPolynomialSpec {
  Variable max_variables = 4;
  Exponent max_degree = 8;
  std::size_t max_terms = 6;
  int max_numerator = 9;
  int max_denominator = 4;
};

MultiIndex random_multi_index(std::mt19937_64& rng, Variable max_variables, Exponent max_degree);

/// Nonzero polynomial with 1..max_terms terms and small rational coefficients.
Polynomial random_polynomial(std::mt19937_64& rng, const RandomPolynomialSpec& spec = {});

Rational random_rational(std::mt19937_64& rng, int max_numerator, int max_denominator);

}  // namespace gausscalc
