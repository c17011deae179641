#include "gausscalc/random_poly.hpp"

namespace gausscalc {

MultiIndex random_multi_index(std::mt19937_64& rng, Variable max_variables, Exponent max_degree) {
  std::uniform_int_distribution<Exponent> degree(0, max_degree);
  std::uniform_int_distribution<Variable> var(1, max_variables);
  std::vector<MultiIndex::Entry> entries;
  for (Exponent d = degree(rng); d > 0; --d) entries.emplace_back(var(rng), 1);
  return MultiIndex(std::move(entries));
}

Rational random_rational(std::mt19937_64& rng, int max_numerator, int max_denominator) {
  std::uniform_int_distribution<int> num(-max_numerator, max_numerator - 1);
  std::uniform_int_distribution<int> den(1, max_denominator);
  int n = num(rng);
  if (n >= 0) ++n;  // skip zero
  return Rational(n, den(rng));
}

Polynomial random_polynomial(std::mt19937_64& rng, const RandomPolynomialSpec& spec) {
  std::uniform_int_distribution<std::size_t> terms(1, spec.max_terms);
  Polynomial f;
  while (f.is_zero()) {
    for (std::size_t k = terms(rng); k > 0; --k)
      f.add_term(random_multi_index(rng, spec.max_variables, spec.max_degree),
                 random_rational(rng, spec.max_numerator, spec.max_denominator));
  }
  return f;
}

}  // namespace gausscalc
