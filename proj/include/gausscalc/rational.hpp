#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include <boost/multiprecision/gmp.hpp>

namespace gausscalc {

/// Arbitrary-precision rational backed by GMP. Expression templates are off so
/// the type composes cleanly with Eigen and with `auto`.
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;
using Integer = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                              boost::multiprecision::et_off>;

/// Integer power by repeated squaring; works for any ring-like scalar.
template <class Scalar>
Scalar ipow(Scalar base, std::uint64_t exponent) {
  Scalar result(1);
  while (exponent != 0) {
    if (exponent & 1U) result *= base;
    exponent >>= 1U;
    if (exponent != 0) base *= base;
  }
  return result;
}

/// "p/q", or "p" when the denominator is one.
std::string to_string(const Rational& r);

/// Accepts "p", "-p", "p/q" with q > 0. Throws std::invalid_argument otherwise.
Rational parse_rational(std::string_view text);

inline double to_double(const Rational& r) { return r.convert_to<double>(); }

Rational factorial(std::uint32_t n);
Rational double_factorial(std::int64_t n);  // (-1)!! = 0!! = 1

/// Exact square root when both numerator and denominator are perfect squares.
std::optional<Rational> exact_sqrt(const Rational& r);

}  // namespace gausscalc
