#include "gausscalc/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace gausscalc {

std::string to_string(const Rational& r) { return r.str(); }

Rational parse_rational(std::string_view text) {
  auto bad = [&] { return std::invalid_argument("not a rational: '" + std::string(text) + "'"); };
  std::size_t i = 0;
  if (i < text.size() && (text[i] == '-' || text[i] == '+')) ++i;
  auto digits = [&](std::size_t from) {
    std::size_t j = from;
    while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
    return j;
  };
  std::size_t num_end = digits(i);
  if (num_end == i) throw bad();
  Integer num(std::string(text.substr(0, num_end)));
  if (num_end == text.size()) return Rational(num);
  if (text[num_end] != '/') throw bad();
  std::size_t den_end = digits(num_end + 1);
  if (den_end == num_end + 1 || den_end != text.size()) throw bad();
  Integer den(std::string(text.substr(num_end + 1)));
  if (den == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
  return Rational(num, den);
}

Rational factorial(std::uint32_t n) {
  Integer f = 1;
  for (std::uint32_t k = 2; k <= n; ++k) f *= k;
  return Rational(f);
}

Rational double_factorial(std::int64_t n) {
  Integer f = 1;
  for (std::int64_t k = n; k > 1; k -= 2) f *= k;
  return Rational(f);
}

std::optional<Rational> exact_sqrt(const Rational& r) {
  if (r < 0) return std::nullopt;
  Integer num = boost::multiprecision::numerator(r);
  Integer den = boost::multiprecision::denominator(r);
  Integer rn = boost::multiprecision::sqrt(num);
  Integer rd = boost::multiprecision::sqrt(den);
  if (rn * rn != num || rd * rd != den) return std::nullopt;
  return Rational(rn, rd);
}

}  // namespace gausscalc
