#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include "gausscalc/polynomial.hpp"

namespace gausscalc {

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, std::size_t position);
  /// Byte offset into the input where the problem was detected.
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// Reads the polynomial wire format:
///
///   poly   := ['+'|'-'] term (('+'|'-') term)*
///   term   := [rational] factor*        (at least one of the two)
///   factor := 'x' <positive int> ['^' <positive int>]
///   rational := <int> ['/' <positive int>]
///
/// Whitespace between tokens is ignored; U+2212 is accepted as a minus sign.
Polynomial parse_polynomial(std::string_view text);

/// Canonical text, highest graded-lex term first, e.g. "1/4 x1^2 + 3". The zero
/// polynomial is "0". parse_polynomial(to_string(p)) == p.
std::string to_string(const Polynomial& p);

/// Reads a monomial such as "x1^2 x3" (or "1") as a multi-index.
MultiIndex parse_multi_index(std::string_view text);
std::string to_string(const MultiIndex& alpha);

}  // namespace gausscalc
