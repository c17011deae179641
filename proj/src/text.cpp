#include "gausscalc/text.hpp"

#include <cctype>
#include <limits>
#include <optional>
#include <sstream>

namespace gausscalc {

ParseError::ParseError(const std::string& message, std::size_t position)
    : std::runtime_error(message + " at position " + std::to_string(position)),
      position_(position) {}

namespace {

constexpr std::string_view kUnicodeMinus = "\xE2\x88\x92";

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  Polynomial polynomial() {
    Polynomial out;
    skip_space();
    if (at_end()) fail("empty polynomial");
    int sign = 1;
    if (auto s = sign_token()) sign = *s;
    add(out, term(sign));
    while (true) {
      skip_space();
      if (at_end()) break;
      auto s = sign_token();
      if (!s) fail("expected '+' or '-'");
      add(out, term(*s));
    }
    return out;
  }

  MultiIndex monomial() {
    skip_space();
    std::vector<MultiIndex::Entry> entries;
    bool saw_one = false;
    if (!at_end() && peek() == '1') {
      ++pos_;
      saw_one = true;
      skip_space();
    }
    while (!at_end() && peek() == 'x') {
      entries.push_back(factor());
      skip_space();
    }
    if (!at_end()) fail("unexpected character in monomial");
    if (entries.empty() && !saw_one) fail("empty monomial");
    return MultiIndex(std::move(entries));
  }

 private:
  static void add(Polynomial& p, const std::pair<MultiIndex, Rational>& t) {
    p.add_term(t.first, t.second);
  }

  std::pair<MultiIndex, Rational> term(int sign) {
    skip_space();
    std::size_t start = pos_;
    Rational coeff = 1;
    bool has_coeff = false;
    if (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
      coeff = rational();
      has_coeff = true;
    }
    std::vector<MultiIndex::Entry> entries;
    while (true) {
      skip_space();
      if (at_end() || peek() != 'x') break;
      entries.push_back(factor());
    }
    if (!has_coeff && entries.empty()) fail("expected a coefficient or a factor", start);
    if (sign < 0) coeff = -coeff;
    return {MultiIndex(std::move(entries)), coeff};
  }

  MultiIndex::Entry factor() {
    std::size_t start = pos_;
    ++pos_;  // 'x'
    skip_space();
    Integer var = positive_integer("variable index");
    Integer exp = 1;
    skip_space();
    if (!at_end() && peek() == '^') {
      ++pos_;
      skip_space();
      exp = positive_integer("exponent");
    }
    if (var > std::numeric_limits<Variable>::max() || exp > std::numeric_limits<Exponent>::max())
      fail("index out of range", start);
    return {var.convert_to<Variable>(), exp.convert_to<Exponent>()};
  }

  Integer positive_integer(const char* what) {
    std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (start == pos_) fail(std::string("expected ") + what, start);
    Integer value(std::string(text_.substr(start, pos_ - start)));
    if (value == 0) fail(std::string(what) + " must be positive", start);
    return value;
  }

  Rational rational() {
    std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    Integer num(std::string(text_.substr(start, pos_ - start)));
    std::size_t save = pos_;
    skip_space();
    if (!at_end() && peek() == '/') {
      ++pos_;
      skip_space();
      Integer den = positive_integer("denominator");
      return Rational(num, den);
    }
    pos_ = save;
    return Rational(num);
  }

  std::optional<int> sign_token() {
    if (at_end()) return std::nullopt;
    if (peek() == '+') {
      ++pos_;
      return 1;
    }
    if (peek() == '-') {
      ++pos_;
      return -1;
    }
    if (text_.substr(pos_, kUnicodeMinus.size()) == kUnicodeMinus) {
      pos_ += kUnicodeMinus.size();
      return -1;
    }
    return std::nullopt;
  }

  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, pos_); }
  [[noreturn]] void fail(const std::string& msg, std::size_t at) const { throw ParseError(msg, at); }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_polynomial(std::string_view text) { return Parser(text).polynomial(); }

MultiIndex parse_multi_index(std::string_view text) { return Parser(text).monomial(); }

std::string to_string(const MultiIndex& alpha) {
  if (alpha.empty()) return "1";
  std::ostringstream out;
  bool first = true;
  for (const auto& [v, e] : alpha.entries()) {
    if (!first) out << ' ';
    first = false;
    out << 'x' << v;
    if (e != 1) out << '^' << e;
  }
  return out.str();
}

std::string to_string(const Polynomial& p) {
  if (p.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    const auto& [alpha, c] = *it;
    const bool negative = c < 0;
    const Rational magnitude = negative ? Rational(-c) : c;
    if (first) {
      if (negative) out << '-';
    } else {
      out << (negative ? " - " : " + ");
    }
    first = false;
    if (alpha.empty()) {
      out << to_string(magnitude);
    } else {
      if (magnitude != 1) out << to_string(magnitude) << ' ';
      out << to_string(alpha);
    }
  }
  return out.str();
}

}  // namespace gausscalc
