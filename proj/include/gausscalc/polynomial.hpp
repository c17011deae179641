#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <map>
#include <optional>
#include <set>
#include <vector>

#include "gausscalc/multi_index.hpp"
#include "gausscalc/rational.hpp"

namespace gausscalc {

/// Sparse polynomial sum c_alpha x^alpha over finitely many variables. The term
/// map never holds a zero coefficient, so structural equality is polynomial
/// equality. Coeff is Rational for the exact layer and double for float mode.
template <class Coeff>
class BasicPolynomial {
 public:
  using coefficient_type = Coeff;
  using Terms = std::map<MultiIndex, Coeff>;

  static constexpr std::int64_t kZeroDegree = std::numeric_limits<std::int64_t>::min();

  BasicPolynomial() = default;
  BasicPolynomial(const Coeff& constant) { add_term(MultiIndex{}, constant); }  // NOLINT
  explicit BasicPolynomial(Terms terms) {
    for (auto& [alpha, c] : terms) add_term(alpha, c);
  }

  static BasicPolynomial monomial(const MultiIndex& alpha, const Coeff& c = Coeff(1)) {
    BasicPolynomial p;
    p.add_term(alpha, c);
    return p;
  }
  static BasicPolynomial variable(Variable v) { return monomial(MultiIndex::variable(v)); }

  /// Accumulates c into the coefficient of x^alpha, dropping it on cancellation.
  void add_term(const MultiIndex& alpha, const Coeff& c) {
    if (c == Coeff(0)) return;
    auto [it, inserted] = terms_.try_emplace(alpha, c);
    if (!inserted) {
      it->second += c;
      if (it->second == Coeff(0)) terms_.erase(it);
    }
  }

  const Terms& terms() const& noexcept { return terms_; }
  Terms terms() && { return std::move(terms_); }
  std::size_t size() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }

  /// Max total degree; kZeroDegree for the zero polynomial.
  std::int64_t degree() const noexcept {
    std::int64_t d = kZeroDegree;
    for (const auto& [alpha, c] : terms_) d = std::max<std::int64_t>(d, alpha.degree());
    return d;
  }

  Coeff coefficient(const MultiIndex& alpha) const {
    auto it = terms_.find(alpha);
    return it == terms_.end() ? Coeff(0) : it->second;
  }

  /// Sorted indices of the variables that occur with a nonzero exponent.
  std::vector<Variable> active_variables() const {
    std::set<Variable> vars;
    for (const auto& [alpha, c] : terms_)
      for (const auto& [v, e] : alpha.entries()) vars.insert(v);
    return {vars.begin(), vars.end()};
  }

  BasicPolynomial& operator+=(const BasicPolynomial& other) {
    for (const auto& [alpha, c] : other.terms_) add_term(alpha, c);
    return *this;
  }
  BasicPolynomial& operator-=(const BasicPolynomial& other) {
    for (const auto& [alpha, c] : other.terms_) add_term(alpha, -c);
    return *this;
  }
  BasicPolynomial& operator*=(const Coeff& k) {
    if (k == Coeff(0)) {
      terms_.clear();
    } else {
      for (auto& [alpha, c] : terms_) c *= k;
    }
    return *this;
  }

  friend BasicPolynomial operator+(BasicPolynomial a, const BasicPolynomial& b) { return a += b; }
  friend BasicPolynomial operator-(BasicPolynomial a, const BasicPolynomial& b) { return a -= b; }
  friend BasicPolynomial operator-(BasicPolynomial a) { return a *= Coeff(-1); }
  friend BasicPolynomial operator*(BasicPolynomial a, const Coeff& k) { return a *= k; }
  friend BasicPolynomial operator*(const Coeff& k, BasicPolynomial a) { return a *= k; }
  friend BasicPolynomial operator*(const BasicPolynomial& a, const BasicPolynomial& b) {
    BasicPolynomial out;
    for (const auto& [alpha, ca] : a.terms_)
      for (const auto& [beta, cb] : b.terms_) out.add_term(alpha + beta, ca * cb);
    return out;
  }
  BasicPolynomial& operator*=(const BasicPolynomial& other) { return *this = *this * other; }

  friend bool operator==(const BasicPolynomial& a, const BasicPolynomial& b) {
    return a.terms_ == b.terms_;
  }

 private:
  Terms terms_;
};

using Polynomial = BasicPolynomial<Rational>;
using PolynomialF = BasicPolynomial<double>;

/// Coefficient-type conversion, e.g. exact to float mode.
template <class To, class From>
BasicPolynomial<To> polynomial_cast(const BasicPolynomial<From>& p) {
  BasicPolynomial<To> out;
  for (const auto& [alpha, c] : p.terms()) {
    if constexpr (std::is_same_v<From, Rational> && !std::is_same_v<To, Rational>) {
      out.add_term(alpha, static_cast<To>(c.template convert_to<double>()));
    } else {
      out.add_term(alpha, static_cast<To>(c));
    }
  }
  return out;
}

template <class Coeff>
BasicPolynomial<Coeff> pow(const BasicPolynomial<Coeff>& f, std::uint32_t k) {
  return ipow(f, k);
}

/// Largest |coefficient| of f, 0 for the zero polynomial.
template <class Coeff>
Coeff max_abs_coefficient(const BasicPolynomial<Coeff>& f) {
  Coeff best(0);
  for (const auto& [alpha, c] : f.terms()) {
    Coeff a = c < Coeff(0) ? Coeff(-c) : c;
    if (a > best) best = a;
  }
  return best;
}

}  // namespace gausscalc
