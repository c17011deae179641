#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <vector>

#include "gausscalc/polynomial.hpp"

namespace gausscalc {

/// Nested (sparse, multivariate) Horner form of a polynomial, built once and
/// evaluated many times. The polynomial is factored variable by variable: the
/// outermost level groups terms by the exponent of the first active variable,
/// and so on down to scalar leaves.
template <class Scalar>
class HornerScheme {
 public:
  template <class Coeff>
  explicit HornerScheme(const BasicPolynomial<Coeff>& f) : variables_(f.active_variables()) {
    std::vector<Term> terms;
    terms.reserve(f.size());
    for (const auto& [alpha, c] : f.terms()) {
      Term t;
      t.exponents.resize(variables_.size(), 0);
      for (const auto& [v, e] : alpha.entries()) {
        auto pos = std::lower_bound(variables_.begin(), variables_.end(), v) - variables_.begin();
        t.exponents[static_cast<std::size_t>(pos)] = e;
      }
      if constexpr (std::is_same_v<Coeff, Rational> && !std::is_same_v<Scalar, Rational>) {
        t.coeff = static_cast<Scalar>(c.template convert_to<double>());
      } else {
        t.coeff = static_cast<Scalar>(c);
      }
      terms.push_back(std::move(t));
    }
    root_ = build(terms, 0);
  }

  /// Active variables in increasing order; operator() takes values in this order.
  const std::vector<Variable>& variables() const noexcept { return variables_; }

  Scalar operator()(std::span<const Scalar> values) const { return eval(root_, values); }

 private:
  struct Term {
    std::vector<Exponent> exponents;
    Scalar coeff{};
  };
  struct Node {
    std::size_t level = 0;  // index into variables_; == variables_.size() for leaves
    Scalar coeff{};
    std::vector<std::pair<Exponent, std::size_t>> children;  // exponent descending
  };

  std::size_t build(std::vector<Term>& terms, std::size_t level) {
    Node node;
    node.level = level;
    if (level == variables_.size()) {
      Scalar sum(0);
      for (const auto& t : terms) sum += t.coeff;
      node.coeff = sum;
      nodes_.push_back(std::move(node));
      return nodes_.size() - 1;
    }
    std::map<Exponent, std::vector<Term>, std::greater<>> groups;
    for (auto& t : terms) groups[t.exponents[level]].push_back(std::move(t));
    for (auto& [e, group] : groups) node.children.emplace_back(e, build(group, level + 1));
    nodes_.push_back(std::move(node));
    return nodes_.size() - 1;
  }

  Scalar eval(std::size_t index, std::span<const Scalar> values) const {
    const Node& node = nodes_[index];
    if (node.level == variables_.size()) return node.coeff;
    if (node.children.empty()) return Scalar(0);
    const Scalar& x = values[node.level];
    Scalar acc = eval(node.children.front().second, values);
    Exponent prev = node.children.front().first;
    for (std::size_t i = 1; i < node.children.size(); ++i) {
      const auto& [e, child] = node.children[i];
      acc = acc * ipow(x, prev - e) + eval(child, values);
      prev = e;
    }
    if (prev != 0) acc = acc * ipow(x, prev);
    return acc;
  }

  std::vector<Variable> variables_;
  std::vector<Node> nodes_;
  std::size_t root_ = 0;
};

/// Evaluates f at a sparse point; unassigned variables are 0. Scalar = double
/// for floating evaluation, Rational for exact evaluation.
template <class Scalar, class Coeff>
Scalar evaluate(const BasicPolynomial<Coeff>& f, const std::map<Variable, Scalar>& point) {
  HornerScheme<Scalar> scheme(f);
  std::vector<Scalar> values;
  values.reserve(scheme.variables().size());
  for (Variable v : scheme.variables()) {
    auto it = point.find(v);
    values.push_back(it == point.end() ? Scalar(0) : it->second);
  }
  return scheme(values);
}

}  // namespace gausscalc
