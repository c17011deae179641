#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <utility>
#include <vector>

#include "gausscalc/rational.hpp"

namespace gausscalc {

using Variable = std::uint32_t;  // 1-based coordinate index
using Exponent = std::uint32_t;

/// Finitely supported exponent sequence (alpha_1, alpha_2, ...). Stored sparsely
/// as (variable, exponent) pairs with strictly increasing variables and no zero
/// exponents; the empty index is the monomial 1.
class MultiIndex {
 public:
  using Entry = std::pair<Variable, Exponent>;

  MultiIndex() = default;
  /// Entries may be unsorted and repeated; zero exponents are dropped. Throws
  /// std::invalid_argument on variable index 0.
  explicit MultiIndex(std::vector<Entry> entries);
  MultiIndex(std::initializer_list<Entry> entries) : MultiIndex(std::vector<Entry>(entries)) {}

  /// dense[0] is the exponent of x1.
  static MultiIndex from_dense(std::span<const Exponent> dense);
  static MultiIndex from_dense(std::initializer_list<Exponent> dense) {
    return from_dense(std::span<const Exponent>(dense.begin(), dense.size()));
  }
  static MultiIndex variable(Variable v, Exponent e = 1) { return MultiIndex{{v, e}}; }

  const std::vector<Entry>& entries() const noexcept { return entries_; }
  bool empty() const noexcept { return entries_.empty(); }
  std::uint64_t degree() const noexcept { return degree_; }
  Exponent exponent(Variable v) const noexcept;
  /// Largest variable index present, 0 for the empty index.
  Variable max_variable() const noexcept { return entries_.empty() ? 0 : entries_.back().first; }

  /// alpha! = alpha_1! alpha_2! ...
  Rational factorial() const;

  /// Exponent-wise sum, i.e. the index of x^alpha * x^beta.
  friend MultiIndex operator+(const MultiIndex& a, const MultiIndex& b);

  /// Index with exponent of v lowered by k; requires exponent(v) >= k.
  MultiIndex lowered(Variable v, Exponent k) const;

  friend bool operator==(const MultiIndex& a, const MultiIndex& b) noexcept {
    return a.entries_ == b.entries_;
  }
  /// Graded lexicographic: total degree first, then the dense exponent vectors
  /// compared lexicographically from x1 upward.
  friend std::strong_ordering operator<=>(const MultiIndex& a, const MultiIndex& b) noexcept;

 private:
  std::vector<Entry> entries_;
  std::uint64_t degree_ = 0;
};

/// Every multi-index over variables {1..m} with total degree <= n, in ascending
/// graded-lex order.
std::vector<MultiIndex> all_multi_indices(Variable m, Exponent n);

}  // namespace gausscalc
