#include "gausscalc/multi_index.hpp"

#include <algorithm>
#include <stdexcept>

namespace gausscalc {

MultiIndex::MultiIndex(std::vector<Entry> entries) {
  std::sort(entries.begin(), entries.end());
  for (const auto& [v, e] : entries) {
    if (v == 0) throw std::invalid_argument("variable indices start at 1");
    if (e == 0) continue;
    if (!entries_.empty() && entries_.back().first == v) {
      entries_.back().second += e;
    } else {
      entries_.emplace_back(v, e);
    }
    degree_ += e;
  }
}

MultiIndex MultiIndex::from_dense(std::span<const Exponent> dense) {
  std::vector<Entry> entries;
  for (std::size_t i = 0; i < dense.size(); ++i)
    if (dense[i] != 0) entries.emplace_back(static_cast<Variable>(i + 1), dense[i]);
  return MultiIndex(std::move(entries));
}

Exponent MultiIndex::exponent(Variable v) const noexcept {
  auto it = std::lower_bound(entries_.begin(), entries_.end(), v,
                             [](const Entry& e, Variable var) { return e.first < var; });
  return (it != entries_.end() && it->first == v) ? it->second : 0;
}

Rational MultiIndex::factorial() const {
  Rational f = 1;
  for (const auto& [v, e] : entries_) f *= gausscalc::factorial(e);
  return f;
}

MultiIndex operator+(const MultiIndex& a, const MultiIndex& b) {
  MultiIndex out;
  out.entries_.reserve(a.entries_.size() + b.entries_.size());
  auto i = a.entries_.begin();
  auto j = b.entries_.begin();
  while (i != a.entries_.end() || j != b.entries_.end()) {
    if (j == b.entries_.end() || (i != a.entries_.end() && i->first < j->first)) {
      out.entries_.push_back(*i++);
    } else if (i == a.entries_.end() || j->first < i->first) {
      out.entries_.push_back(*j++);
    } else {
      out.entries_.emplace_back(i->first, i->second + j->second);
      ++i;
      ++j;
    }
  }
  out.degree_ = a.degree_ + b.degree_;
  return out;
}

MultiIndex MultiIndex::lowered(Variable v, Exponent k) const {
  MultiIndex out = *this;
  auto it = std::find_if(out.entries_.begin(), out.entries_.end(),
                         [v](const Entry& e) { return e.first == v; });
  if (it == out.entries_.end() || it->second < k)
    throw std::invalid_argument("MultiIndex::lowered: exponent too small");
  it->second -= k;
  out.degree_ -= k;
  if (it->second == 0) out.entries_.erase(it);
  return out;
}

std::strong_ordering operator<=>(const MultiIndex& a, const MultiIndex& b) noexcept {
  if (auto c = a.degree_ <=> b.degree_; c != 0) return c;
  auto i = a.entries_.begin();
  auto j = b.entries_.begin();
  while (i != a.entries_.end() && j != b.entries_.end()) {
    // First variable where the dense vectors differ decides.
    if (i->first != j->first) return i->first < j->first ? std::strong_ordering::greater
                                                          : std::strong_ordering::less;
    if (i->second != j->second) return i->second <=> j->second;
    ++i;
    ++j;
  }
  // Equal degree with one list exhausted means both are exhausted.
  return std::strong_ordering::equal;
}

namespace {

void enumerate(Variable m, Exponent remaining, std::vector<Exponent>& dense, Variable pos,
               std::vector<MultiIndex>& out) {
  if (pos == m) {
    out.push_back(MultiIndex::from_dense(dense));
    return;
  }
  for (Exponent e = 0; e <= remaining; ++e) {
    dense[pos] = e;
    enumerate(m, remaining - e, dense, pos + 1, out);
  }
  dense[pos] = 0;
}

}  // namespace

std::vector<MultiIndex> all_multi_indices(Variable m, Exponent n) {
  std::vector<MultiIndex> out;
  std::vector<Exponent> dense(m, 0);
  enumerate(m, n, dense, 0, out);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace gausscalc
