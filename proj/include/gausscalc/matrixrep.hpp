#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/eigen.hpp>
#include <Eigen/Dense>

#include "gausscalc/polynomial.hpp"

namespace gausscalc {

template <class Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <class Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;
using MatrixQ = Matrix<Rational>;
using VectorQ = Vector<Rational>;

inline constexpr std::size_t kMaxBasisSize = 5000;

/// Monomials x^alpha with support in {x1..xm} and |alpha| <= n, ascending
/// graded-lex (so degree never decreases along the basis). The span is
/// invariant under Delta, D and N_s.
class GradedBasis {
 public:
  GradedBasis(Variable m, Exponent n);

  Variable variables() const noexcept { return m_; }
  Exponent max_degree() const noexcept { return n_; }
  Eigen::Index size() const noexcept { return static_cast<Eigen::Index>(monomials_.size()); }
  const std::vector<MultiIndex>& monomials() const noexcept { return monomials_; }
  const MultiIndex& operator[](Eigen::Index i) const { return monomials_[static_cast<std::size_t>(i)]; }
  std::optional<Eigen::Index> index_of(const MultiIndex& alpha) const;

  /// Coordinates of f in this basis; throws std::out_of_range if f leaves the span.
  template <class C>
  Vector<C> coordinates(const BasicPolynomial<C>& f) const {
    Vector<C> v = Vector<C>::Constant(size(), C(0));
    for (const auto& [alpha, c] : f.terms()) {
      auto i = index_of(alpha);
      if (!i) throw std::out_of_range("polynomial is not in the span of the graded basis");
      v(*i) = c;
    }
    return v;
  }

  template <class C>
  BasicPolynomial<C> polynomial(const Vector<C>& v) const {
    BasicPolynomial<C> f;
    for (Eigen::Index i = 0; i < size(); ++i) f.add_term((*this)[i], v(i));
    return f;
  }

 private:
  Variable m_;
  Exponent n_;
  std::vector<MultiIndex> monomials_;
  std::map<MultiIndex, Eigen::Index> index_;
};

enum class OperatorKind { Laplacian, EulerD, NumberOp };

/// Column j holds the coordinates of the operator applied to basis monomial j.
struct OperatorMatrix {
  OperatorKind kind;
  Rational s;  // only meaningful for NumberOp
  MatrixQ entries;

  Eigen::MatrixXd to_float() const;
};

/// NumberOp uses s (> 0); the other kinds ignore it.
OperatorMatrix operator_matrix(OperatorKind kind, const GradedBasis& basis,
                               const Rational& s = Rational(0));

/// exp(A) for nilpotent A as the terminating Taylor sum. Throws
/// std::invalid_argument if A^k does not vanish for some k <= dim.
template <class Scalar>
Matrix<Scalar> expm_nilpotent(const Matrix<Scalar>& a) {
  const Eigen::Index dim = a.rows();
  Matrix<Scalar> result = Matrix<Scalar>::Identity(dim, dim);
  Matrix<Scalar> term = Matrix<Scalar>::Identity(dim, dim);
  for (Eigen::Index k = 1; k <= dim + 1; ++k) {
    term = Matrix<Scalar>(term * a) / Scalar(static_cast<long>(k));
    if (term.isZero(0)) return result;
    result += term;
  }
  throw std::invalid_argument("expm_nilpotent: matrix is not nilpotent");
}

/// Float exponential via scaling and squaring with a Pade approximant.
Eigen::MatrixXd expm(const Eigen::MatrixXd& a);

/// Entrywise max |a - b| / max(1, max |a|).
double relative_max_discrepancy(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b);

struct BchReport {
  Rational s;
  Rational lambda;
  Rational t;
  double tau = 0.0;
  double tol = 0.0;
  Variable m = 0;
  Exponent n = 0;
  Eigen::Index dimension = 0;

  /// exp(tau(A+B)) vs exp(tau B) exp((e^{tau alpha}-1)/alpha A), A = s Delta, B = -D, alpha = -2.
  double bch_discrepancy = 0.0;
  /// exp(-tau N_s) vs exp(-tau D) exp(t Delta / 2).
  double bch2_discrepancy = 0.0;
  /// Float exp(-tau N_s) vs the exact diagonal-times-nilpotent product.
  double float_vs_exact_discrepancy = 0.0;
  /// -(e^{-2 tau} - 1)/2 in floats, and t/(2s) exactly.
  double scalar_float = 0.0;
  Rational scalar_exact;
  bool scalar_exact_matches = false;  // (1 - lambda^2)/2 == t/(2s)
  /// Basis monomials whose image under diag(lambda^|alpha|) exp(t Delta/2)
  /// differs from hermite_semigroup; empty when the exact route holds.
  std::vector<MultiIndex> exact_mismatches;

  bool passed() const;
};

/// Throws std::invalid_argument for tol <= 0 or lambda outside (0, 1].
BchReport bch_check(const Rational& s, const Rational& lambda, const GradedBasis& basis,
                    double tol);

}  // namespace gausscalc
