#include "gausscalc/matrixrep.hpp"

#include <cmath>

#include <unsupported/Eigen/MatrixFunctions>

#include "gausscalc/semigroups.hpp"

namespace gausscalc {

GradedBasis::GradedBasis(Variable m, Exponent n) : m_(m), n_(n) {
  // C(m+n, n), computed incrementally so oversized requests fail before enumeration.
  std::size_t count = 1;
  for (std::size_t k = 1; k <= n; ++k) {
    count = count * (m + k) / k;
    if (count > kMaxBasisSize)
      throw std::invalid_argument("graded basis (m=" + std::to_string(m) + ", n=" +
                                  std::to_string(n) + ") exceeds " +
                                  std::to_string(kMaxBasisSize) + " monomials");
  }
  monomials_ = all_multi_indices(m, n);
  for (std::size_t i = 0; i < monomials_.size(); ++i)
    index_.emplace(monomials_[i], static_cast<Eigen::Index>(i));
}

std::optional<Eigen::Index> GradedBasis::index_of(const MultiIndex& alpha) const {
  auto it = index_.find(alpha);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

Eigen::MatrixXd OperatorMatrix::to_float() const {
  return entries.unaryExpr([](const Rational& r) { return to_double(r); });
}

OperatorMatrix operator_matrix(OperatorKind kind, const GradedBasis& basis, const Rational& s) {
  if (kind == OperatorKind::NumberOp && s <= 0)
    throw std::invalid_argument("number operator needs s > 0");
  OperatorMatrix out{kind, s, MatrixQ::Zero(basis.size(), basis.size())};
  for (Eigen::Index j = 0; j < basis.size(); ++j) {
    const Polynomial x = Polynomial::monomial(basis[j]);
    Polynomial image;
    switch (kind) {
      case OperatorKind::Laplacian: image = laplacian(x); break;
      case OperatorKind::EulerD: image = euler_d(x); break;
      case OperatorKind::NumberOp: image = number_op(x, s); break;
    }
    out.entries.col(j) = basis.coordinates(image);
  }
  return out;
}

Eigen::MatrixXd expm(const Eigen::MatrixXd& a) {
  Eigen::MatrixXd out = a.exp();
  return out;
}

double relative_max_discrepancy(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b) {
  if (a.size() == 0) return 0.0;
  const double scale = std::max(1.0, a.cwiseAbs().maxCoeff());
  return (a - b).cwiseAbs().maxCoeff() / scale;
}

bool BchReport::passed() const {
  return bch_discrepancy <= tol && bch2_discrepancy <= tol && float_vs_exact_discrepancy <= tol &&
         std::abs(scalar_float - to_double(scalar_exact)) <= tol * std::max(1.0, scalar_float) &&
         scalar_exact_matches && exact_mismatches.empty();
}

BchReport bch_check(const Rational& s, const Rational& lambda, const GradedBasis& basis,
                    double tol) {
  if (!(tol > 0)) throw std::invalid_argument("bch_check: tol must be positive");
  if (s <= 0) throw std::invalid_argument("bch_check: s must be positive");
  if (lambda <= 0 || lambda > 1) throw std::invalid_argument("bch_check: lambda must be in (0, 1]");

  BchReport r;
  r.s = s;
  r.lambda = lambda;
  r.t = s * (1 - lambda * lambda);
  r.tau = -std::log(to_double(lambda));
  r.tol = tol;
  r.m = basis.variables();
  r.n = basis.max_degree();
  r.dimension = basis.size();

  const OperatorMatrix lap = operator_matrix(OperatorKind::Laplacian, basis);
  const OperatorMatrix eul = operator_matrix(OperatorKind::EulerD, basis);
  const OperatorMatrix num = operator_matrix(OperatorKind::NumberOp, basis, s);
  const Eigen::MatrixXd lap_f = lap.to_float();
  const Eigen::MatrixXd eul_f = eul.to_float();
  const Eigen::MatrixXd num_f = num.to_float();

  // [A, B] = alpha A with A = s Delta, B = -D, alpha = -2.
  const double tau = r.tau;
  const double alpha = -2.0;
  const Eigen::MatrixXd a = to_double(s) * lap_f;
  const Eigen::MatrixXd b = -eul_f;
  const Eigen::MatrixXd lhs = expm(tau * (a + b));
  const Eigen::MatrixXd rhs = expm(tau * b) * expm((std::expm1(tau * alpha) / alpha) * a);
  r.bch_discrepancy = relative_max_discrepancy(lhs, rhs);

  const double t = to_double(r.t);
  const Eigen::MatrixXd lhs2 = expm(-tau * num_f);
  const Eigen::MatrixXd rhs2 = expm(-tau * eul_f) * expm((t / 2.0) * lap_f);
  r.bch2_discrepancy = relative_max_discrepancy(lhs2, rhs2);

  r.scalar_float = -std::expm1(-2.0 * tau) / 2.0;
  r.scalar_exact = r.t / (2 * s);
  r.scalar_exact_matches = (1 - lambda * lambda) / 2 == r.scalar_exact;

  // Exact route: e^{-tau D} is diagonal with lambda^{|alpha|}; e^{t Delta/2} is a
  // terminating sum because Delta is nilpotent on the graded space.
  MatrixQ dilation = MatrixQ::Zero(basis.size(), basis.size());
  for (Eigen::Index i = 0; i < basis.size(); ++i) dilation(i, i) = ipow(lambda, basis[i].degree());
  const MatrixQ exact = dilation * expm_nilpotent<Rational>(MatrixQ(lap.entries * (r.t / 2)));
  for (Eigen::Index j = 0; j < basis.size(); ++j) {
    const Polynomial image = basis.polynomial<Rational>(exact.col(j));
    if (image != hermite_semigroup(Polynomial::monomial(basis[j]), s, lambda))
      r.exact_mismatches.push_back(basis[j]);
  }
  const Eigen::MatrixXd exact_f = exact.unaryExpr([](const Rational& q) { return to_double(q); });
  r.float_vs_exact_discrepancy = relative_max_discrepancy(lhs2, exact_f);
  return r;
}

}  // namespace gausscalc
