#pragma once

#include <Eigen/Dense>

#include <cmath>
#include <complex>
#include <type_traits>

#include "araki/errors.hpp"

namespace araki {

using Index = Eigen::Index;
using cplx = std::complex<double>;

template <typename Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using MatrixXc = Matrix<cplx>;
using RealVector = Eigen::VectorXd;

/// x ln x with the continuous extension 0 ln 0 = 0.
inline double xlogx(double x) { return x > 0.0 ? x * std::log(x) : 0.0; }

/// Binary entropy -x ln x - (1-x) ln(1-x), in nats.
inline double binary_entropy(double x) { return -xlogx(x) - xlogx(1.0 - x); }

template <typename Derived>
double hermitian_defect(const Eigen::MatrixBase<Derived>& m) {
  return (m - m.adjoint()).norm();
}

/// Scale used by the relative Hermitian / idempotence tolerances: max(1, ||m||_F).
template <typename Derived>
double tolerance_scale(const Eigen::MatrixBase<Derived>& m) {
  return std::max(1.0, static_cast<double>(m.norm()));
}

template <typename DerivedA, typename DerivedB>
auto kron(const Eigen::MatrixBase<DerivedA>& a, const Eigen::MatrixBase<DerivedB>& b) {
  using Scalar = typename DerivedA::Scalar;
  Matrix<Scalar> out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Index i = 0; i < a.rows(); ++i)
    for (Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

/// Rebuilds U f(diag) U* from an eigendecomposition.
template <typename DerivedU, typename F>
auto spectral_apply(const Eigen::MatrixBase<DerivedU>& vectors, const RealVector& values, F&& f) {
  using Scalar = typename DerivedU::Scalar;
  RealVector fv(values.size());
  for (Index i = 0; i < values.size(); ++i) fv(i) = f(values(i));
  Matrix<Scalar> scaled = vectors * fv.asDiagonal();
  Matrix<Scalar> out = scaled * vectors.adjoint();
  return out;
}

/// Applies a real function to a Hermitian matrix through its eigendecomposition.
template <typename Derived, typename F>
auto hermitian_function(const Eigen::MatrixBase<Derived>& m, F&& f) {
  using Scalar = typename Derived::Scalar;
  Eigen::SelfAdjointEigenSolver<Matrix<Scalar>> es(m.eval());
  return spectral_apply(es.eigenvectors(), es.eigenvalues(), std::forward<F>(f));
}

/// Smallest eigenvalue of a Hermitian matrix.
template <typename Derived>
double min_eigenvalue(const Eigen::MatrixBase<Derived>& m) {
  using Scalar = typename Derived::Scalar;
  Eigen::SelfAdjointEigenSolver<Matrix<Scalar>> es(m.eval(), Eigen::EigenvaluesOnly);
  return es.eigenvalues()(0);
}

/// Largest singular value.
template <typename Derived>
double operator_norm(const Eigen::MatrixBase<Derived>& m) {
  if (m.size() == 0) return 0.0;
  using Scalar = typename Derived::Scalar;
  Eigen::JacobiSVD<Matrix<Scalar>> svd(m.eval());
  return svd.singularValues()(0);
}

/// Orthonormal basis of the range of a Hermitian projection-like matrix
/// (eigenvectors whose eigenvalue exceeds 1/2).
template <typename Derived>
auto range_basis(const Eigen::MatrixBase<Derived>& projector) {
  using Scalar = typename Derived::Scalar;
  Eigen::SelfAdjointEigenSolver<Matrix<Scalar>> es(projector.eval());
  Index rank = 0;
  for (Index i = 0; i < es.eigenvalues().size(); ++i)
    if (es.eigenvalues()(i) > 0.5) ++rank;
  Matrix<Scalar> basis = es.eigenvectors().rightCols(rank);
  return basis;
}

}  // namespace araki
