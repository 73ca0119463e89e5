#pragma once

#include <optional>
#include <vector>

#include "araki/linalg.hpp"

namespace araki {

/// Finite Hermitian matrix with its eigendecomposition cached at construction.
/// Eigenvalues are ascending; `eigenvectors()` holds them column-wise.
template <typename Scalar = cplx>
class HermitianOperator {
 public:
  using MatrixType = Matrix<Scalar>;

  static constexpr double kHermitianTol = 1e-12;
  static constexpr double kRecompositionTol = 1e-9;

  HermitianOperator() = default;

  explicit HermitianOperator(const MatrixType& m) {
    if (m.rows() != m.cols()) throw ShapeError("HermitianOperator: matrix is not square");
    if (hermitian_defect(m) > kHermitianTol * tolerance_scale(m))
      throw DomainError("HermitianOperator: matrix is not Hermitian");
    mat_ = (m + m.adjoint()) / 2.0;
    if (mat_.size() == 0) return;
    Eigen::SelfAdjointEigenSolver<MatrixType> es(mat_);
    if (es.info() != Eigen::Success) throw InternalError("HermitianOperator: eigensolver failed");
    values_ = es.eigenvalues();
    vectors_ = es.eigenvectors();
    const double err = (vectors_ * values_.asDiagonal() * vectors_.adjoint() - mat_).norm();
    if (err > kRecompositionTol * std::max(1.0, static_cast<double>(mat_.norm())))
      throw InternalError("HermitianOperator: eigendecomposition does not recompose");
  }

  Index dim() const { return mat_.rows(); }
  const MatrixType& matrix() const { return mat_; }
  const RealVector& eigenvalues() const { return values_; }
  const MatrixType& eigenvectors() const { return vectors_; }

  double min_eigenvalue() const { return dim() ? values_(0) : 0.0; }
  double max_eigenvalue() const { return dim() ? values_(dim() - 1) : 0.0; }

  /// Operator norm = largest |eigenvalue|.
  double norm() const {
    return dim() ? std::max(std::abs(values_(0)), std::abs(values_(dim() - 1))) : 0.0;
  }

  template <typename F>
  MatrixType apply(F&& f) const {
    if (dim() == 0) return MatrixType();
    return spectral_apply(vectors_, values_, std::forward<F>(f));
  }

  double trace() const { return values_.sum(); }

 private:
  MatrixType mat_;
  RealVector values_;
  MatrixType vectors_;
};

/// Orthogonal projection. Either a coordinate block (mask) or a general
/// Hermitian idempotent. Coordinate blocks keep their index list so
/// block-restrictions can be taken without dense products.
template <typename Scalar = cplx>
class OrthoProjection {
 public:
  using MatrixType = Matrix<Scalar>;

  static constexpr double kTol = 1e-12;

  OrthoProjection() = default;

  /// Coordinate projection onto the indices where mask is true.
  explicit OrthoProjection(std::vector<bool> mask) : mask_(std::move(mask)) {
    const Index n = static_cast<Index>(mask_->size());
    mat_ = MatrixType::Zero(n, n);
    for (Index i = 0; i < n; ++i)
      if ((*mask_)[static_cast<std::size_t>(i)]) mat_(i, i) = Scalar(1);
  }

  /// General projection; checks P* = P and P^2 = P.
  explicit OrthoProjection(const MatrixType& p) {
    if (p.rows() != p.cols()) throw ShapeError("OrthoProjection: matrix is not square");
    const double scale = tolerance_scale(p);
    if (hermitian_defect(p) > kTol * scale)
      throw DomainError("OrthoProjection: matrix is not Hermitian");
    if ((p * p - p).norm() > kTol * scale * std::max<double>(1.0, p.rows()))
      throw DomainError("OrthoProjection: matrix is not idempotent");
    mat_ = (p + p.adjoint()) / 2.0;
  }

  static OrthoProjection from_indices(Index dim, const std::vector<Index>& indices) {
    std::vector<bool> mask(static_cast<std::size_t>(dim), false);
    for (Index i : indices) {
      if (i < 0 || i >= dim) throw ShapeError("OrthoProjection: index out of range");
      mask[static_cast<std::size_t>(i)] = true;
    }
    return OrthoProjection(std::move(mask));
  }

  static OrthoProjection identity(Index dim) {
    return OrthoProjection(std::vector<bool>(static_cast<std::size_t>(dim), true));
  }
  static OrthoProjection zero(Index dim) {
    return OrthoProjection(std::vector<bool>(static_cast<std::size_t>(dim), false));
  }

  Index dim() const { return mat_.rows(); }
  const MatrixType& matrix() const { return mat_; }
  bool is_coordinate() const { return mask_.has_value(); }
  const std::optional<std::vector<bool>>& mask() const { return mask_; }

  /// Indices in the range (coordinate projections only).
  std::vector<Index> indices() const {
    std::vector<Index> out;
    if (!mask_) throw PreconditionError("OrthoProjection: not a coordinate projection");
    for (std::size_t i = 0; i < mask_->size(); ++i)
      if ((*mask_)[i]) out.push_back(static_cast<Index>(i));
    return out;
  }

  OrthoProjection complement() const {
    if (mask_) {
      std::vector<bool> m = *mask_;
      m.flip();
      return OrthoProjection(std::move(m));
    }
    return OrthoProjection(MatrixType(MatrixType::Identity(dim(), dim()) - mat_));
  }

  Index rank() const { return static_cast<Index>(std::llround(mat_.trace().real())); }

  /// U = 2P - 1, a self-adjoint unitary.
  MatrixType reflection() const {
    return 2.0 * mat_ - MatrixType::Identity(dim(), dim());
  }

  /// Orthonormal basis of the range, as columns.
  MatrixType range_basis() const {
    if (mask_) {
      const auto idx = indices();
      MatrixType basis = MatrixType::Zero(dim(), static_cast<Index>(idx.size()));
      for (std::size_t c = 0; c < idx.size(); ++c) basis(idx[c], static_cast<Index>(c)) = Scalar(1);
      return basis;
    }
    return araki::range_basis(mat_);
  }

  bool commutes_with(const OrthoProjection& other, double tol = 1e-10) const {
    return (mat_ * other.mat_ - other.mat_ * mat_).norm() <= tol;
  }

 private:
  MatrixType mat_;
  std::optional<std::vector<bool>> mask_;
};

/// Pinching by a projection: P X P + (1-P) X (1-P).
template <typename Scalar>
Matrix<Scalar> pinch_matrix(const Matrix<Scalar>& x, const OrthoProjection<Scalar>& p) {
  if (x.rows() != p.dim() || x.cols() != p.dim()) throw ShapeError("pinch: dimension mismatch");
  if (p.is_coordinate()) {
    Matrix<Scalar> out = x;
    const auto& mask = *p.mask();
    for (Index j = 0; j < x.cols(); ++j)
      for (Index i = 0; i < x.rows(); ++i)
        if (mask[static_cast<std::size_t>(i)] != mask[static_cast<std::size_t>(j)]) out(i, j) = Scalar(0);
    return out;
  }
  const Matrix<Scalar>& pm = p.matrix();
  const Matrix<Scalar> q = Matrix<Scalar>::Identity(p.dim(), p.dim()) - pm;
  return pm * x * pm + q * x * q;
}

}  // namespace araki
