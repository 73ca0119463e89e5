#pragma once

#include <cstdint>
#include <random>

#include "araki/linalg.hpp"

namespace araki {

using Rng = std::mt19937_64;

/// Independent deterministic stream for trial `trial` of suite `suite`.
inline Rng trial_rng(std::uint64_t seed, std::uint64_t suite, std::uint64_t trial) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(suite), static_cast<std::uint32_t>(trial),
                    static_cast<std::uint32_t>(trial >> 32)};
  return Rng(seq);
}

template <typename Scalar>
Matrix<Scalar> random_gaussian(Index rows, Index cols, Rng& rng) {
  std::normal_distribution<double> nd(0.0, 1.0);
  Matrix<Scalar> m(rows, cols);
  for (Index j = 0; j < cols; ++j)
    for (Index i = 0; i < rows; ++i) {
      if constexpr (std::is_same_v<Scalar, cplx>) {
        const double re = nd(rng);
        const double im = nd(rng);
        m(i, j) = cplx(re, im);
      } else {
        m(i, j) = nd(rng);
      }
    }
  return m;
}

/// Random PSD matrix X X* / cols. rank < dim produces a singular matrix.
template <typename Scalar>
Matrix<Scalar> random_psd(Index dim, Rng& rng, Index rank = -1) {
  if (rank < 0) rank = dim;
  Matrix<Scalar> x = random_gaussian<Scalar>(dim, rank, rng);
  Matrix<Scalar> a = x * x.adjoint() / static_cast<double>(std::max<Index>(rank, 1));
  return (a + a.adjoint()) / 2.0;
}

template <typename Scalar>
Matrix<Scalar> random_hermitian(Index dim, Rng& rng) {
  Matrix<Scalar> x = random_gaussian<Scalar>(dim, dim, rng);
  return (x + x.adjoint()) / 2.0;
}

/// Haar-distributed unitary via QR with phase correction.
template <typename Scalar>
Matrix<Scalar> random_unitary(Index dim, Rng& rng) {
  Matrix<Scalar> x = random_gaussian<Scalar>(dim, dim, rng);
  Eigen::HouseholderQR<Matrix<Scalar>> qr(x);
  Matrix<Scalar> q = qr.householderQ();
  Matrix<Scalar> r = qr.matrixQR().template triangularView<Eigen::Upper>();
  for (Index j = 0; j < dim; ++j) {
    const Scalar d = r(j, j);
    if (std::abs(d) > 0) q.col(j) *= d / std::abs(d);
  }
  return q;
}

/// Random unit-trace PSD matrix of the given rank (full rank by default).
inline MatrixXc random_density_matrix(Index dim, Rng& rng, Index rank = -1) {
  MatrixXc a = random_psd<cplx>(dim, rng, rank);
  a /= a.trace().real();
  return (a + a.adjoint()) / 2.0;
}

/// Random coordinate-block projection mask with at least one index on each side.
inline std::vector<bool> random_mask(Index dim, Rng& rng) {
  std::vector<bool> mask(static_cast<std::size_t>(dim), false);
  std::bernoulli_distribution coin(0.5);
  for (auto&& m : mask) m = coin(rng);
  if (dim >= 2) {
    mask.front() = true;
    mask.back() = false;
  }
  return mask;
}

}  // namespace araki
