#pragma once

#include <functional>
#include <span>
#include <vector>

#include "araki/operator.hpp"

namespace araki {

/// Singular values in nonincreasing order with the running sums of their square roots.
struct SingularProfile {
  RealVector values;
  RealVector half_power_partials;
  /// Values at or below this are numerically zero (0 for exact, synthetic profiles).
  double zero_floor = 0.0;

  Index size() const { return values.size(); }
  double half_power_sum() const { return size() ? half_power_partials(size() - 1) : 0.0; }
  static SingularProfile from_values(RealVector values);
};

template <typename Derived>
SingularProfile singular_profile(const Eigen::MatrixBase<Derived>& f) {
  using Scalar = typename Derived::Scalar;
  if (f.size() == 0) return SingularProfile::from_values(RealVector());
  Eigen::BDCSVD<Matrix<Scalar>> svd(f.eval());
  SingularProfile out = SingularProfile::from_values(svd.singularValues());
  // Singular values below max(rows, cols) * eps * mu_1 are indistinguishable from zero.
  out.zero_floor = static_cast<double>(std::max(f.rows(), f.cols())) * Eigen::NumTraits<double>::epsilon() *
                   (out.size() ? out.values(0) : 0.0);
  return out;
}

struct FanReport {
  int checks = 0;
  int violations = 0;
  double worst_margin = 0.0;  // min over (n, m) of mu_{n+1}(F) + mu_{m+1}(G) - mu_{n+m+1}(F+G)
};

/// Checks mu_{n+m+1}(F+G) <= mu_{n+1}(F) + mu_{m+1}(G) for every admissible (n, m).
FanReport fan_inequality_check(const SingularProfile& f, const SingularProfile& g, const SingularProfile& sum,
                               double tol = 1e-10);

template <typename DerivedF, typename DerivedG>
FanReport fan_inequality_check(const Eigen::MatrixBase<DerivedF>& f, const Eigen::MatrixBase<DerivedG>& g,
                               double tol = 1e-10) {
  if (f.rows() != g.rows() || f.cols() != g.cols()) throw ShapeError("fan_inequality_check: shapes differ");
  return fan_inequality_check(singular_profile(f), singular_profile(g), singular_profile((f + g).eval()), tol);
}

struct OffdiagHalfTrace {
  double lhs = 0.0;        // sum mu_n(F1)^{1/2}, F1 = PF(1-P) + (1-P)FP
  double rhs = 0.0;        // (sqrt 2 + 1) sum mu_n(F)^{1/2}
  double diag_block = 0.0; // sum mu_n(PFP)^{1/2}
};

/// Half-power trace of the off-diagonal part of F. Throws InequalityViolation if
/// either lhs or diag_block exceeds rhs + 1e-8.
OffdiagHalfTrace offdiag_half_trace(const MatrixXc& f, const OrthoProjection<cplx>& p);

/// Same quantities without the assertion (used by audits to record margins).
OffdiagHalfTrace offdiag_half_trace_values(const MatrixXc& f, const OrthoProjection<cplx>& p);

/// Periodic symbol G on the cube [-L/2, L/2)^d sampled on an N^d grid.
struct SmoothKernelSpec {
  double side = 1.0;
  Index grid = 1;
  int dims = 1;
  std::function<cplx(std::span<const double>)> symbol;

  Index points() const;
  /// Coordinates of flattened grid index `flat` (row-major over axes, spacing side/grid).
  std::vector<double> point(Index flat) const;
  /// Throws ConfigError unless G(x + L e_i) = G(x) and G(-x) = conj G(x) at sampled points (tol 1e-10).
  void validate() const;
};

struct KernelMatrices {
  std::vector<Index> sites;   // region1 followed by region2
  Index region1_size = 0;
  MatrixXc kernel;            // [G(x_j - x_k)] over the union
  MatrixXc coupling;          // region1 x region2 block

  /// PF(1-P) + (1-P)FP on the union, P = region1.
  MatrixXc offdiagonal_part() const;
  OrthoProjection<cplx> region1_projection() const;
};

/// Kernel matrix of G(x - y) over the union of two disjoint grid regions.
KernelMatrices smooth_kernel_matrix(const SmoothKernelSpec& spec, const std::vector<Index>& region1,
                                    const std::vector<Index>& region2);

/// Eigenvalues of the full-grid circulant kernel, via a direct DFT of the symbol samples.
RealVector fourier_symbol_spectrum(const SmoothKernelSpec& spec);

/// Periodized Gaussian exp(-|x|^2 / (2 w^2)) summed over neighbouring periods.
std::function<cplx(std::span<const double>)> periodized_gaussian(double side, double width, int images = 4);

struct DecayFit {
  double slope = 0.0;
  double intercept = 0.0;
  Index first = 0;  // 1-based indices used
  Index last = 0;
  Index points = 0;
};

/// Least-squares fit of ln mu_n against ln n over n in [first, last] (1-based),
/// dropping values at or below the numerical-zero floor.
DecayFit fit_decay(const SingularProfile& profile, Index first, Index last);

struct SummabilityDiagnostic {
  bool plateau_reached = false;
  double tail_estimate = 0.0;
  double relative_increment = 0.0;
  double fitted_exponent = 0.0;
};

/// Whether the half-power partial sums have levelled off over the last tenth
/// of the indices (relative increment < 1e-6), and a power-law tail estimate
/// of sum_{n > N} mu_n^{1/2}.
SummabilityDiagnostic half_power_summability_diagnostic(const SingularProfile& profile);

}  // namespace araki
