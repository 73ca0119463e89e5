#pragma once

#include <utility>
#include <vector>

#include "araki/operator.hpp"

namespace araki {

struct Interval {
  double left = 0.0;
  double right = 0.0;
};

/// Disjoint intervals on the line. `regions[i]` in {1, 2} assigns interval i to
/// the first or second region; with exactly two intervals and no labels the
/// first is region 1 and the second region 2.
struct IntervalConfig {
  std::vector<Interval> intervals;
  int resolution = 64;  // lattice sites per unit length
  std::vector<int> regions;
  int multiplicity = 1;  // number of fermion components r

  /// Throws ConfigError on overlapping / touching / empty intervals or bad labels.
  void validate() const;
  int region_of(std::size_t interval) const;
};

/// Lattice covariance entry for site separation delta = k - j: the Fourier
/// coefficient of the indicator of the half band (0, pi), i.e. 1/2 at 0,
/// i / (pi delta) for odd delta and 0 for even nonzero delta.
cplx hardy_lattice_kernel(long long delta);

/// Compression of the lattice Hardy projection to the given lattice sites.
MatrixXc lattice_covariance(const std::vector<long long>& sites);

struct SiteBlock {
  std::size_t interval = 0;
  int region = 1;
  long long lattice_first = 0;
  Index count = 0;
  Index matrix_offset = 0;
};

struct CovarianceSystem {
  HermitianOperator<cplx> c;
  OrthoProjection<cplx> p1;
  OrthoProjection<cplx> p2;
  std::vector<SiteBlock> site_map;
  int multiplicity = 1;

  Index dim() const { return c.dim(); }
  std::vector<Index> region_indices(int region) const;
};

/// Discretizes the configuration at `resolution` sites per unit length.
CovarianceSystem build_covariance(const IntervalConfig& config);

/// Same with a real-valued site density (sites per unit length); site counts
/// depend only on endpoint * density.
CovarianceSystem build_covariance(const IntervalConfig& config, double density);

/// Restriction to a subset of matrix indices (sorted), keeping the region labels.
CovarianceSystem restrict_system(const CovarianceSystem& sys, const std::vector<Index>& indices);

struct SigmaTracePaths {
  double block_path = 0.0;    // Tr sigma_C from its block definition
  double entropy_path = 0.0;  // S_1 + S_2 - S_12
  double s1 = 0.0;
  double s2 = 0.0;
  double s12 = 0.0;
};

/// Both evaluations, already multiplied by the multiplicity.
SigmaTracePaths sigma_trace_paths(const CovarianceSystem& sys);

/// Tr sigma_C. Throws InternalError if the two paths differ by more than 1e-9.
double sigma_trace(const CovarianceSystem& sys);

/// Mutual information of the two regions in nats.
double fermion_mutual_information(const IntervalConfig& config);

struct MISeries {
  std::vector<long long> window_sizes;
  std::vector<double> values;
  double extrapolated = 0.0;
  double extrapolation_error = 0.0;
  double fitted_order = 0.0;  // resolution studies only; 0 when undetermined
};

/// Tr sigma_{C_p} for centered sub-windows of every interval, one per
/// fraction. Fractions must increase and end at 1. Throws InequalityViolation
/// if the series decreases by more than 1e-9.
MISeries mi_convergence(const IntervalConfig& config, const std::vector<double>& window_fractions);

/// Full mutual information at each resolution, with Richardson extrapolation
/// from the last three values. window_sizes holds the resolutions.
MISeries resolution_convergence(const IntervalConfig& config, const std::vector<int>& resolutions);

/// Richardson extrapolation of a sequence computed at geometrically refined resolutions.
void richardson_extrapolate(MISeries& series, double refinement_ratio);

struct ScalingPair {
  double base = 0.0;
  double scaled = 0.0;
};

/// MI of the configuration and of the configuration with every endpoint
/// multiplied by `scale`, at equal site counts. Throws InequalityViolation if
/// they differ by more than 1e-6.
ScalingPair mi_scaling_invariance(const IntervalConfig& config, double scale);

}  // namespace araki
