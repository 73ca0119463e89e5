#include "araki/fermion.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include <boost/math/constants/constants.hpp>

namespace araki {

namespace {

constexpr double kClamp = 1e-9;
constexpr double kSpectralReject = 1e-8;
constexpr double kPathAgreement = 1e-9;

/// x ln x + (1-x) ln(1-x) after clamping to [0, 1].
double fermion_f(double x) {
  x = std::clamp(x, 0.0, 1.0);
  return xlogx(x) + xlogx(1.0 - x);
}

void check_spectrum(const RealVector& values, const char* who) {
  for (Index i = 0; i < values.size(); ++i)
    if (values(i) < -kSpectralReject || values(i) > 1.0 + kSpectralReject)
      throw SpectralError(std::string(who) + ": covariance eigenvalue outside [0, 1]");
}

double entropy_of_block(const MatrixXc& c_block) {
  if (c_block.rows() == 0) return 0.0;
  Eigen::SelfAdjointEigenSolver<MatrixXc> es(c_block, Eigen::EigenvaluesOnly);
  check_spectrum(es.eigenvalues(), "sigma_trace");
  double s = 0.0;
  for (Index i = 0; i < es.eigenvalues().size(); ++i) s -= fermion_f(es.eigenvalues()(i));
  return s;
}

MatrixXc gather(const MatrixXc& m, const std::vector<Index>& idx) {
  const Index n = static_cast<Index>(idx.size());
  MatrixXc out(n, n);
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j) out(i, j) = m(idx[static_cast<std::size_t>(i)], idx[static_cast<std::size_t>(j)]);
  return out;
}

}  // namespace

void IntervalConfig::validate() const {
  if (intervals.size() < 2) throw ConfigError("IntervalConfig: need at least two intervals");
  if (resolution < 1) throw ConfigError("IntervalConfig: resolution must be positive");
  if (multiplicity < 1) throw ConfigError("IntervalConfig: multiplicity must be positive");
  for (const auto& iv : intervals)
    if (!(iv.left < iv.right) || !std::isfinite(iv.left) || !std::isfinite(iv.right))
      throw ConfigError("IntervalConfig: every interval needs left < right");
  for (std::size_t i = 0; i < intervals.size(); ++i)
    for (std::size_t j = i + 1; j < intervals.size(); ++j) {
      const auto& a = intervals[i];
      const auto& b = intervals[j];
      // Closures must be disjoint.
      if (!(a.right < b.left || b.right < a.left)) throw ConfigError("IntervalConfig: intervals overlap or touch");
    }
  if (regions.empty()) {
    if (intervals.size() != 2) throw ConfigError("IntervalConfig: region labels required for more than two intervals");
  } else {
    if (regions.size() != intervals.size()) throw ConfigError("IntervalConfig: one region label per interval");
    bool has1 = false, has2 = false;
    for (int r : regions) {
      if (r != 1 && r != 2) throw ConfigError("IntervalConfig: region labels must be 1 or 2");
      has1 |= r == 1;
      has2 |= r == 2;
    }
    if (!has1 || !has2) throw ConfigError("IntervalConfig: both regions must be nonempty");
  }
}

int IntervalConfig::region_of(std::size_t interval) const {
  return regions.empty() ? static_cast<int>(interval) + 1 : regions[interval];
}

cplx hardy_lattice_kernel(long long delta) {
  if (delta == 0) return {0.5, 0.0};
  if (delta % 2 == 0) return {0.0, 0.0};
  return {0.0, 1.0 / (boost::math::constants::pi<double>() * static_cast<double>(delta))};
}

MatrixXc lattice_covariance(const std::vector<long long>& sites) {
  const Index n = static_cast<Index>(sites.size());
  MatrixXc c(n, n);
  for (Index j = 0; j < n; ++j)
    for (Index k = 0; k < n; ++k)
      c(j, k) = hardy_lattice_kernel(sites[static_cast<std::size_t>(k)] - sites[static_cast<std::size_t>(j)]);
  return c;
}

std::vector<Index> CovarianceSystem::region_indices(int region) const {
  const auto& mask = *(region == 1 ? p1 : p2).mask();
  std::vector<Index> out;
  for (std::size_t i = 0; i < mask.size(); ++i)
    if (mask[i]) out.push_back(static_cast<Index>(i));
  return out;
}

CovarianceSystem build_covariance(const IntervalConfig& config) {
  return build_covariance(config, static_cast<double>(config.resolution));
}

CovarianceSystem build_covariance(const IntervalConfig& config, double density) {
  config.validate();
  if (!(density > 0.0)) throw ConfigError("build_covariance: site density must be positive");

  std::vector<std::size_t> order(config.intervals.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return config.intervals[a].left < config.intervals[b].left; });

  CovarianceSystem sys;
  sys.multiplicity = config.multiplicity;
  std::vector<long long> sites;
  std::vector<bool> mask1;
  long long next_free = std::numeric_limits<long long>::min();
  for (std::size_t i : order) {
    const auto& iv = config.intervals[i];
    SiteBlock block;
    block.interval = i;
    block.region = config.region_of(i);
    block.lattice_first = std::llround(iv.left * density);
    block.count = std::max<Index>(2, static_cast<Index>(std::llround((iv.right - iv.left) * density)));
    if (next_free != std::numeric_limits<long long>::min()) block.lattice_first = std::max(block.lattice_first, next_free);
    block.matrix_offset = static_cast<Index>(sites.size());
    for (Index s = 0; s < block.count; ++s) {
      sites.push_back(block.lattice_first + s);
      mask1.push_back(block.region == 1);
    }
    // At least one empty site between consecutive intervals.
    next_free = block.lattice_first + block.count + 1;
    sys.site_map.push_back(block);
  }

  sys.c = HermitianOperator<cplx>(lattice_covariance(sites));
  check_spectrum(sys.c.eigenvalues(), "build_covariance");
  sys.p1 = OrthoProjection<cplx>(mask1);
  sys.p2 = sys.p1.complement();
  return sys;
}

CovarianceSystem restrict_system(const CovarianceSystem& sys, const std::vector<Index>& indices) {
  CovarianceSystem out;
  out.multiplicity = sys.multiplicity;
  out.c = HermitianOperator<cplx>(gather(sys.c.matrix(), indices));
  std::vector<bool> mask1;
  for (Index i : indices) mask1.push_back((*sys.p1.mask())[static_cast<std::size_t>(i)]);
  out.p1 = OrthoProjection<cplx>(mask1);
  out.p2 = out.p1.complement();
  for (const auto& block : sys.site_map) {
    SiteBlock b = block;
    b.count = 0;
    b.matrix_offset = -1;
    for (std::size_t j = 0; j < indices.size(); ++j) {
      const Index i = indices[j];
      if (i >= block.matrix_offset && i < block.matrix_offset + block.count) {
        if (b.count == 0) {
          b.matrix_offset = static_cast<Index>(j);
          b.lattice_first = block.lattice_first + (i - block.matrix_offset);
        }
        ++b.count;
      }
    }
    if (b.count > 0) out.site_map.push_back(b);
  }
  return out;
}

SigmaTracePaths sigma_trace_paths(const CovarianceSystem& sys) {
  check_spectrum(sys.c.eigenvalues(), "sigma_trace");
  const auto idx1 = sys.region_indices(1);
  const auto idx2 = sys.region_indices(2);
  const MatrixXc c1 = gather(sys.c.matrix(), idx1);
  const MatrixXc c2 = gather(sys.c.matrix(), idx2);

  SigmaTracePaths out;
  // Block route: Tr[P1 f(C) P1 - f(C1)] + Tr[P2 f(C) P2 - f(C2)].
  const MatrixXc fc = sys.c.apply(fermion_f);
  double block = 0.0;
  for (Index i : idx1) block += fc(i, i).real();
  for (Index i : idx2) block += fc(i, i).real();
  if (c1.rows()) block -= hermitian_function(c1, fermion_f).trace().real();
  if (c2.rows()) block -= hermitian_function(c2, fermion_f).trace().real();

  // Entropy route.
  double s12 = 0.0;
  for (Index i = 0; i < sys.c.dim(); ++i) s12 -= fermion_f(sys.c.eigenvalues()(i));
  out.s1 = entropy_of_block(c1);
  out.s2 = entropy_of_block(c2);
  out.s12 = s12;

  const double r = static_cast<double>(sys.multiplicity);
  out.block_path = r * block;
  out.entropy_path = r * (out.s1 + out.s2 - out.s12);
  out.s1 *= r;
  out.s2 *= r;
  out.s12 *= r;
  return out;
}

double sigma_trace(const CovarianceSystem& sys) {
  const auto paths = sigma_trace_paths(sys);
  if (!(std::abs(paths.block_path - paths.entropy_path) <= kPathAgreement))
    throw InternalError("sigma_trace: block and entropy evaluations disagree");
  if (paths.entropy_path < -kPathAgreement) throw InternalError("sigma_trace: negative mutual information");
  return paths.entropy_path;
}

double fermion_mutual_information(const IntervalConfig& config) { return sigma_trace(build_covariance(config)); }

MISeries mi_convergence(const IntervalConfig& config, const std::vector<double>& window_fractions) {
  if (window_fractions.empty()) throw ConfigError("mi_convergence: no window fractions");
  for (std::size_t i = 0; i < window_fractions.size(); ++i) {
    const double f = window_fractions[i];
    if (!(f > 0.0 && f <= 1.0)) throw ConfigError("mi_convergence: fractions must lie in (0, 1]");
    if (i > 0 && !(f > window_fractions[i - 1])) throw ConfigError("mi_convergence: fractions must increase");
  }
  if (window_fractions.back() != 1.0) throw ConfigError("mi_convergence: fractions must end at 1");

  const CovarianceSystem full = build_covariance(config);
  MISeries series;
  for (double f : window_fractions) {
    std::vector<Index> indices;
    for (const auto& block : full.site_map) {
      const auto w = static_cast<Index>(std::llround(f * static_cast<double>(block.count)));
      if (w < 1) throw ConfigError("mi_convergence: window smaller than one site");
      const Index start = (block.count - w) / 2;
      for (Index s = 0; s < w; ++s) indices.push_back(block.matrix_offset + start + s);
    }
    std::sort(indices.begin(), indices.end());
    const double value = f == 1.0 ? sigma_trace(full) : sigma_trace(restrict_system(full, indices));
    if (!series.values.empty() && value < series.values.back() - 1e-9)
      throw InequalityViolation("mi_convergence: windowed series decreased", value - series.values.back());
    series.window_sizes.push_back(static_cast<long long>(indices.size()));
    series.values.push_back(value);
  }
  series.extrapolated = series.values.back();
  series.extrapolation_error = 0.0;
  return series;
}

void richardson_extrapolate(MISeries& series, double refinement_ratio) {
  const auto& v = series.values;
  series.fitted_order = 0.0;
  if (v.empty()) return;
  if (v.size() == 1) {
    series.extrapolated = v.back();
    series.extrapolation_error = 0.0;
    return;
  }
  const double d2 = v[v.size() - 1] - v[v.size() - 2];
  if (v.size() == 2) {
    series.extrapolated = v.back();
    series.extrapolation_error = std::abs(d2);
    return;
  }
  const double d1 = v[v.size() - 2] - v[v.size() - 3];
  const double rho = d1 != 0.0 ? d2 / d1 : 0.0;
  if (d1 != 0.0 && rho > 0.0 && rho < 1.0) {
    const double correction = d2 * rho / (1.0 - rho);
    series.extrapolated = v.back() + correction;
    series.extrapolation_error = std::abs(correction);
    series.fitted_order = -std::log(rho) / std::log(refinement_ratio);
  } else {
    // Not in the asymptotic regime: no extrapolation, last step as uncertainty.
    series.extrapolated = v.back();
    series.extrapolation_error = std::max(std::abs(d1), std::abs(d2));
  }
}

MISeries resolution_convergence(const IntervalConfig& config, const std::vector<int>& resolutions) {
  if (resolutions.empty()) throw ConfigError("resolution_convergence: no resolutions");
  MISeries series;
  for (std::size_t i = 0; i < resolutions.size(); ++i) {
    if (i > 0 && resolutions[i] <= resolutions[i - 1]) throw ConfigError("resolution_convergence: resolutions must increase");
    IntervalConfig c = config;
    c.resolution = resolutions[i];
    series.window_sizes.push_back(resolutions[i]);
    series.values.push_back(fermion_mutual_information(c));
  }
  const double ratio = resolutions.size() >= 2
                           ? static_cast<double>(resolutions.back()) / resolutions[resolutions.size() - 2]
                           : 2.0;
  richardson_extrapolate(series, ratio);
  return series;
}

ScalingPair mi_scaling_invariance(const IntervalConfig& config, double scale) {
  if (!(scale > 0.0)) throw DomainError("mi_scaling_invariance: scale must be positive");
  ScalingPair out;
  out.base = sigma_trace(build_covariance(config));
  IntervalConfig scaled = config;
  for (auto& iv : scaled.intervals) {
    iv.left *= scale;
    iv.right *= scale;
  }
  out.scaled = sigma_trace(build_covariance(scaled, static_cast<double>(config.resolution) / scale));
  if (std::abs(out.base - out.scaled) > 1e-6)
    throw InequalityViolation("mi_scaling_invariance: scaled geometry changed the mutual information",
                              -std::abs(out.base - out.scaled));
  return out;
}

}  // namespace araki
