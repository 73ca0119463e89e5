#include "araki/spectral_diag.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include <boost/math/constants/constants.hpp>

namespace araki {

SingularProfile SingularProfile::from_values(RealVector values) {
  std::sort(values.data(), values.data() + values.size(), std::greater<>());
  for (Index i = 0; i < values.size(); ++i)
    if (values(i) < 0.0) throw DomainError("SingularProfile: negative singular value");
  SingularProfile out;
  out.values = std::move(values);
  out.half_power_partials.resize(out.values.size());
  double running = 0.0;
  for (Index i = 0; i < out.values.size(); ++i) {
    running += std::sqrt(out.values(i));
    out.half_power_partials(i) = running;
  }
  return out;
}

FanReport fan_inequality_check(const SingularProfile& f, const SingularProfile& g, const SingularProfile& sum,
                               double tol) {
  FanReport report;
  const Index n_vals = std::min({f.size(), g.size(), sum.size()});
  bool first = true;
  // 0-based: mu[n + m] (F + G) <= mu[n](F) + mu[m](G).
  for (Index n = 0; n < n_vals; ++n) {
    for (Index m = 0; n + m < n_vals; ++m) {
      const double margin = f.values(n) + g.values(m) - sum.values(n + m);
      ++report.checks;
      if (margin < -tol) ++report.violations;
      if (first || margin < report.worst_margin) report.worst_margin = margin;
      first = false;
    }
  }
  return report;
}

OffdiagHalfTrace offdiag_half_trace_values(const MatrixXc& f, const OrthoProjection<cplx>& p) {
  if (f.rows() != p.dim() || f.cols() != p.dim()) throw ShapeError("offdiag_half_trace: shapes differ");
  const MatrixXc& pm = p.matrix();
  const MatrixXc q = MatrixXc::Identity(p.dim(), p.dim()) - pm;
  const MatrixXc f1 = pm * f * q + q * f * pm;
  OffdiagHalfTrace out;
  out.lhs = singular_profile(f1).half_power_sum();
  out.rhs = (std::sqrt(2.0) + 1.0) * singular_profile(f).half_power_sum();
  out.diag_block = singular_profile(MatrixXc(pm * f * pm)).half_power_sum();
  return out;
}

OffdiagHalfTrace offdiag_half_trace(const MatrixXc& f, const OrthoProjection<cplx>& p) {
  const OffdiagHalfTrace out = offdiag_half_trace_values(f, p);
  if (out.lhs > out.rhs + 1e-8)
    throw InequalityViolation("offdiag_half_trace: off-diagonal half-power trace exceeds bound", out.rhs - out.lhs);
  if (out.diag_block > out.rhs + 1e-8)
    throw InequalityViolation("offdiag_half_trace: diagonal-block half-power trace exceeds bound",
                              out.rhs - out.diag_block);
  return out;
}

Index SmoothKernelSpec::points() const {
  Index n = 1;
  for (int i = 0; i < dims; ++i) n *= grid;
  return n;
}

std::vector<double> SmoothKernelSpec::point(Index flat) const {
  std::vector<double> x(static_cast<std::size_t>(dims));
  for (int axis = dims - 1; axis >= 0; --axis) {
    const Index j = flat % grid;
    flat /= grid;
    x[static_cast<std::size_t>(axis)] = static_cast<double>(j) * side / static_cast<double>(grid) - side / 2.0;
  }
  return x;
}

void SmoothKernelSpec::validate() const {
  if (!(side > 0.0) || grid < 1 || dims < 1) throw ConfigError("SmoothKernelSpec: bad side, grid or dims");
  if (!symbol) throw ConfigError("SmoothKernelSpec: symbol not set");
  static constexpr double fractions[] = {-0.4375, -0.31, -0.125, 0.0, 0.07, 0.2, 0.333, 0.49};
  const double tol = 1e-10;
  std::vector<double> x(static_cast<std::size_t>(dims)), shifted, neg;
  for (std::size_t s = 0; s < std::size(fractions); ++s) {
    for (int axis = 0; axis < dims; ++axis)
      x[static_cast<std::size_t>(axis)] = side * fractions[(s + static_cast<std::size_t>(axis) * 3) % std::size(fractions)];
    const cplx gx = symbol(x);
    neg = x;
    for (auto& v : neg) v = -v;
    if (std::abs(symbol(neg) - std::conj(gx)) > tol) throw ConfigError("SmoothKernelSpec: symbol is not conjugate symmetric");
    for (int axis = 0; axis < dims; ++axis) {
      shifted = x;
      shifted[static_cast<std::size_t>(axis)] += side;
      if (std::abs(symbol(shifted) - gx) > tol) throw ConfigError("SmoothKernelSpec: symbol is not periodic");
    }
  }
}

MatrixXc KernelMatrices::offdiagonal_part() const {
  const Index n = static_cast<Index>(sites.size());
  MatrixXc out = MatrixXc::Zero(n, n);
  const Index n2 = n - region1_size;
  out.topRightCorner(region1_size, n2) = kernel.topRightCorner(region1_size, n2);
  out.bottomLeftCorner(n2, region1_size) = kernel.bottomLeftCorner(n2, region1_size);
  return out;
}

OrthoProjection<cplx> KernelMatrices::region1_projection() const {
  std::vector<bool> mask(sites.size(), false);
  std::fill(mask.begin(), mask.begin() + region1_size, true);
  return OrthoProjection<cplx>(std::move(mask));
}

KernelMatrices smooth_kernel_matrix(const SmoothKernelSpec& spec, const std::vector<Index>& region1,
                                    const std::vector<Index>& region2) {
  spec.validate();
  const Index total = spec.points();
  std::vector<bool> seen(static_cast<std::size_t>(total), false);
  KernelMatrices out;
  for (const auto* region : {&region1, &region2}) {
    for (Index s : *region) {
      if (s < 0 || s >= total) throw PreconditionError("smooth_kernel_matrix: site outside the grid");
      if (seen[static_cast<std::size_t>(s)]) throw PreconditionError("smooth_kernel_matrix: regions overlap");
      seen[static_cast<std::size_t>(s)] = true;
      out.sites.push_back(s);
    }
  }
  out.region1_size = static_cast<Index>(region1.size());

  const Index n = static_cast<Index>(out.sites.size());
  std::vector<std::vector<double>> coords;
  coords.reserve(static_cast<std::size_t>(n));
  for (Index s : out.sites) coords.push_back(spec.point(s));
  out.kernel.resize(n, n);
  std::vector<double> diff(static_cast<std::size_t>(spec.dims));
  for (Index j = 0; j < n; ++j)
    for (Index k = 0; k < n; ++k) {
      for (int axis = 0; axis < spec.dims; ++axis) {
        const auto a = static_cast<std::size_t>(axis);
        diff[a] = coords[static_cast<std::size_t>(j)][a] - coords[static_cast<std::size_t>(k)][a];
      }
      out.kernel(j, k) = spec.symbol(diff);
    }
  out.coupling = out.kernel.topRightCorner(out.region1_size, n - out.region1_size);
  return out;
}

RealVector fourier_symbol_spectrum(const SmoothKernelSpec& spec) {
  spec.validate();
  const Index total = spec.points();
  const double two_pi = 2.0 * boost::math::constants::pi<double>();
  // g(delta) for each multi-index separation delta in [0, N)^d.
  std::vector<cplx> g(static_cast<std::size_t>(total));
  std::vector<double> x(static_cast<std::size_t>(spec.dims));
  auto digits = [&](Index flat) {
    std::vector<Index> d(static_cast<std::size_t>(spec.dims));
    for (int axis = spec.dims - 1; axis >= 0; --axis) {
      d[static_cast<std::size_t>(axis)] = flat % spec.grid;
      flat /= spec.grid;
    }
    return d;
  };
  for (Index flat = 0; flat < total; ++flat) {
    const auto d = digits(flat);
    for (int axis = 0; axis < spec.dims; ++axis)
      x[static_cast<std::size_t>(axis)] = static_cast<double>(d[static_cast<std::size_t>(axis)]) * spec.side /
                                          static_cast<double>(spec.grid);
    g[static_cast<std::size_t>(flat)] = spec.symbol(x);
  }
  RealVector out(total);
  for (Index m = 0; m < total; ++m) {
    const auto mm = digits(m);
    cplx acc = 0.0;
    for (Index flat = 0; flat < total; ++flat) {
      const auto d = digits(flat);
      double phase = 0.0;
      for (int axis = 0; axis < spec.dims; ++axis)
        phase += static_cast<double>(d[static_cast<std::size_t>(axis)] * mm[static_cast<std::size_t>(axis)]);
      acc += g[static_cast<std::size_t>(flat)] * std::polar(1.0, -two_pi * phase / static_cast<double>(spec.grid));
    }
    out(m) = acc.real();
  }
  std::sort(out.data(), out.data() + out.size());
  return out;
}

std::function<cplx(std::span<const double>)> periodized_gaussian(double side, double width, int images) {
  return [side, width, images](std::span<const double> x) -> cplx {
    double value = 1.0;
    for (double xi : x) {
      double axis_sum = 0.0;
      for (int m = -images; m <= images; ++m) {
        const double y = xi - m * side;
        axis_sum += std::exp(-y * y / (2.0 * width * width));
      }
      value *= axis_sum;
    }
    return value;
  };
}

DecayFit fit_decay(const SingularProfile& profile, Index first, Index last) {
  DecayFit fit;
  first = std::max<Index>(first, 1);
  last = std::min(last, profile.size());
  fit.first = first;
  fit.last = last;
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  Index count = 0;
  for (Index n = first; n <= last; ++n) {
    const double mu = profile.values(n - 1);
    if (!(mu > profile.zero_floor) || !(mu > 0.0)) continue;
    const double lx = std::log(static_cast<double>(n));
    const double ly = std::log(mu);
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
    ++count;
  }
  fit.points = count;
  if (count < 2) return fit;
  const double c = static_cast<double>(count);
  const double denom = c * sxx - sx * sx;
  fit.slope = (c * sxy - sx * sy) / denom;
  fit.intercept = (sy - fit.slope * sx) / c;
  return fit;
}

SummabilityDiagnostic half_power_summability_diagnostic(const SingularProfile& profile) {
  if (profile.size() == 0) throw DomainError("half_power_summability_diagnostic: empty profile");
  SummabilityDiagnostic out;
  const Index n = profile.size();

  Index effective = 0;
  while (effective < n && profile.values(effective) > profile.zero_floor && profile.values(effective) > 0.0)
    ++effective;
  if (effective < n) {
    // The profile reaches (numerical) zero: the half-power series is a finite sum.
    out.plateau_reached = true;
    out.tail_estimate = 0.0;
    return out;
  }

  const Index window = std::max<Index>(2, (n + 9) / 10);
  const double total = profile.half_power_sum();
  const double before = n > window ? profile.half_power_partials(n - window - 1) : 0.0;
  out.relative_increment = total > 0.0 ? (total - before) / total : 0.0;
  out.plateau_reached = out.relative_increment < 1e-6;

  const DecayFit fit = fit_decay(profile, std::max<Index>(1, n - window + 1), n);
  const double alpha = -fit.slope;
  out.fitted_exponent = alpha;
  if (fit.points >= 2 && alpha > 2.0) {
    // sum_{k > N} sqrt(C) k^{-alpha/2} ~ sqrt(C) (N + 1/2)^{1 - alpha/2} / (alpha/2 - 1)
    const double half = alpha / 2.0;
    out.tail_estimate = std::exp(fit.intercept / 2.0) * std::pow(static_cast<double>(n) + 0.5, 1.0 - half) / (half - 1.0);
  } else {
    out.tail_estimate = std::numeric_limits<double>::infinity();
  }
  return out;
}

}  // namespace araki
