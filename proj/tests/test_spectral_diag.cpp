#include "doctest.h"

#include <cmath>
#include <numeric>

#include "araki/random.hpp"
#include "araki/spectral_diag.hpp"

using namespace araki;

namespace {

std::vector<Index> range(Index lo, Index hi) {
  std::vector<Index> out(static_cast<std::size_t>(hi - lo));
  std::iota(out.begin(), out.end(), lo);
  return out;
}

SmoothKernelSpec gaussian_spec(Index grid, double width, double side = 1.0) {
  SmoothKernelSpec spec;
  spec.side = side;
  spec.grid = grid;
  spec.dims = 1;
  spec.symbol = periodized_gaussian(side, width);
  return spec;
}

}  // namespace

TEST_CASE("singular profile matches eigenvalues of F*F") {
  Rng rng(1);
  for (int i = 0; i < 10; ++i) {
    const MatrixXc f = random_gaussian<cplx>(6, 4 + i % 3, rng);
    const SingularProfile prof = singular_profile(f);
    Eigen::SelfAdjointEigenSolver<MatrixXc> es(f.adjoint() * f);
    RealVector ev = es.eigenvalues().reverse();
    for (Index n = 0; n < prof.size(); ++n) CHECK(std::abs(prof.values(n) - std::sqrt(std::max(ev(n), 0.0))) < 1e-10);
    for (Index n = 1; n < prof.size(); ++n) CHECK(prof.values(n) <= prof.values(n - 1));
    double partial = 0.0;
    for (Index n = 0; n < prof.size(); ++n) {
      partial += std::sqrt(prof.values(n));
      CHECK(prof.half_power_partials(n) == doctest::Approx(partial));
    }
  }
  CHECK(singular_profile(MatrixXc(0, 0)).size() == 0);
}

TEST_CASE("singular profile is unitarily invariant") {
  Rng rng(2);
  const MatrixXc f = random_gaussian<cplx>(5, 5, rng);
  const MatrixXc u = random_unitary<cplx>(5, rng);
  const MatrixXc v = random_unitary<cplx>(5, rng);
  CHECK((singular_profile(f).values - singular_profile(MatrixXc(u * f * v)).values).norm() < 1e-12);
}

TEST_CASE("Fan inequality on random pairs") {
  Rng rng(3);
  for (int i = 0; i < 50; ++i) {
    const MatrixXc f = random_gaussian<cplx>(6, 6, rng);
    const MatrixXc g = random_gaussian<cplx>(6, 6, rng) * (i % 3 == 0 ? 1e-3 : 1.0);
    const FanReport r = fan_inequality_check(f, g);
    CHECK(r.violations == 0);
    CHECK(r.checks > 0);
    CHECK(r.worst_margin >= -1e-10);
  }
  CHECK_THROWS_AS(fan_inequality_check(MatrixXc(MatrixXc::Zero(2, 3)), MatrixXc(MatrixXc::Zero(3, 2))), ShapeError);
}

TEST_CASE("off-diagonal half-power bound on a 2x2 example") {
  MatrixXc f(2, 2);
  f << 0, 1, 1, 0;
  const auto r = offdiag_half_trace(f, OrthoProjection<cplx>(std::vector<bool>{true, false}));
  CHECK(r.lhs == doctest::Approx(2.0));
  CHECK(r.rhs == doctest::Approx(2.0 * (std::sqrt(2.0) + 1.0)));
  CHECK(r.diag_block == doctest::Approx(0.0));
}

TEST_CASE("off-diagonal and diagonal blocks on random operators") {
  Rng rng(4);
  for (int i = 0; i < 50; ++i) {
    const MatrixXc f = random_gaussian<cplx>(7, 7, rng);
    const auto r = offdiag_half_trace(f, OrthoProjection<cplx>(random_mask(7, rng)));
    CHECK(r.lhs <= r.rhs + 1e-8);
    CHECK(r.diag_block <= r.rhs / (std::sqrt(2.0) + 1.0) + 1e-8);
  }
}

TEST_CASE("cosine kernel has rank two") {
  SmoothKernelSpec spec;
  spec.side = 1.0;
  spec.grid = 32;
  spec.symbol = [](std::span<const double> x) -> cplx { return std::cos(2.0 * M_PI * x[0]); };
  const auto km = smooth_kernel_matrix(spec, range(0, 10), range(16, 26));
  const SingularProfile prof = singular_profile(km.coupling);
  CHECK(prof.values(0) > 1.0);
  for (Index n = 2; n < prof.size(); ++n) CHECK(prof.values(n) <= prof.zero_floor * 10 + 1e-12);
  const auto diag = half_power_summability_diagnostic(prof);
  CHECK(diag.plateau_reached);
  CHECK(diag.tail_estimate == 0.0);
}

TEST_CASE("full-grid kernel spectrum equals the discrete Fourier transform") {
  const SmoothKernelSpec spec = gaussian_spec(24, 0.1);
  const auto km = smooth_kernel_matrix(spec, range(0, 10), range(10, 24));
  Eigen::SelfAdjointEigenSolver<MatrixXc> es(km.kernel);
  CHECK((es.eigenvalues() - fourier_symbol_spectrum(spec)).cwiseAbs().maxCoeff() < 1e-8);
}

TEST_CASE("two-dimensional grids") {
  SmoothKernelSpec spec;
  spec.side = 1.0;
  spec.grid = 6;
  spec.dims = 2;
  spec.symbol = periodized_gaussian(1.0, 0.15);
  CHECK(spec.points() == 36);
  const auto x = spec.point(7);
  CHECK(x[0] == doctest::Approx(1.0 / 6 - 0.5));
  CHECK(x[1] == doctest::Approx(1.0 / 6 - 0.5));
  const auto km = smooth_kernel_matrix(spec, range(0, 18), range(18, 36));
  Eigen::SelfAdjointEigenSolver<MatrixXc> es(km.kernel);
  CHECK((es.eigenvalues() - fourier_symbol_spectrum(spec)).cwiseAbs().maxCoeff() < 1e-8);
}

TEST_CASE("kernel configuration validation") {
  SmoothKernelSpec spec = gaussian_spec(16, 0.1);
  CHECK_THROWS_AS(smooth_kernel_matrix(spec, {0, 1, 2}, {2, 3}), PreconditionError);
  CHECK_THROWS_AS(smooth_kernel_matrix(spec, {0, 1}, {99}), PreconditionError);

  SmoothKernelSpec aperiodic = spec;
  aperiodic.symbol = [](std::span<const double> x) -> cplx { return std::exp(-x[0] * x[0]); };
  CHECK_THROWS_AS(aperiodic.validate(), ConfigError);

  SmoothKernelSpec asymmetric = spec;
  asymmetric.symbol = [](std::span<const double> x) -> cplx { return std::sin(2.0 * M_PI * x[0]); };
  CHECK_THROWS_AS(asymmetric.validate(), ConfigError);

  SmoothKernelSpec empty = spec;
  empty.symbol = nullptr;
  CHECK_THROWS_AS(empty.validate(), ConfigError);
}

TEST_CASE("decay fit recovers power laws") {
  RealVector v(200);
  for (Index n = 0; n < v.size(); ++n) v(n) = 3.0 * std::pow(static_cast<double>(n + 1), -4.0);
  const auto prof = SingularProfile::from_values(v);
  const auto fit = fit_decay(prof, 1, 200);
  CHECK(fit.slope == doctest::Approx(-4.0).epsilon(1e-10));
  CHECK(std::exp(fit.intercept) == doctest::Approx(3.0).epsilon(1e-10));
  CHECK(fit.points == 200);
}

TEST_CASE("summability diagnostic distinguishes n^-4 from n^-1") {
  const Index n = 5000;
  RealVector fast(n), slow(n);
  for (Index i = 0; i < n; ++i) {
    fast(i) = std::pow(static_cast<double>(i + 1), -4.0);
    slow(i) = 1.0 / static_cast<double>(i + 1);
  }
  const auto fd = half_power_summability_diagnostic(SingularProfile::from_values(fast));
  CHECK(fd.fitted_exponent == doctest::Approx(4.0).epsilon(1e-8));
  // Exact tail of sum_{k>N} k^-2 is about 1/(N + 1/2).
  CHECK(fd.tail_estimate == doctest::Approx(1.0 / (n + 0.5)).epsilon(1e-3));

  const auto sd = half_power_summability_diagnostic(SingularProfile::from_values(slow));
  CHECK_FALSE(sd.plateau_reached);
  CHECK(std::isinf(sd.tail_estimate));

  RealVector steep(400);
  for (Index i = 0; i < steep.size(); ++i) steep(i) = std::pow(static_cast<double>(i + 1), -12.0);
  CHECK(half_power_summability_diagnostic(SingularProfile::from_values(steep)).plateau_reached);

  CHECK_THROWS_AS(half_power_summability_diagnostic(SingularProfile::from_values(RealVector())), DomainError);
}

TEST_CASE("smooth Gaussian coupling decays fast") {
  const Index grid = 64;
  const auto km = smooth_kernel_matrix(gaussian_spec(grid, 1.0 / 8.0), range(0, grid / 2), range(grid / 2, grid));
  const SingularProfile prof = singular_profile(km.offdiagonal_part());
  const auto fit = fit_decay(prof, 5, grid / 2);
  MESSAGE("Gaussian coupling slope at N=64: " << fit.slope << " over " << fit.points << " points");
  CHECK(fit.slope <= -6.0);
  CHECK(half_power_summability_diagnostic(prof).plateau_reached);
}
