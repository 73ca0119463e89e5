#include "araki/audit.hpp"

#include <algorithm>
#include <cmath>

#include "araki/operator.hpp"
#include "araki/parallel.hpp"
#include "araki/random.hpp"
#include "araki/relent.hpp"
#include "araki/spectral_diag.hpp"
#include "araki/tau.hpp"

namespace araki {

namespace {

enum Suite : std::uint64_t { kTau = 1, kFan = 2, kIndex = 3, kKey = 4 };

template <typename TrialFn>
AuditReport run_suite(const std::string& name, Suite suite, const AuditOptions& opts, TrialFn&& trial_fn) {
  std::vector<std::vector<AuditRow>> per_trial(opts.trials);
  parallel_for(opts.trials, [&](std::size_t t) {
    Rng rng = trial_rng(opts.seed, suite, t);
    per_trial[t] = trial_fn(static_cast<std::uint64_t>(t), rng);
  });
  AuditReport report;
  report.suite = name;
  report.trials = opts.trials;
  for (auto& rows : per_trial)
    for (auto& row : rows) report.rows.push_back(std::move(row));
  report.finalize();
  return report;
}

Index random_dim(const AuditOptions& opts, Rng& rng) {
  std::uniform_int_distribution<Index> dist(std::max<Index>(2, opts.min_dim), std::max(opts.min_dim, opts.max_dim));
  return dist(rng);
}

/// Random PSD operator, rank-deficient in a third of the trials.
HermitianOperator<cplx> random_psd_operator(Index dim, Rng& rng) {
  std::uniform_int_distribution<int> kind(0, 2);
  const Index rank = kind(rng) == 0 ? std::max<Index>(1, dim / 2) : dim;
  return HermitianOperator<cplx>(random_psd<cplx>(dim, rng, rank));
}

}  // namespace

void AuditReport::finalize() {
  violations = 0;
  worst_margin = rows.empty() ? 0.0 : rows.front().margin();
  for (const auto& row : rows) {
    if (row.violated()) ++violations;
    worst_margin = std::min(worst_margin, row.margin());
  }
}

std::uint64_t AuditReport::violations_of(const std::string& check) const {
  return static_cast<std::uint64_t>(
      std::count_if(rows.begin(), rows.end(), [&](const AuditRow& r) { return r.check == check && r.violated(); }));
}

std::uint64_t AuditReport::rows_of(const std::string& check) const {
  return static_cast<std::uint64_t>(
      std::count_if(rows.begin(), rows.end(), [&](const AuditRow& r) { return r.check == check; }));
}

AuditReport tau_audit(const AuditOptions& opts) {
  static const std::vector<double> kTimes = {1e-3, 1e-2, 1e-1, 1.0, 10.0};
  return run_suite("tau-audit", kTau, opts, [&](std::uint64_t trial, Rng& rng) {
    std::vector<AuditRow> rows;
    const Index dim = random_dim(opts, rng);
    const auto a = random_psd_operator(dim, rng);
    const OrthoProjection<cplx> p(random_mask(dim, rng));

    std::uniform_real_distribution<double> log_eps(-3.0, 0.0);
    const double eps = std::pow(10.0, log_eps(rng));
    const auto tau = tau_spectral(a, p);
    const auto shifted = tau_epsilon_shift(a, p, eps);
    const double shift_gap = min_eigenvalue(MatrixXc(tau.tau.matrix() - shifted.matrix()));
    rows.push_back({"eps_shift", trial, eps, -shift_gap, 0.0, opts.tolerance});
    rows.push_back({"trace_nonneg", trial, static_cast<double>(dim), -tau.trace, 0.0, opts.tolerance});

    for (double t : kTimes) {
      const double gap = min_eigenvalue(pinched_resolvent_gap(a, p, t));
      // Scale-free tolerance: the resolvents are O(1/t).
      rows.push_back({"convexity", trial, t, -gap, 0.0, opts.tolerance * std::max(1.0, 1.0 / t)});
    }
    const auto report = resolvent_bound_check(a, p, kTimes, opts.tolerance);
    for (const auto& r : report.rows) rows.push_back({"resolvent", trial, r.t, r.lhs, r.rhs, opts.tolerance});
    return rows;
  });
}

AuditReport key_audit(const AuditOptions& opts) {
  static const std::vector<double> kEps = {1e-1, 1e-2, 1e-3, 1e-4};
  return run_suite("key-audit", kKey, opts, [&](std::uint64_t trial, Rng& rng) {
    std::vector<AuditRow> rows;
    const Index dim = random_dim(opts, rng);
    const auto a = random_psd_operator(dim, rng);
    const OrthoProjection<cplx> p(random_mask(dim, rng));
    const double bound = key_bound(a, p);
    double previous = 0.0;
    for (std::size_t i = 0; i < kEps.size(); ++i) {
      const auto q = tau_integrand_integral(a, p, kEps[i], 1.0, 1e-11);
      const double d = q.value.trace().real();
      rows.push_back({"key_nonneg", trial, kEps[i], -d, 0.0, 1e-9});
      rows.push_back({"key_bound", trial, kEps[i], d, bound, 1e-6});
      if (i > 0) rows.push_back({"key_monotone", trial, kEps[i], previous, d, 1e-9});
      previous = d;
    }
    return rows;
  });
}

AuditReport fan_audit(const AuditOptions& opts) {
  return run_suite("fan-audit", kFan, opts, [&](std::uint64_t trial, Rng& rng) {
    std::vector<AuditRow> rows;
    const Index rows_dim = random_dim(opts, rng);
    const Index cols_dim = random_dim(opts, rng);
    std::uniform_real_distribution<double> scale(0.1, 10.0);
    const MatrixXc f = scale(rng) * random_gaussian<cplx>(rows_dim, cols_dim, rng);
    MatrixXc g = scale(rng) * random_gaussian<cplx>(rows_dim, cols_dim, rng);
    if (trial % 4 == 0) g = -f + 1e-3 * g;  // nearly cancelling pair
    const FanReport fan = fan_inequality_check(f, g, 0.0);
    const double fan_tol = opts.tolerance * std::max(1.0, f.norm() + g.norm());
    rows.push_back({"fan", trial, static_cast<double>(fan.checks), -fan.worst_margin, 0.0, fan_tol});

    // Square operator with a random coordinate projection; low rank every other trial.
    const Index dim = random_dim(opts, rng);
    MatrixXc h = random_gaussian<cplx>(dim, dim, rng);
    if (trial % 2 == 1) {
      const Index rank = std::max<Index>(1, dim / 3);
      h = random_gaussian<cplx>(dim, rank, rng) * random_gaussian<cplx>(rank, dim, rng);
    }
    const OrthoProjection<cplx> p(random_mask(dim, rng));
    const auto half = offdiag_half_trace_values(h, p);
    rows.push_back({"half_offdiag", trial, static_cast<double>(dim), half.lhs, half.rhs, opts.tolerance});
    rows.push_back({"half_diag", trial, static_cast<double>(dim), half.diag_block, half.rhs, opts.tolerance});
    return rows;
  });
}

AuditReport index_audit(const AuditOptions& opts, Index k) {
  return run_suite("index-analog", kIndex, opts, [&](std::uint64_t trial, Rng& rng) {
    std::vector<AuditRow> rows;
    const BipartiteShape shape{k, k};
    const TraceExpectation e{shape, Factor::A};
    const Index n = k * k;

    const DensityMatrix rho(random_density_matrix(n, rng));
    const DensityMatrix sigma(random_density_matrix(n, rng));
    const auto gap = entropy_index_gap(k, rho, e);
    rows.push_back({"index_bound", trial, static_cast<double>(k), gap.s, gap.bound, 1e-8});

    const double s = relative_entropy(rho, sigma);
    rows.push_back({"positivity", trial, 0.0, -s, 0.0, 1e-10});
    const double s_restricted =
        relative_entropy(reduced_state(rho, shape, Factor::B), reduced_state(sigma, shape, Factor::B));
    rows.push_back({"monotonicity", trial, 0.0, s_restricted, s, 1e-8});

    // psi on the kept factor B; psi o E has density (1/k) 1 (x) psi.
    const DensityMatrix psi(random_density_matrix(k, rng));
    const DensityMatrix psi_e(kron(MatrixXc(MatrixXc::Identity(k, k) / static_cast<double>(k)), psi.matrix()));
    const double lhs = relative_entropy(rho, psi_e);
    const double rhs = relative_entropy(reduced_state(rho, shape, Factor::A), psi) + gap.s;
    rows.push_back({"expectation_identity", trial, 0.0, std::abs(lhs - rhs), 0.0, 1e-8});

    std::uniform_real_distribution<double> mu_dist(0.05, 0.95);
    const double mu = mu_dist(rng);
    const DensityMatrix gamma(random_density_matrix(n, rng, 1 + static_cast<Index>(trial % static_cast<std::uint64_t>(n))));
    const DensityMatrix dominated(MatrixXc(mu * rho.matrix() + (1.0 - mu) * gamma.matrix()));
    rows.push_back({"dominance", trial, mu, relative_entropy(rho, dominated), std::log(1.0 / mu), 1e-8});

    const DensityMatrix rho8(random_density_matrix(8, rng));
    const DensityMatrix sigma8(random_density_matrix(8, rng));
    const auto chain = restricted_relative_entropy_chain(rho8, sigma8, {2, 2, 2});
    for (std::size_t i = 1; i < chain.size(); ++i)
      rows.push_back({"martingale", trial, static_cast<double>(i), chain[i - 1], chain[i], 1e-8});
    rows.push_back({"martingale_limit", trial, 0.0, std::abs(chain.back() - relative_entropy(rho8, sigma8)), 0.0, 1e-8});

    const MatrixXc a = random_psd<cplx>(n, rng, 1 + static_cast<Index>(trial % static_cast<std::uint64_t>(n)));
    const double pp = pimsner_popa_margin(a, e, 1.0 / static_cast<double>(k * k));
    rows.push_back({"pimsner_popa", trial, 0.0, -pp, 0.0, 1e-10 * std::max(1.0, static_cast<double>(a.norm()))});
    return rows;
  });
}

}  // namespace araki
