#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "araki/linalg.hpp"

namespace araki {

/// One checked inequality lhs <= rhs (+ tolerance).
struct AuditRow {
  std::string check;
  std::uint64_t trial = 0;
  double parameter = 0.0;  // t, eps, dimension, ... depending on the check
  double lhs = 0.0;
  double rhs = 0.0;
  double tolerance = 0.0;

  double margin() const { return rhs - lhs; }
  bool violated() const { return lhs > rhs + tolerance; }
};

struct AuditReport {
  std::string suite;
  std::uint64_t trials = 0;
  std::uint64_t violations = 0;
  double worst_margin = 0.0;
  std::vector<AuditRow> rows;

  /// Recomputes violations and worst_margin from the rows.
  void finalize();
  /// Violations restricted to rows whose check name equals `check`.
  std::uint64_t violations_of(const std::string& check) const;
  std::uint64_t rows_of(const std::string& check) const;
};

struct AuditOptions {
  std::uint64_t trials = 500;
  std::uint64_t seed = 7;
  double tolerance = 1e-9;
  Index min_dim = 2;
  Index max_dim = 12;
};

/// Randomized checks on pinched PSD matrices:
///   "eps_shift"   : tau_{A+eps} <= tau_A (min eigenvalue of the difference)
///   "convexity"   : pinched resolvent of A >= resolvent of B
///   "resolvent"   : ||(t+B)^-1 A|| <= ||A||^{1/2} t^{-1/2}, t in {1e-3, 1e-2, 0.1, 1, 10}
///   "trace_nonneg": Tr tau_A >= 0
AuditReport tau_audit(const AuditOptions& opts);

/// Uniform bound on Tr D_eps for eps in {1e-1, ..., 1e-4}:
///   "key_bound"    : Tr D_eps <= bound
///   "key_monotone" : Tr D_eps nondecreasing as eps decreases
///   "key_nonneg"   : Tr D_eps >= 0
AuditReport key_audit(const AuditOptions& opts);

/// Singular-value checks on random complex matrices:
///   "fan"          : mu_{n+m+1}(F+G) <= mu_{n+1}(F) + mu_{m+1}(G), worst (n, m) per trial
///   "half_offdiag" : sum mu(F1)^{1/2} <= (sqrt 2 + 1) sum mu(F)^{1/2}
///   "half_diag"    : sum mu(PFP)^{1/2} <= (sqrt 2 + 1) sum mu(F)^{1/2}
AuditReport fan_audit(const AuditOptions& opts);

/// Finite-dimensional relative entropy laws on k (x) k systems:
///   "index_bound"  : S(rho, rho o E) <= ln k^2
///   "positivity"   : S(rho, sigma) >= 0
///   "monotonicity" : S(rho_A, sigma_A) <= S(rho, sigma)
///   "expectation_identity" : |S(rho, psi o E) - S(rho|, psi) - S(rho, rho o E)| <= 1e-8
///   "dominance"    : S(rho, sigma) <= ln(1/mu) for sigma = mu rho + (1 - mu) gamma
///   "martingale"   : restricted relative entropies nondecreasing along a tensor chain
///   "pimsner_popa" : E(a) - a / k^2 >= 0 for random PSD a
AuditReport index_audit(const AuditOptions& opts, Index k = 2);

}  // namespace araki
