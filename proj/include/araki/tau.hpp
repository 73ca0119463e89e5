#pragma once

#include <vector>

#include "araki/operator.hpp"
#include "araki/quadrature.hpp"

namespace araki {

// Entropy defect of a pinching. For A >= 0 and a projection P, with
// B = PAP + (1-P)A(1-P) and f(x) = x ln x,
//
//   tau_A = P f(A) P + (1-P) f(A) (1-P) - f(B)
//         = int_0^inf t (P (t+A)^-1 P + (1-P) (t+A)^-1 (1-P) - (t+B)^-1) dt.
//
// Both routes are provided; the integral route is the independent check of
// the spectral one.

enum class TauMethod { spectral, integral };

template <typename Scalar>
struct TauResult {
  HermitianOperator<Scalar> tau;
  double trace = 0.0;
  TauMethod method = TauMethod::spectral;
  double quadrature_error_estimate = 0.0;
};

/// Eigenvalues in [-kClampTol, 0] are treated as 0 by the x ln x calculus.
inline constexpr double kClampTol = 1e-10;
/// Eigenvalues below -kPsdTol are rejected.
inline constexpr double kPsdTol = 1e-8;

/// B = PAP + (1-P)A(1-P).
template <typename Scalar>
HermitianOperator<Scalar> pinch(const HermitianOperator<Scalar>& a, const OrthoProjection<Scalar>& p);

template <typename Scalar>
TauResult<Scalar> tau_spectral(const HermitianOperator<Scalar>& a, const OrthoProjection<Scalar>& p);

/// Integral route with t = s/(1-s) on s in (0, 1); adaptive Gauss-Kronrod to
/// absolute Frobenius tolerance `tol`.
template <typename Scalar>
TauResult<Scalar> tau_integral(const HermitianOperator<Scalar>& a, const OrthoProjection<Scalar>& p,
                               double tol);

/// tau of A + eps*1.
template <typename Scalar>
HermitianOperator<Scalar> tau_epsilon_shift(const HermitianOperator<Scalar>& a,
                                            const OrthoProjection<Scalar>& p, double eps);

/// t * (pinched resolvent of A - resolvent of B), written as
/// B (t+B)^-1 - pinch(A (t+A)^-1) so large t does not cancel catastrophically.
template <typename Scalar>
Matrix<Scalar> tau_integrand(const HermitianOperator<Scalar>& a, const HermitianOperator<Scalar>& b,
                             const OrthoProjection<Scalar>& p, double t);

/// P (t+A)^-1 P + (1-P)(t+A)^-1(1-P) - (t+B)^-1, positive by operator convexity of 1/x.
template <typename Scalar>
Matrix<Scalar> pinched_resolvent_gap(const HermitianOperator<Scalar>& a, const OrthoProjection<Scalar>& p,
                                     double t);

/// int_lo^hi of the tau integrand; hi may be +inf.
template <typename Scalar>
QuadratureResult<Matrix<Scalar>> tau_integrand_integral(const HermitianOperator<Scalar>& a,
                                                        const OrthoProjection<Scalar>& p, double lo,
                                                        double hi, double tol);

/// Closed form of the tail int_1^inf: P A ln(A+1) P + (1-P) A ln(A+1) (1-P) - B ln(B+1).
template <typename Scalar>
Matrix<Scalar> tau_tail_closed_form(const HermitianOperator<Scalar>& a, const OrthoProjection<Scalar>& p);

struct WindowedTrace {
  double full = 0.0;
  double windowed = 0.0;
};

/// (Tr tau_A, Tr tau_{A_w}) where A_w is A compressed to the range of a
/// window commuting with P. Throws PreconditionError for a non-commuting
/// window and InequalityViolation if full < windowed - 1e-8.
template <typename Scalar>
WindowedTrace finite_rank_monotonicity(const HermitianOperator<Scalar>& a, const OrthoProjection<Scalar>& p,
                                       const OrthoProjection<Scalar>& window);

struct ResolventBoundRow {
  double t = 0.0;
  double lhs = 0.0;  // ||(t+B)^-1 A||
  double rhs = 0.0;  // ||A||^{1/2} t^{-1/2}
  double margin() const { return rhs - lhs; }
};

struct ResolventBoundReport {
  std::vector<ResolventBoundRow> rows;
  int violations = 0;
};

template <typename Scalar>
ResolventBoundReport resolvent_bound_check(const HermitianOperator<Scalar>& a, const OrthoProjection<Scalar>& p,
                                           const std::vector<double>& t_samples, double tol = 1e-10);

struct KeyTraceBound {
  double d_eps_trace = 0.0;
  /// sum_i pi ||A||^{1/2} |l_i|^{1/2} + 3 |l_i| ln((1+|l_i|)/|l_i|) over nonzero eigenvalues l_i of B-A.
  double bound = 0.0;
  /// The same sum with the first term multiplied by an extra |l_i|, as printed
  /// in the closing display of the original argument. Reported only.
  double display_bound = 0.0;
  double quadrature_error_estimate = 0.0;
};

/// Tr D_eps with D_eps = int_eps^1 (tau integrand) dt, and its eps-independent bound.
/// Throws InequalityViolation unless 0 <= Tr D_eps <= bound + 1e-6.
template <typename Scalar>
KeyTraceBound key_trace_bound(const HermitianOperator<Scalar>& a, const OrthoProjection<Scalar>& p, double eps,
                              double tol = 1e-10);

/// The bound alone (no quadrature).
template <typename Scalar>
double key_bound(const HermitianOperator<Scalar>& a, const OrthoProjection<Scalar>& p);

}  // namespace araki
