#include "araki/tau.hpp"

#include <cmath>
#include <limits>

#include <boost/math/constants/constants.hpp>

namespace araki {

namespace {

template <typename Scalar>
void check_psd(const HermitianOperator<Scalar>& a, double tol, const char* who) {
  if (a.min_eigenvalue() < -tol) throw DomainError(std::string(who) + ": operator is not positive semidefinite");
}

template <typename Scalar>
void check_dims(const HermitianOperator<Scalar>& a, const OrthoProjection<Scalar>& p, const char* who) {
  if (a.dim() != p.dim()) throw ShapeError(std::string(who) + ": operator and projection dimensions differ");
}

inline double clamp_nonneg(double x) { return x > 0.0 ? x : 0.0; }

inline double x_log_x_clamped(double x) { return xlogx(clamp_nonneg(x)); }

template <typename Scalar>
HermitianOperator<Scalar> pinch_unchecked(const HermitianOperator<Scalar>& a, const OrthoProjection<Scalar>& p) {
  return HermitianOperator<Scalar>(pinch_matrix(a.matrix(), p));
}

template <typename Scalar>
double frobenius(const Matrix<Scalar>& m) {
  return m.norm();
}

}  // namespace

template <typename Scalar>
HermitianOperator<Scalar> pinch(const HermitianOperator<Scalar>& a, const OrthoProjection<Scalar>& p) {
  check_dims(a, p, "pinch");
  check_psd(a, kClampTol, "pinch");
  return pinch_unchecked(a, p);
}

template <typename Scalar>
TauResult<Scalar> tau_spectral(const HermitianOperator<Scalar>& a, const OrthoProjection<Scalar>& p) {
  check_dims(a, p, "tau_spectral");
  check_psd(a, kPsdTol, "tau_spectral");
  const HermitianOperator<Scalar> b = pinch_unchecked(a, p);
  const Matrix<Scalar> fa = a.apply(x_log_x_clamped);
  const Matrix<Scalar> fb = b.apply(x_log_x_clamped);
  TauResult<Scalar> out;
  out.tau = HermitianOperator<Scalar>(Matrix<Scalar>(pinch_matrix(fa, p) - fb));
  out.trace = std::real(out.tau.matrix().trace());
  out.method = TauMethod::spectral;
  return out;
}

template <typename Scalar>
Matrix<Scalar> tau_integrand(const HermitianOperator<Scalar>& a, const HermitianOperator<Scalar>& b,
                             const OrthoProjection<Scalar>& p, double t) {
  auto ratio = [t](double x) {
    const double y = clamp_nonneg(x);
    return y / (t + y);
  };
  return b.apply(ratio) - pinch_matrix(a.apply(ratio), p);
}

template <typename Scalar>
Matrix<Scalar> pinched_resolvent_gap(const HermitianOperator<Scalar>& a, const OrthoProjection<Scalar>& p,
                                     double t) {
  check_dims(a, p, "pinched_resolvent_gap");
  if (!(t > 0.0)) throw DomainError("pinched_resolvent_gap: t must be positive");
  const HermitianOperator<Scalar> b = pinch_unchecked(a, p);
  auto inv = [t](double x) { return 1.0 / (t + clamp_nonneg(x)); };
  return pinch_matrix(a.apply(inv), p) - b.apply(inv);
}

template <typename Scalar>
QuadratureResult<Matrix<Scalar>> tau_integrand_integral(const HermitianOperator<Scalar>& a,
                                                        const OrthoProjection<Scalar>& p, double lo,
                                                        double hi, double tol) {
  check_dims(a, p, "tau_integrand_integral");
  check_psd(a, kPsdTol, "tau_integrand_integral");
  if (!(tol > 0.0)) throw DomainError("tau_integrand_integral: tolerance must be positive");
  if (!(lo >= 0.0) || !(hi > lo)) throw DomainError("tau_integrand_integral: need 0 <= lo < hi");
  const HermitianOperator<Scalar> b = pinch_unchecked(a, p);
  QuadratureOptions opts;
  opts.abs_tol = tol;
  using M = Matrix<Scalar>;
  if (std::isinf(hi)) {
    // t = lo + s/(1-s), dt = ds/(1-s)^2.
    auto g = [&](double s) -> M {
      const double u = 1.0 - s;
      return tau_integrand(a, b, p, lo + s / u) / (u * u);
    };
    return integrate_adaptive<M>(g, 0.0, 1.0, frobenius<Scalar>, opts);
  }
  auto g = [&](double t) -> M { return tau_integrand(a, b, p, t); };
  return integrate_adaptive<M>(g, lo, hi, frobenius<Scalar>, opts);
}

template <typename Scalar>
TauResult<Scalar> tau_integral(const HermitianOperator<Scalar>& a, const OrthoProjection<Scalar>& p,
                               double tol) {
  const auto q = tau_integrand_integral(a, p, 0.0, std::numeric_limits<double>::infinity(), tol);
  TauResult<Scalar> out;
  out.tau = HermitianOperator<Scalar>(Matrix<Scalar>((q.value + q.value.adjoint()) / 2.0));
  out.trace = std::real(out.tau.matrix().trace());
  out.method = TauMethod::integral;
  out.quadrature_error_estimate = q.error_estimate;
  return out;
}

template <typename Scalar>
HermitianOperator<Scalar> tau_epsilon_shift(const HermitianOperator<Scalar>& a,
                                            const OrthoProjection<Scalar>& p, double eps) {
  if (!(eps > 0.0)) throw DomainError("tau_epsilon_shift: eps must be positive");
  check_dims(a, p, "tau_epsilon_shift");
  check_psd(a, kPsdTol, "tau_epsilon_shift");
  const Matrix<Scalar> shifted = a.matrix() + eps * Matrix<Scalar>::Identity(a.dim(), a.dim());
  return tau_spectral(HermitianOperator<Scalar>(shifted), p).tau;
}

template <typename Scalar>
Matrix<Scalar> tau_tail_closed_form(const HermitianOperator<Scalar>& a, const OrthoProjection<Scalar>& p) {
  check_dims(a, p, "tau_tail_closed_form");
  const HermitianOperator<Scalar> b = pinch_unchecked(a, p);
  auto g = [](double x) {
    const double y = clamp_nonneg(x);
    return y * std::log1p(y);
  };
  return pinch_matrix(a.apply(g), p) - b.apply(g);
}

template <typename Scalar>
WindowedTrace finite_rank_monotonicity(const HermitianOperator<Scalar>& a, const OrthoProjection<Scalar>& p,
                                       const OrthoProjection<Scalar>& window) {
  check_dims(a, p, "finite_rank_monotonicity");
  if (window.dim() != p.dim()) throw ShapeError("finite_rank_monotonicity: window dimension differs");
  if (!window.commutes_with(p)) throw PreconditionError("finite_rank_monotonicity: window does not commute with P");

  WindowedTrace out;
  out.full = tau_spectral(a, p).trace;

  const Matrix<Scalar> w = window.range_basis();
  if (w.cols() > 0) {
    const HermitianOperator<Scalar> aw(Matrix<Scalar>(w.adjoint() * a.matrix() * w));
    OrthoProjection<Scalar> pw;
    if (window.is_coordinate() && p.is_coordinate()) {
      std::vector<bool> mask;
      for (Index i : window.indices()) mask.push_back((*p.mask())[static_cast<std::size_t>(i)]);
      pw = OrthoProjection<Scalar>(std::move(mask));
    } else {
      pw = OrthoProjection<Scalar>(Matrix<Scalar>(w.adjoint() * p.matrix() * w));
    }
    out.windowed = tau_spectral(aw, pw).trace;
  }
  if (out.full < out.windowed - 1e-8)
    throw InequalityViolation("finite_rank_monotonicity: windowed trace exceeds full trace", out.full - out.windowed);
  return out;
}

template <typename Scalar>
ResolventBoundReport resolvent_bound_check(const HermitianOperator<Scalar>& a, const OrthoProjection<Scalar>& p,
                                           const std::vector<double>& t_samples, double tol) {
  check_dims(a, p, "resolvent_bound_check");
  check_psd(a, kClampTol, "resolvent_bound_check");
  const HermitianOperator<Scalar> b = pinch_unchecked(a, p);
  const double sqrt_norm = std::sqrt(a.norm());
  ResolventBoundReport report;
  for (double t : t_samples) {
    if (!(t > 0.0)) throw DomainError("resolvent_bound_check: t must be positive");
    const Matrix<Scalar> m = b.apply([t](double x) { return 1.0 / (t + clamp_nonneg(x)); }) * a.matrix();
    ResolventBoundRow row{t, operator_norm(m), sqrt_norm / std::sqrt(t)};
    if (row.lhs > row.rhs + tol) ++report.violations;
    report.rows.push_back(row);
  }
  return report;
}

template <typename Scalar>
double key_bound(const HermitianOperator<Scalar>& a, const OrthoProjection<Scalar>& p) {
  check_dims(a, p, "key_bound");
  const HermitianOperator<Scalar> b = pinch_unchecked(a, p);
  const HermitianOperator<Scalar> diff(Matrix<Scalar>(b.matrix() - a.matrix()));
  const double pi = boost::math::constants::pi<double>();
  const double zero_tol = 1e-14 * std::max(1.0, a.norm());
  double bound = 0.0;
  for (Index i = 0; i < diff.dim(); ++i) {
    const double l = std::abs(diff.eigenvalues()(i));
    if (l <= zero_tol) continue;
    bound += pi * std::sqrt(a.norm() * l) + 3.0 * l * std::log((1.0 + l) / l);
  }
  return bound;
}

template <typename Scalar>
KeyTraceBound key_trace_bound(const HermitianOperator<Scalar>& a, const OrthoProjection<Scalar>& p, double eps,
                              double tol) {
  if (!(eps > 0.0) || !(eps < 1.0)) throw DomainError("key_trace_bound: eps must lie in (0, 1)");
  const auto q = tau_integrand_integral(a, p, eps, 1.0, tol);

  KeyTraceBound out;
  out.d_eps_trace = std::real(q.value.trace());
  out.quadrature_error_estimate = q.error_estimate;
  out.bound = key_bound(a, p);

  const HermitianOperator<Scalar> diff(Matrix<Scalar>(pinch_matrix(a.matrix(), p) - a.matrix()));
  const double pi = boost::math::constants::pi<double>();
  const double zero_tol = 1e-14 * std::max(1.0, a.norm());
  for (Index i = 0; i < diff.dim(); ++i) {
    const double l = std::abs(diff.eigenvalues()(i));
    if (l <= zero_tol) continue;
    out.display_bound += l * (pi * std::sqrt(a.norm() * l) + 3.0 * std::log((1.0 + l) / l));
  }

  if (out.d_eps_trace < -1e-9)
    throw InequalityViolation("key_trace_bound: Tr D_eps is negative", out.d_eps_trace);
  if (out.d_eps_trace > out.bound + 1e-6)
    throw InequalityViolation("key_trace_bound: Tr D_eps exceeds the bound", out.bound + 1e-6 - out.d_eps_trace);
  return out;
}

#define ARAKI_INSTANTIATE_TAU(S)                                                                                 \
  template HermitianOperator<S> pinch(const HermitianOperator<S>&, const OrthoProjection<S>&);                   \
  template TauResult<S> tau_spectral(const HermitianOperator<S>&, const OrthoProjection<S>&);                    \
  template TauResult<S> tau_integral(const HermitianOperator<S>&, const OrthoProjection<S>&, double);            \
  template HermitianOperator<S> tau_epsilon_shift(const HermitianOperator<S>&, const OrthoProjection<S>&,        \
                                                  double);                                                       \
  template Matrix<S> tau_integrand(const HermitianOperator<S>&, const HermitianOperator<S>&,                     \
                                   const OrthoProjection<S>&, double);                                           \
  template Matrix<S> pinched_resolvent_gap(const HermitianOperator<S>&, const OrthoProjection<S>&, double);      \
  template QuadratureResult<Matrix<S>> tau_integrand_integral(const HermitianOperator<S>&,                       \
                                                              const OrthoProjection<S>&, double, double, double); \
  template Matrix<S> tau_tail_closed_form(const HermitianOperator<S>&, const OrthoProjection<S>&);               \
  template WindowedTrace finite_rank_monotonicity(const HermitianOperator<S>&, const OrthoProjection<S>&,        \
                                                  const OrthoProjection<S>&);                                    \
  template ResolventBoundReport resolvent_bound_check(const HermitianOperator<S>&, const OrthoProjection<S>&,    \
                                                      const std::vector<double>&, double);                       \
  template double key_bound(const HermitianOperator<S>&, const OrthoProjection<S>&);                             \
  template KeyTraceBound key_trace_bound(const HermitianOperator<S>&, const OrthoProjection<S>&, double, double);

ARAKI_INSTANTIATE_TAU(double)
ARAKI_INSTANTIATE_TAU(cplx)

#undef ARAKI_INSTANTIATE_TAU

}  // namespace araki
