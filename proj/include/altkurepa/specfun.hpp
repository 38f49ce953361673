#pragma once

#include <functional>

namespace altkurepa::specfun {

/// Gamma function. Lanczos approximation (g = 7, 9 terms) on x >= 0.5,
/// reflection below. Positive integers up to 171 return the factorial
/// product directly.
///
/// Throws PoleError at non-positive integers (within 1e-12) and
/// OverflowError for x > 171.6.
double gamma(double x);

/// sin(pi x) and cos(pi x) with exact zeros at integers / half-integers.
double sin_pi(double x);
double cos_pi(double x);

/// E1(x) = -Ei(-x) for x > 0. Power series for x <= 1, continued
/// fraction above. Throws DomainError for x <= 0.
double exp_integral_E1(double x);

/// 1 + e*Ei(-1) = 1 - e*E1(1) ~= 0.403652. Computed once per process.
double ei_constant();

/// Lower incomplete gamma at unit argument: int_0^1 t^(b-1) e^(-t) dt, b > 0.
double lower_incomplete_gamma_unit(double b);

namespace detail {
double e1_series(double x);
double e1_continued_fraction(double x);
}  // namespace detail

inline constexpr double kDefaultRelTol = 1e-10;
inline constexpr int kDefaultMaxSubdivisions = 2000;

/// Integral of e^(-t) t^a s(t) over [0, inf).
struct QuadratureSpec {
  double singular_exponent = 0.0;  // a > -1
  double rel_tol = kDefaultRelTol;  // in [1e-14, 1e-4]
  int max_subdivisions = kDefaultMaxSubdivisions;

  /// Throws DomainError when any field is out of range.
  void validate() const;
};

struct QuadratureResult {
  double value = 0.0;
  double abs_err_estimate = 0.0;
  int subdivisions = 0;
  /// False when the subdivision budget ran out before the tolerance was met.
  bool converged = true;
};

/**
 * Adaptive Gauss-Kronrod (7/15) quadrature of e^(-t) t^a s(t) on [0, inf).
 *
 * The range is split at t = 1. On [0, 1] with a < 0 the value s(0) is
 * peeled off analytically via the lower incomplete gamma function and the
 * remainder is integrated after t = u^2. On [1, inf) the map
 * t = 1 + v / (1 - v) is used. Both pieces share one global error budget:
 * the sum of |K15 - G7| over all panels must fall below
 * rel_tol * (integral of |integrand|).
 *
 * s must be continuous on [0, inf) and must not outgrow e^t.
 */
QuadratureResult integrate_gamma_weighted(const QuadratureSpec& spec,
                                          const std::function<double(double)>& s);

}  // namespace altkurepa::specfun
