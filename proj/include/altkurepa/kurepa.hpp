#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <vector>

#include "altkurepa/specfun.hpp"

namespace altkurepa::kurepa {

using ExactInteger = boost::multiprecision::cpp_int;
using specfun::QuadratureResult;

/// Quadrature refuses arguments at or below -2 + kBoundaryMargin.
inline constexpr double kBoundaryMargin = 1e-6;

struct EvalOptions {
  double rel_tol = specfun::kDefaultRelTol;
  int max_subdivisions = specfun::kDefaultMaxSubdivisions;
  /// Integer arguments >= 1 resolve to the exact alternating factorial
  /// instead of quadrature.
  bool exact_integers = false;
};

/// Real argument validated against the quadrature domain x > -2.
class EvalPoint {
 public:
  /// Throws DomainError when x <= -2 + kBoundaryMargin or x is not finite.
  explicit EvalPoint(double x);

  double x() const { return x_; }
  /// Distance to the boundary at -2.
  double domain_margin() const { return x_ + 2.0; }

 private:
  double x_;
};

/// Simple poles of the continued function at z = -n, n >= 2. Metadata only.
struct PoleTable {
  static constexpr int kFirstOrder = 2;
  static bool is_pole(double z);
  /// The first `count` pole locations: -2, -3, ...
  static std::vector<double> locations(int count);
};

/// A(n) = sum_{i=1}^{n} (-1)^(n-i) i!, via A(k) = k! - A(k-1).
ExactInteger alt_factorial(int n);

/// Re A(x) = int_0^inf e^-t (t^(x+1) - cos(pi x) t) / (t+1) dt.
QuadratureResult re_A(EvalPoint x, const EvalOptions& opts = {});

/// Im A(x) = -(1 + e Ei(-1)) sin(pi x). Requires x > -2.
double im_A(double x);

/// Im A(x) by direct quadrature; diagnostic cross-check for im_A.
QuadratureResult im_A_quadrature(EvalPoint x, const EvalOptions& opts = {});

/// beta(x) = int_0^inf e^-t t^(x+1) / (t+1) dt.
QuadratureResult beta(EvalPoint x, const EvalOptions& opts = {});

/// gamma(x) = (1 + e Ei(-1)) cos(pi x).
double gamma_cos(double x);

/// Scalar Re A(x); honours opts.exact_integers. Throws ToleranceNotMet
/// when the quadrature did not converge.
double re_A_value(double x, const EvalOptions& opts = {});
double beta_value(double x, const EvalOptions& opts = {});

/// beta(x) - gamma_cos(x).
double re_A_decomposed(double x, const EvalOptions& opts = {});

/// (-1)^n Re A(x-n) + p_{n-1}(x) Gamma(x-n+2). Requires n >= 1 and
/// x - n > -2 + kBoundaryMargin.
double re_A_via_p_theorem(double x, int n, const EvalOptions& opts = {});

/// (-1)^n (Re A(x-n) + r_n(x) Gamma(x+2)). Same domain as the p form.
double re_A_via_r_theorem(double x, int n, const EvalOptions& opts = {});

/// |Re A(x) + Re A(x-1) - Gamma(x+1)|, for x > -1 + kBoundaryMargin.
double functional_equation_residual(double x, const EvalOptions& opts = {});

/// |Re A(x+1) - x Re A(x) - (x+1) Re A(x-1)|, for x > -1 + kBoundaryMargin.
double second_functional_equation_residual(double x, const EvalOptions& opts = {});

}  // namespace altkurepa::kurepa
