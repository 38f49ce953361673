#include "altkurepa/kurepa.hpp"

#include <cmath>
#include <string>

#include "altkurepa/errors.hpp"
#include "altkurepa/seqcore.hpp"

namespace altkurepa::kurepa {

namespace {

specfun::QuadratureSpec make_spec(double exponent, const EvalOptions& opts) {
  specfun::QuadratureSpec spec;
  spec.singular_exponent = exponent;
  spec.rel_tol = opts.rel_tol;
  spec.max_subdivisions = opts.max_subdivisions;
  return spec;
}

double checked(const QuadratureResult& r, const char* who, double x) {
  if (!r.converged) {
    throw ToleranceNotMet(std::string(who) + ": quadrature did not converge at x = " +
                          std::to_string(x) + " (abs err estimate " +
                          std::to_string(r.abs_err_estimate) + ")");
  }
  return r.value;
}

bool is_positive_integer(double x) { return x >= 1.0 && x == std::floor(x) && x < 1e6; }

double parity_sign(int n) { return (n % 2 == 0) ? 1.0 : -1.0; }

void require_shift_domain(double x, int n, const char* who) {
  if (n < 1) throw DomainError(std::string(who) + ": n must be >= 1");
  if (!(x - n > -2.0 + kBoundaryMargin)) {
    throw DomainError(std::string(who) + ": x - n = " + std::to_string(x - n) +
                      " is outside the quadrature domain (-2, inf)");
  }
}

}  // namespace

EvalPoint::EvalPoint(double x) : x_(x) {
  if (!std::isfinite(x) || !(x > -2.0 + kBoundaryMargin)) {
    throw DomainError("x = " + std::to_string(x) + " is outside the domain x > -2 + " +
                      std::to_string(kBoundaryMargin));
  }
}

bool PoleTable::is_pole(double z) {
  return z <= -kFirstOrder && z == std::floor(z);
}

std::vector<double> PoleTable::locations(int count) {
  std::vector<double> out;
  for (int i = 0; i < count; ++i) out.push_back(-static_cast<double>(kFirstOrder + i));
  return out;
}

ExactInteger alt_factorial(int n) {
  if (n < 1) throw DomainError("alt_factorial: n must be >= 1, got " + std::to_string(n));
  ExactInteger factorial = 1;
  ExactInteger value = 0;
  for (int k = 1; k <= n; ++k) {
    factorial *= k;
    value = factorial - value;
  }
  return value;
}

QuadratureResult re_A(EvalPoint point, const EvalOptions& opts) {
  const double x = point.x();
  const double c = specfun::cos_pi(x);
  // Factor out t^min(x+1, 1) so the remaining factor stays finite at t = 0.
  if (x <= 0.0) {
    return specfun::integrate_gamma_weighted(make_spec(x + 1.0, opts), [x, c](double t) {
      return (1.0 - c * std::pow(t, -x)) / (t + 1.0);
    });
  }
  return specfun::integrate_gamma_weighted(make_spec(1.0, opts), [x, c](double t) {
    return (std::pow(t, x) - c) / (t + 1.0);
  });
}

double im_A(double x) {
  if (!(x > -2.0)) throw DomainError("im_A: requires x > -2");
  return -specfun::ei_constant() * specfun::sin_pi(x);
}

QuadratureResult im_A_quadrature(EvalPoint point, const EvalOptions& opts) {
  const double s = specfun::sin_pi(point.x());
  return specfun::integrate_gamma_weighted(make_spec(1.0, opts),
                                           [s](double t) { return -s / (t + 1.0); });
}

QuadratureResult beta(EvalPoint point, const EvalOptions& opts) {
  return specfun::integrate_gamma_weighted(make_spec(point.x() + 1.0, opts),
                                           [](double t) { return 1.0 / (t + 1.0); });
}

double gamma_cos(double x) { return specfun::ei_constant() * specfun::cos_pi(x); }

double re_A_value(double x, const EvalOptions& opts) {
  if (opts.exact_integers && is_positive_integer(x) && x <= 170.0) {
    return alt_factorial(static_cast<int>(x)).convert_to<double>();
  }
  return checked(re_A(EvalPoint(x), opts), "re_A", x);
}

double beta_value(double x, const EvalOptions& opts) {
  return checked(beta(EvalPoint(x), opts), "beta", x);
}

double re_A_decomposed(double x, const EvalOptions& opts) {
  return beta_value(x, opts) - gamma_cos(x);
}

double re_A_via_p_theorem(double x, int n, const EvalOptions& opts) {
  require_shift_domain(x, n, "re_A_via_p_theorem");
  return parity_sign(n) * re_A_value(x - n, opts) +
         seqcore::p_eval(n - 1, x) * specfun::gamma(x - n + 2.0);
}

double re_A_via_r_theorem(double x, int n, const EvalOptions& opts) {
  require_shift_domain(x, n, "re_A_via_r_theorem");
  return parity_sign(n) * (re_A_value(x - n, opts) + seqcore::r_eval(n, x) * specfun::gamma(x + 2.0));
}

double functional_equation_residual(double x, const EvalOptions& opts) {
  if (!(x > -1.0 + kBoundaryMargin)) {
    throw DomainError("functional_equation_residual: requires x > -1");
  }
  return std::abs(re_A_value(x, opts) + re_A_value(x - 1.0, opts) - specfun::gamma(x + 1.0));
}

double second_functional_equation_residual(double x, const EvalOptions& opts) {
  if (!(x > -1.0 + kBoundaryMargin)) {
    throw DomainError("second_functional_equation_residual: requires x > -1");
  }
  return std::abs(re_A_value(x + 1.0, opts) - x * re_A_value(x, opts) -
                  (x + 1.0) * re_A_value(x - 1.0, opts));
}

}  // namespace altkurepa::kurepa
