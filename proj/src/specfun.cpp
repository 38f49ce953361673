#include "altkurepa/specfun.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <string>

#include "altkurepa/errors.hpp"

namespace altkurepa::specfun {

namespace {

// Lanczos coefficients for g = 7, n = 9 (Godfrey). Relative error of the
// sum is below 2e-15 on the positive real axis.
constexpr double kLanczosG = 7.0;
constexpr std::array<double, 9> kLanczosCoeffs = {
    0.99999999999980993227684700473478,
    676.520368121885098567009190444019,
    -1259.13921672240287047156078755283,
    771.3234287776530788486528258894,
    -176.61502916214059906584551354,
    12.507343278686904814458936853,
    -0.13857109526572011689554707,
    9.984369578019570859563e-6,
    1.50563273514931155834e-7,
};

constexpr double kGammaOverflow = 171.6;
constexpr double kPoleTolerance = 1e-12;
constexpr double kEulerGamma = 0.57721566490153286060651209008240243;

double lanczos(double x) {
  // Valid for x >= 0.5.
  const double z = x - 1.0;
  double sum = kLanczosCoeffs[0];
  for (std::size_t i = 1; i < kLanczosCoeffs.size(); ++i) {
    sum += kLanczosCoeffs[i] / (z + static_cast<double>(i));
  }
  const double t = z + kLanczosG + 0.5;
  // Split the power so t^(z+1/2) does not overflow before e^-t scales it.
  const double half_pow = std::pow(t, 0.5 * (z + 0.5));
  return std::sqrt(2.0 * std::numbers::pi) * half_pow * std::exp(-t) * half_pow * sum;
}

}  // namespace

double sin_pi(double x) {
  // Reduce to r in [0, 2).
  double r = x - 2.0 * std::floor(0.5 * x);
  if (r == 0.0 || r == 1.0) return 0.0;
  if (r == 0.5) return 1.0;
  if (r == 1.5) return -1.0;
  return std::sin(std::numbers::pi * r);
}

double cos_pi(double x) {
  double r = x - 2.0 * std::floor(0.5 * x);
  if (r == 0.5 || r == 1.5) return 0.0;
  if (r == 0.0) return 1.0;
  if (r == 1.0) return -1.0;
  return std::cos(std::numbers::pi * r);
}

double gamma(double x) {
  if (std::isnan(x)) throw DomainError("gamma: argument is NaN");
  if (x > kGammaOverflow) {
    throw OverflowError("gamma: argument " + std::to_string(x) + " exceeds 171.6");
  }
  const double nearest = std::round(x);
  if (nearest <= 0.0 && std::abs(x - nearest) < kPoleTolerance) {
    throw PoleError("gamma: pole at non-positive integer " + std::to_string(nearest));
  }
  if (x == nearest && x >= 1.0) {
    double f = 1.0;
    for (double k = 2.0; k < x; k += 1.0) f *= k;
    return f;
  }
  if (x < 0.5) {
    return std::numbers::pi / (sin_pi(x) * gamma(1.0 - x));
  }
  return lanczos(x);
}

namespace detail {

double e1_series(double x) {
  // E1(x) = -gamma_E - ln x + sum_{k>=1} (-1)^(k+1) x^k / (k k!)
  double sum = 0.0;
  double power_over_fact = 1.0;  // x^k / k!
  for (int k = 1; k < 200; ++k) {
    power_over_fact *= x / k;
    const double term = power_over_fact / k;
    sum += (k % 2 == 1) ? term : -term;
    if (term < 1e-17 * std::abs(sum)) break;
  }
  return -kEulerGamma - std::log(x) + sum;
}

double e1_continued_fraction(double x) {
  // Modified Lentz on the even form of the E1 continued fraction.
  constexpr double tiny = 1e-300;
  double b = x + 1.0;
  double c = 1.0 / tiny;
  double d = 1.0 / b;
  double h = d;
  for (int i = 1; i < 10000; ++i) {
    const double an = -static_cast<double>(i) * static_cast<double>(i);
    b += 2.0;
    d = 1.0 / (an * d + b);
    c = b + an / c;
    const double delta = c * d;
    h *= delta;
    if (std::abs(delta - 1.0) < 1e-16) break;
  }
  return h * std::exp(-x);
}

}  // namespace detail

double exp_integral_E1(double x) {
  if (!(x > 0.0)) {
    throw DomainError("exp_integral_E1: requires x > 0, got " + std::to_string(x));
  }
  return x <= 1.0 ? detail::e1_series(x) : detail::e1_continued_fraction(x);
}

double ei_constant() {
  static const double value = 1.0 - std::numbers::e * exp_integral_E1(1.0);
  return value;
}

double lower_incomplete_gamma_unit(double b) {
  if (!(b > 0.0)) {
    throw DomainError("lower_incomplete_gamma_unit: requires b > 0");
  }
  // sum_{k>=0} (-1)^k / (k! (b + k))
  double sum = 0.0;
  double inv_fact = 1.0;
  for (int k = 0; k < 60; ++k) {
    if (k > 0) inv_fact /= k;
    const double term = inv_fact / (b + k);
    sum += (k % 2 == 0) ? term : -term;
    if (term < 1e-18 * std::abs(sum)) break;
  }
  return sum;
}

}  // namespace altkurepa::specfun
