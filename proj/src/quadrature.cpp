#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <string>
#include <vector>

#include "altkurepa/errors.hpp"
#include "altkurepa/specfun.hpp"

namespace altkurepa::specfun {

namespace {

// 15-point Kronrod abscissae (positive half) and weights, with the embedded
// 7-point Gauss weights on the odd-indexed abscissae.
constexpr std::array<double, 8> kXgk = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000,
};
constexpr std::array<double, 8> kWgk = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714,
};
constexpr std::array<double, 4> kWg = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327,
};

using Integrand = std::function<double(double)>;

struct Panel {
  int piece;
  double lo;
  double hi;
  double value;
  double error;
  double l1;
};

Panel gauss_kronrod(const Integrand& f, int piece, double lo, double hi) {
  const double centre = 0.5 * (lo + hi);
  const double half = 0.5 * (hi - lo);
  const double fc = f(centre);
  double kronrod = kWgk[7] * fc;
  double gauss = kWg[3] * fc;
  double l1 = kWgk[7] * std::abs(fc);
  for (int j = 0; j < 7; ++j) {
    const double dx = half * kXgk[j];
    const double f1 = f(centre - dx);
    const double f2 = f(centre + dx);
    kronrod += kWgk[j] * (f1 + f2);
    l1 += kWgk[j] * (std::abs(f1) + std::abs(f2));
    if (j % 2 == 1) gauss += kWg[j / 2] * (f1 + f2);
  }
  kronrod *= half;
  gauss *= half;
  l1 *= std::abs(half);
  return {piece, lo, hi, kronrod, std::abs(kronrod - gauss), l1};
}

}  // namespace

void QuadratureSpec::validate() const {
  if (!(singular_exponent > -1.0) || !std::isfinite(singular_exponent)) {
    throw DomainError("quadrature: singular exponent must exceed -1, got " +
                      std::to_string(singular_exponent));
  }
  if (!(rel_tol >= 1e-14 && rel_tol <= 1e-4)) {
    throw DomainError("quadrature: rel_tol must lie in [1e-14, 1e-4]");
  }
  if (max_subdivisions < 2) {
    throw DomainError("quadrature: max_subdivisions must be at least 2");
  }
}

QuadratureResult integrate_gamma_weighted(const QuadratureSpec& spec, const Integrand& s) {
  spec.validate();
  const double a = spec.singular_exponent;

  double analytic = 0.0;
  std::array<Integrand, 2> pieces;

  if (a < 0.0) {
    // Peel off s(0) * int_0^1 t^a e^-t dt; the remainder behaves like
    // t^(a+1) and becomes smooth after t = u^2.
    const double s0 = s(0.0);
    analytic = s0 * lower_incomplete_gamma_unit(a + 1.0);
    pieces[0] = [&s, a, s0](double u) {
      if (u <= 0.0) return 0.0;
      const double t = u * u;
      return 2.0 * std::pow(u, 2.0 * a + 1.0) * std::exp(-t) * (s(t) - s0);
    };
  } else {
    pieces[0] = [&s, a](double t) { return std::pow(t, a) * std::exp(-t) * s(t); };
  }

  pieces[1] = [&s, a](double v) {
    if (v >= 1.0) return 0.0;
    const double one_minus = 1.0 - v;
    const double t = 1.0 + v / one_minus;
    const double weight = std::exp(a * std::log(t) - t);
    if (weight == 0.0) return 0.0;
    return weight * s(t) / (one_minus * one_minus);
  };

  std::vector<Panel> panels;
  panels.reserve(static_cast<std::size_t>(spec.max_subdivisions) + 1);
  panels.push_back(gauss_kronrod(pieces[0], 0, 0.0, 1.0));
  panels.push_back(gauss_kronrod(pieces[1], 1, 0.0, 1.0));

  auto totals = [&panels, analytic] {
    double value = analytic, error = 0.0, l1 = std::abs(analytic);
    for (const auto& p : panels) {
      value += p.value;
      error += p.error;
      l1 += p.l1;
    }
    return std::array<double, 3>{value, error, l1};
  };

  bool converged = false;
  while (true) {
    const auto [value, error, l1] = totals();
    if (!std::isfinite(value) || !std::isfinite(error)) break;
    if (error <= spec.rel_tol * l1) {
      converged = true;
      break;
    }
    if (static_cast<int>(panels.size()) >= spec.max_subdivisions) break;

    auto worst = std::max_element(panels.begin(), panels.end(),
                                  [](const Panel& x, const Panel& y) { return x.error < y.error; });
    const Panel victim = *worst;
    const double mid = 0.5 * (victim.lo + victim.hi);
    if (!(mid > victim.lo && mid < victim.hi)) break;  // panel below resolution
    *worst = gauss_kronrod(pieces[victim.piece], victim.piece, victim.lo, mid);
    panels.push_back(gauss_kronrod(pieces[victim.piece], victim.piece, mid, victim.hi));
  }

  const auto sums = totals();
  QuadratureResult result;
  result.value = sums[0];
  result.abs_err_estimate =
      sums[1] + 4.0 * std::numeric_limits<double>::epsilon() * std::abs(analytic);
  result.subdivisions = static_cast<int>(panels.size());
  result.converged = converged;
  return result;
}

}  // namespace altkurepa::specfun
