#include "altkurepa/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "altkurepa/errors.hpp"
#include "altkurepa/seqcore.hpp"
#include "altkurepa/specfun.hpp"

namespace altkurepa::analysis {

namespace {

constexpr double kRootSnap = 1e-8;
constexpr double kLimitCeiling = 60.0;

// Solvers need smoother function values than grid evaluation does.
EvalOptions solver_options(const EvalOptions& opts) {
  EvalOptions tight = opts;
  tight.rel_tol = std::min(opts.rel_tol, 1e-12);
  return tight;
}

double scale_of(double v) { return std::max(1.0, std::abs(v)); }

double parity_sign(int k) { return (k % 2 == 0) ? 1.0 : -1.0; }

enum class Variant { ga2, ga3, ga4 };

BoundsTriple compute_bounds(Variant variant, int k, double x, const EvalOptions& opts) {
  const double p = seqcore::p_eval(k, x);
  const double r = seqcore::r_eval(k, x);
  const double ratio = kurepa::re_A_value(x, opts) / specfun::gamma(x + 2.0);
  BoundsTriple b{};
  switch (variant) {
    case Variant::ga2:
      b = {p / (p + 1.0) * (-r), ratio, -r};
      if (std::abs(b.center - b.lower) < kTightFlagGap * scale_of(b.center)) {
        b.equality = Tight::lower_tight;
      }
      break;
    case Variant::ga3:
      b = {r, ratio, p / (p - 1.0) * r};
      break;
    case Variant::ga4: {
      const double s = parity_sign(k);
      b = {r, s * ratio, p / (p - s) * r};
      break;
    }
  }
  if (variant != Variant::ga2 &&
      std::abs(b.upper - b.center) < kTightFlagGap * scale_of(b.center)) {
    b.equality = Tight::upper_tight;
  }
  return b;
}

void require_bounds_domain(int k, double x, const char* who) {
  if (k < 1) throw DomainError(std::string(who) + ": k must be >= 1");
  if (!(x >= k + 1.0)) {
    throw DomainError(std::string(who) + ": requires x >= k + 1 = " + std::to_string(k + 1) +
                      ", got " + std::to_string(x));
  }
}

std::vector<double> uniform_grid(double start, double end, int count) {
  std::vector<double> xs(static_cast<std::size_t>(count));
  const double step = (end - start) / (count - 1);
  for (int i = 0; i < count; ++i) xs[i] = start + step * i;
  xs.back() = end;
  return xs;
}

}  // namespace

std::string_view to_string(Sign s) {
  switch (s) {
    case Sign::positive: return "positive";
    case Sign::negative: return "negative";
    case Sign::root: return "root";
  }
  return "?";
}

std::string_view to_string(Tight t) {
  switch (t) {
    case Tight::none: return "none";
    case Tight::lower_tight: return "lower_tight";
    case Tight::upper_tight: return "upper_tight";
  }
  return "?";
}

std::string_view to_string(TheoremId id) {
  switch (id) {
    case TheoremId::GA1: return "GA1";
    case TheoremId::GA2: return "GA2";
    case TheoremId::GA3: return "GA3";
    case TheoremId::GA4: return "GA4";
    case TheoremId::LEMMA_GAMMA_GE: return "LEMMA_GAMMA_GE";
  }
  return "?";
}

std::optional<TheoremId> parse_theorem(std::string_view name) {
  if (name == "ga1") return TheoremId::GA1;
  if (name == "ga2") return TheoremId::GA2;
  if (name == "ga3") return TheoremId::GA3;
  if (name == "ga4") return TheoremId::GA4;
  if (name == "gamma-ge") return TheoremId::LEMMA_GAMMA_GE;
  return std::nullopt;
}

BetaMinimum find_beta_minimum(const EvalOptions& opts) {
  const EvalOptions tight = solver_options(opts);
  auto f = [&tight](double x) { return kurepa::beta_value(x, tight); };

  constexpr double inv_phi = std::numbers::phi - 1.0;
  double a = -1.0, b = 1.0;
  double c = b - inv_phi * (b - a);
  double d = a + inv_phi * (b - a);
  double fc = f(c), fd = f(d);
  if (!(fc < f(a) || fd < f(b))) {
    throw ConvergenceError("find_beta_minimum: (-1, 1) does not bracket a minimum");
  }
  // Function noise makes bracket widths below ~1e-7 meaningless; the
  // polish below takes over from there.
  while (b - a > 1e-7) {
    if (fc < fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - inv_phi * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + inv_phi * (b - a);
      fd = f(d);
    }
  }
  double x = 0.5 * (a + b);

  // Newton steps on beta' with a five-point derivative stencil, whose
  // O(h^4) truncation keeps the stationary point unbiased at h = 1e-3.
  constexpr double h = 1e-3;
  for (int iter = 0; iter < 4; ++iter) {
    const double f0 = f(x);
    const double fm = f(x - h), fp = f(x + h);
    const double fm2 = f(x - 2.0 * h), fp2 = f(x + 2.0 * h);
    const double slope = (fm2 - 8.0 * fm + 8.0 * fp - fp2) / (12.0 * h);
    const double curvature = (fp - 2.0 * f0 + fm) / (h * h);
    if (!(curvature > 0.0)) {
      throw ConvergenceError("find_beta_minimum: non-positive curvature during polish");
    }
    const double step = slope / curvature;
    x -= step;
    if (std::abs(step) < 1e-13) break;
  }
  if (!(x > -1.0 && x < 1.0)) throw ConvergenceError("find_beta_minimum: polish left bracket");
  return {x, f(x)};
}

ReARoots find_reA_roots(const EvalOptions& opts) {
  return find_reA_roots(find_beta_minimum(opts).x0, opts);
}

ReARoots find_reA_roots(double x0, const EvalOptions& opts) {
  const EvalOptions tight = solver_options(opts);
  auto f = [&tight](double x) { return kurepa::re_A_value(x, tight); };

  if (std::abs(f(0.0)) >= 1e-8) {
    throw ConvergenceError("find_reA_roots: Re A(0) is not a root to 1e-8");
  }

  double lo = x0;
  double flo = f(lo);
  if (!(flo > 0.0)) throw ConvergenceError("find_reA_roots: Re A(x0) is not positive");
  double hi = 0.5 * x0;
  double fhi = f(hi);
  for (int i = 0; i < 40 && !(fhi < 0.0); ++i) {
    hi *= 0.5;
    fhi = f(hi);
  }
  if (!(fhi < 0.0)) throw ConvergenceError("find_reA_roots: no sign change in (x0, 0)");

  for (int i = 0; i < 200 && hi - lo > 1e-13; ++i) {
    const double mid = 0.5 * (lo + hi);
    const double fm = f(mid);
    if (fm > 0.0) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
      fhi = fm;
    }
  }
  double x1 = lo - flo * (hi - lo) / (fhi - flo);
  x1 = std::clamp(x1, lo, hi);
  return {x1, 0.0};
}

Sign sign_region(double x, const ReARoots& roots, const EvalOptions& opts) {
  const kurepa::EvalPoint point(x);
  if (std::abs(x - roots.x2) <= kRootSnap || std::abs(x - roots.x1) <= kRootSnap) {
    return Sign::root;
  }
  const Sign expected = (x < roots.x1 || x > roots.x2) ? Sign::positive : Sign::negative;
  const auto r = kurepa::re_A(point, opts);
  const bool contradicts = (expected == Sign::positive && r.value < -r.abs_err_estimate) ||
                           (expected == Sign::negative && r.value > r.abs_err_estimate);
  if (contradicts) {
    throw InconsistencyError("sign_region: Re A(" + std::to_string(x) + ") = " +
                             std::to_string(r.value) + " contradicts region " +
                             std::string(to_string(expected)));
  }
  return expected;
}

RegionE::RegionE(double a, double x1) : a_(a), x1_(x1) {
  if (!(a >= -1.0)) throw DomainError("RegionE: requires a >= -1");
}

bool RegionE::contains(double x, double tol) const {
  if (!(x > a_)) return false;
  return x <= a_ + 2.0 + x1_ + tol || x >= a_ + 2.0 - tol;
}

Dominance check_gamma_dominance(double x, const EvalOptions& opts) {
  if (!(x > -1.0 + kurepa::kBoundaryMargin)) {
    throw DomainError("check_gamma_dominance: requires x > -1");
  }
  const double g = specfun::gamma(x + 1.0);
  const double margin = g - kurepa::re_A_value(x, opts);
  return {margin >= -kEqualityGap * scale_of(g), margin};
}

double bound_ga1(int k, double x, double x1, const EvalOptions& opts) {
  if (k < 1) throw DomainError("bound_ga1: k must be >= 1");
  if (!RegionE(k, x1).contains(x, kEqualityGap)) {
    throw DomainError("bound_ga1: x = " + std::to_string(x) + " is outside E_" +
                      std::to_string(k));
  }
  return kurepa::re_A_value(x - k - 1.0, opts) / specfun::gamma(x - k);
}

BoundsTriple bounds_ga2(int k, double x, const EvalOptions& opts) {
  require_bounds_domain(k, x, "bounds_ga2");
  if (k % 2 == 0) throw DomainError("bounds_ga2: k must be odd");
  return compute_bounds(Variant::ga2, k, x, opts);
}

BoundsTriple bounds_ga3(int k, double x, const EvalOptions& opts) {
  require_bounds_domain(k, x, "bounds_ga3");
  if (k % 2 != 0) throw DomainError("bounds_ga3: k must be even");
  return compute_bounds(Variant::ga3, k, x, opts);
}

BoundsTriple bounds_ga4(int k, double x, const EvalOptions& opts) {
  require_bounds_domain(k, x, "bounds_ga4");
  return compute_bounds(Variant::ga4, k, x, opts);
}

VerificationReport verify_inequality(TheoremId theorem, int k, double x_max, int samples,
                                     const EvalOptions& opts, std::optional<double> x_min) {
  if (samples < 2) throw DomainError("verify_inequality: samples must be >= 2");
  const bool needs_k = theorem != TheoremId::LEMMA_GAMMA_GE;
  if (needs_k && k < 1) throw DomainError("verify_inequality: k must be >= 1");
  if (theorem == TheoremId::GA2 && k % 2 == 0) {
    throw DomainError("verify_inequality: GA2 requires odd k");
  }
  if (theorem == TheoremId::GA3 && k % 2 != 0) {
    throw DomainError("verify_inequality: GA3 requires even k");
  }

  VerificationReport report{theorem, k, {}, {}, {}, {}};

  if (theorem == TheoremId::LEMMA_GAMMA_GE) {
    if (!(x_max > -1.0)) throw DomainError("verify_inequality: x_max must exceed -1");
    const double x1 = find_reA_roots(opts).x1;
    const RegionE region(-1.0, x1);
    const double step = (x_max + 1.0) / samples;
    report.grid = {-1.0 + step, x_max, samples};
    for (int i = 1; i <= samples; ++i) {
      const double x = (i == samples) ? x_max : -1.0 + step * i;
      PointMargin pm{x, std::nullopt, std::nullopt, true, {}};
      try {
        const auto dom = check_gamma_dominance(x, opts);
        pm.upper_margin = dom.margin;
        const bool member = region.contains(x);
        const bool boundary = std::abs(dom.margin) <= kEqualityGap * scale_of(specfun::gamma(x + 1.0));
        if (dom.holds != member && !boundary) {
          report.violations.push_back(
              {x, member ? "Gamma(x+1) < Re A(x) inside E_-1" : "Gamma(x+1) >= Re A(x) outside E_-1"});
        }
      } catch (const std::exception& e) {
        pm.evaluated = false;
        pm.note = e.what();
        report.violations.push_back({x, std::string("unevaluable: ") + e.what()});
      }
      report.margins.push_back(std::move(pm));
    }
    for (double xe : {1.0 + x1, 1.0}) {
      const auto dom = check_gamma_dominance(xe, opts);
      const double threshold = kEqualityGap * scale_of(specfun::gamma(xe + 1.0));
      report.equality_points.push_back(
          {xe, Tight::upper_tight, std::abs(dom.margin), threshold, std::abs(dom.margin) < threshold});
    }
  } else {
    const double start = x_min.value_or(k + 1.0);
    if (!(x_max > start)) {
      throw DomainError("verify_inequality: x_max must exceed the grid start " +
                        std::to_string(start));
    }
    report.grid = {start, x_max, samples};

    if (theorem == TheoremId::GA1) {
      const double x1 = find_reA_roots(opts).x1;
      const RegionE region(k, x1);
      for (double x : uniform_grid(start, x_max, samples)) {
        PointMargin pm{x, std::nullopt, std::nullopt, true, {}};
        if (!region.contains(x, kEqualityGap)) {
          pm.note = "outside E_k";
          report.margins.push_back(std::move(pm));
          continue;
        }
        try {
          const double ratio = bound_ga1(k, x, x1, opts);
          pm.upper_margin = 1.0 - ratio;
          if (*pm.upper_margin < -kGridSlack * scale_of(ratio)) {
            report.violations.push_back({x, "ratio exceeds 1"});
          }
        } catch (const std::exception& e) {
          pm.evaluated = false;
          pm.note = e.what();
          report.violations.push_back({x, std::string("unevaluable: ") + e.what()});
        }
        report.margins.push_back(std::move(pm));
      }
      for (double xe : {k + 2.0 + x1, k + 2.0}) {
        const double gap = std::abs(1.0 - bound_ga1(k, xe, x1, opts));
        report.equality_points.push_back({xe, Tight::upper_tight, gap, kEqualityGap, gap < kEqualityGap});
      }
    } else {
      const Variant variant = theorem == TheoremId::GA2   ? Variant::ga2
                              : theorem == TheoremId::GA3 ? Variant::ga3
                                                          : Variant::ga4;
      for (double x : uniform_grid(start, x_max, samples)) {
        PointMargin pm{x, std::nullopt, std::nullopt, true, {}};
        try {
          const auto b = compute_bounds(variant, k, x, opts);
          pm.lower_margin = b.center - b.lower;
          pm.upper_margin = b.upper - b.center;
          const double slack = kGridSlack * scale_of(b.center);
          if (*pm.lower_margin < -slack) report.violations.push_back({x, "below lower bound"});
          if (*pm.upper_margin < -slack) report.violations.push_back({x, "above upper bound"});
        } catch (const std::exception& e) {
          pm.evaluated = false;
          pm.note = e.what();
          report.violations.push_back({x, std::string("unevaluable: ") + e.what()});
        }
        report.margins.push_back(std::move(pm));
      }
      const double xe = k + 1.0;
      const auto b = compute_bounds(variant, k, xe, opts);
      const Tight side = variant == Variant::ga2 ? Tight::lower_tight : Tight::upper_tight;
      const double gap = side == Tight::lower_tight ? std::abs(b.center - b.lower)
                                                    : std::abs(b.upper - b.center);
      const double threshold = kEqualityGap * scale_of(b.center);
      report.equality_points.push_back({xe, side, gap, threshold, gap < threshold});
    }
  }

  for (const auto& eq : report.equality_points) {
    if (!eq.ok) report.violations.push_back({eq.x, "equality point gap exceeds threshold"});
  }
  std::stable_sort(report.violations.begin(), report.violations.end(),
                   [](const Violation& a, const Violation& b) { return a.x < b.x; });
  return report;
}

std::vector<LimitRow> limit_scan(std::span<const double> xs, const EvalOptions& opts) {
  std::vector<LimitRow> rows;
  rows.reserve(xs.size());
  double prev = -std::numeric_limits<double>::infinity();
  for (double x : xs) {
    if (x > kLimitCeiling) {
      throw OverflowError("limit_scan: x = " + std::to_string(x) + " exceeds 60");
    }
    if (!(x > 2.0)) throw DomainError("limit_scan: x must exceed 2");
    if (!(x > prev)) throw DomainError("limit_scan: x values must be strictly ascending");
    prev = x;
    const double re = kurepa::re_A_value(x, opts);
    rows.push_back({x, re / specfun::gamma(x + 2.0), re / specfun::gamma(x + 1.0)});
  }
  return rows;
}

}  // namespace altkurepa::analysis
