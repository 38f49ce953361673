#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "altkurepa/kurepa.hpp"

namespace altkurepa::analysis {

using kurepa::EvalOptions;

/// Strict inequalities are certified as "margin > -kGridSlack".
inline constexpr double kGridSlack = 1e-9;
/// Gap allowed at a documented equality point (relative to max(1, |center|)).
inline constexpr double kEqualityGap = 1e-7;
/// Gap under which a BoundsTriple flags its side as tight.
inline constexpr double kTightFlagGap = 1e-8;

struct BetaMinimum {
  double x0;
  double beta_min;
};

/// Unique minimizer of beta on (-2, inf): golden section on (-1, 1) followed
/// by a parabolic (central-difference Newton) polish.
BetaMinimum find_beta_minimum(const EvalOptions& opts = {});

struct ReARoots {
  double x1;
  double x2;  // exactly 0
};

/// Both real roots of Re A on (-2, inf). x2 = 0 is checked, x1 is bracketed
/// in (x0, 0) and bisected, then polished by one secant step.
ReARoots find_reA_roots(const EvalOptions& opts = {});
ReARoots find_reA_roots(double x0, const EvalOptions& opts = {});

enum class Sign { positive, negative, root };
std::string_view to_string(Sign s);

/// Classifies x against D1 = (-2, x1) U (0, inf) and D2 = (x1, 0), then
/// checks the sign of a direct Re A evaluation. Throws InconsistencyError
/// when the evaluated sign contradicts the region beyond its error estimate.
Sign sign_region(double x, const ReARoots& roots, const EvalOptions& opts = {});

/// E_a = (a, a + 2 + x1] U [a + 2, inf), a >= -1.
class RegionE {
 public:
  RegionE(double a, double x1);

  double a() const { return a_; }
  double x1() const { return x1_; }
  /// Boundary points a + 2 + x1 and a + 2 count as members when within tol.
  bool contains(double x, double tol = 0.0) const;

 private:
  double a_;
  double x1_;
};

struct Dominance {
  bool holds;
  double margin;  // Gamma(x+1) - Re A(x)
};

/// Gamma(x+1) >= Re A(x); margins within kEqualityGap of zero count as holding.
Dominance check_gamma_dominance(double x, const EvalOptions& opts = {});

/// Re A(x-k-1) / Gamma(x-k) for x in E_k. Throws DomainError outside E_k.
double bound_ga1(int k, double x, double x1, const EvalOptions& opts = {});

enum class Tight { none, lower_tight, upper_tight };
std::string_view to_string(Tight t);

struct BoundsTriple {
  double lower;
  double center;
  double upper;
  Tight equality = Tight::none;
};

/// Odd k, x >= k+1:  p/(p+1) (-r_k) <= Re A/Gamma(x+2) < -r_k.
BoundsTriple bounds_ga2(int k, double x, const EvalOptions& opts = {});
/// Even k, x >= k+1: r_k < Re A/Gamma(x+2) <= p/(p-1) r_k.
BoundsTriple bounds_ga3(int k, double x, const EvalOptions& opts = {});
/// Any k, x >= k+1:  r_k < (-1)^k Re A/Gamma(x+2) <= p/(p-(-1)^k) r_k.
BoundsTriple bounds_ga4(int k, double x, const EvalOptions& opts = {});

enum class TheoremId { GA1, GA2, GA3, GA4, LEMMA_GAMMA_GE };
std::string_view to_string(TheoremId id);
/// Accepts "ga1".."ga4" and "gamma-ge".
std::optional<TheoremId> parse_theorem(std::string_view name);

struct GridSpec {
  double start;
  double end;
  int count;
};

struct PointMargin {
  double x;
  std::optional<double> lower_margin;  // absent for one-sided statements
  std::optional<double> upper_margin;
  bool evaluated = true;
  std::string note;
};

struct Violation {
  double x;
  std::string what;
};

struct EqualityCheck {
  double x;
  Tight side;
  double gap;
  double threshold;
  bool ok;
};

struct VerificationReport {
  TheoremId theorem;
  int k;
  GridSpec grid;
  std::vector<PointMargin> margins;
  std::vector<Violation> violations;
  std::vector<EqualityCheck> equality_points;

  bool pass() const { return violations.empty(); }
};

/**
 * Samples the theorem on a uniform grid and collects per-point margins.
 *
 * GA2/GA3/GA4/GA1 use [x_min, x_max] with x_min defaulting to k+1. The
 * gamma-dominance lemma ignores k and uses `samples` points of (-1, x_max].
 * A failed equality point or an unevaluable grid point is recorded as a
 * violation. Throws DomainError for incompatible theorem/k/range arguments.
 */
VerificationReport verify_inequality(TheoremId theorem, int k, double x_max, int samples,
                                     const EvalOptions& opts = {},
                                     std::optional<double> x_min = std::nullopt);

struct LimitRow {
  double x;
  double ratio2;  // Re A(x) / Gamma(x+2)
  double ratio1;  // Re A(x) / Gamma(x+1)
};

/// x values must lie in (2, 60]; throws OverflowError above, DomainError below.
std::vector<LimitRow> limit_scan(std::span<const double> xs, const EvalOptions& opts = {});

}  // namespace altkurepa::analysis
