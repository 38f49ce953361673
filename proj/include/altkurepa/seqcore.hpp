#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace altkurepa::seqcore {

/// Evaluations closer than this to an excluded point raise DomainError.
inline constexpr double kExclusionTolerance = 1e-9;

/// Largest order accepted by the exact-rational path.
inline constexpr int kMaxExactOrder = 32;

using Rational = boost::multiprecision::cpp_rational;

/// The points {-1, 0, 1, ..., n-2} where q_n and r_n are undefined.
class ExclusionSet {
 public:
  explicit ExclusionSet(int order);

  int order() const { return order_; }
  bool contains(long long z) const { return z >= -1 && z <= order_ - 2; }
  /// Distance from z to the nearest excluded point.
  double distance(double z) const;
  bool near(double z, double tol = kExclusionTolerance) const { return distance(z) <= tol; }

 private:
  int order_;
};

/// Exact value with a double mirror of the same ratio.
struct RationalValue {
  Rational exact;
  double approx = 0.0;
};

// p_n(z) = (z - n + 1) p_{n-1}(z) + (-1)^n, p_0 = 1. Iterative.
double p_eval(int n, double z);
// Closed form with the sign (-1)^(j-1) applied to every factor of the inner
// product.
double p_eval_explicit(int n, double z);

// q_n, r_n share the three-term recurrence
//   f_n = -((z-n+1)/(z-n+2)) f_{n-1} + (1/(z-n+2)) f_{n-2}
// with q_1 = -z/(z+1), q_2 = (z^2+1)/(z(z+1)), r_1 = -1/(z+1),
// r_2 = (z-1)/(z(z+1)). All four throw DomainError within
// kExclusionTolerance of the exclusion set or for n < 1.
double q_eval(int n, double z);
double q_eval_explicit(int n, double z);
double r_eval(int n, double z);
double r_eval_explicit(int n, double z);

/// Exact evaluation at rational z, 1 <= n <= kMaxExactOrder.
RationalValue q_eval_exact(int n, const Rational& z);
RationalValue r_eval_exact(int n, const Rational& z);

/// g_k(x) = sum_{i=0}^{k-1} (-1)^(k+i) Gamma(x+1-i), defined for x > k-2.
double g_eval(int k, double x);

}  // namespace altkurepa::seqcore
