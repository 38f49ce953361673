#include "altkurepa/seqcore.hpp"

#include <cmath>
#include <string>

#include "altkurepa/errors.hpp"
#include "altkurepa/specfun.hpp"

namespace altkurepa::seqcore {

namespace {

double parity_sign(long long k) { return (k % 2 == 0) ? 1.0 : -1.0; }

void require_order(int n, const char* who) {
  if (n < 1) throw DomainError(std::string(who) + ": order must be >= 1, got " + std::to_string(n));
}

void require_admissible(int n, double z, const char* who) {
  require_order(n, who);
  if (!std::isfinite(z)) throw DomainError(std::string(who) + ": argument is not finite");
  if (ExclusionSet(n).near(z)) {
    throw DomainError(std::string(who) + ": z = " + std::to_string(z) +
                      " lies on the exclusion set {-1, ..., " + std::to_string(n - 2) + "}");
  }
}

// Runs the shared recurrence from f_1, f_2 up to order n. f_2 is only built
// when n >= 2, since its denominator vanishes at z = 0.
template <typename T, typename MakeF2>
T run_recurrence(int n, const T& z, T f1, MakeF2 make_f2) {
  if (n == 1) return f1;
  T prev = std::move(f1);
  T cur = make_f2();
  for (int m = 3; m <= n; ++m) {
    const T denom = z - (m - 2);
    T next = -((z - (m - 1)) / denom) * cur + prev / denom;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

// S_n(z) = sum_{j=1}^{n} prod_{i=1}^{j} (-1)^j / (z + 2 - i)
double explicit_sum(int n, double z) {
  double sum = 0.0;
  for (int j = 1; j <= n; ++j) {
    double prod = 1.0;
    for (int i = 1; i <= j; ++i) prod *= parity_sign(j) / (z + 2.0 - i);
    sum += prod;
  }
  return sum;
}

RationalValue mirror(Rational v) {
  RationalValue out;
  out.approx = v.convert_to<double>();
  out.exact = std::move(v);
  return out;
}

void require_exact_admissible(int n, const Rational& z, const char* who) {
  require_order(n, who);
  if (n > kMaxExactOrder) {
    throw DomainError(std::string(who) + ": exact path limited to n <= " +
                      std::to_string(kMaxExactOrder));
  }
  using boost::multiprecision::denominator;
  using boost::multiprecision::numerator;
  if (denominator(z) == 1) {
    const auto num = numerator(z);
    if (num >= -1 && num <= n - 2) {
      throw DomainError(std::string(who) + ": z lies on the exclusion set");
    }
  }
}

}  // namespace

ExclusionSet::ExclusionSet(int order) : order_(order) {
  if (order < 1) throw DomainError("ExclusionSet: order must be >= 1");
}

double ExclusionSet::distance(double z) const {
  const double hi = order_ - 2;
  if (z <= -1.0) return -1.0 - z;
  if (z >= hi) return z - hi;
  return std::abs(z - std::round(z));
}

double p_eval(int n, double z) {
  if (n < 0) throw DomainError("p_eval: order must be >= 0");
  double p = 1.0;
  for (int m = 1; m <= n; ++m) p = (z - m + 1) * p + parity_sign(m);
  return p;
}

double p_eval_explicit(int n, double z) {
  require_order(n, "p_eval_explicit");
  double sum = 1.0;
  for (int j = 0; j <= n - 1; ++j) {
    double prod = 1.0;
    for (int i = 0; i <= j; ++i) prod *= parity_sign(j - 1) * (z - n + i + 1);
    sum += prod;
  }
  return parity_sign(n) * sum;
}

double q_eval(int n, double z) {
  require_admissible(n, z, "q_eval");
  return run_recurrence<double>(n, z, -z / (z + 1.0),
                                [z] { return (z * z + 1.0) / (z * (z + 1.0)); });
}

double q_eval_explicit(int n, double z) {
  require_admissible(n, z, "q_eval_explicit");
  return parity_sign(n) * (1.0 + explicit_sum(n, z));
}

double r_eval(int n, double z) {
  require_admissible(n, z, "r_eval");
  return run_recurrence<double>(n, z, -1.0 / (z + 1.0),
                                [z] { return (z - 1.0) / (z * (z + 1.0)); });
}

double r_eval_explicit(int n, double z) {
  require_admissible(n, z, "r_eval_explicit");
  return parity_sign(n - 1) * explicit_sum(n, z);
}

RationalValue q_eval_exact(int n, const Rational& z) {
  require_exact_admissible(n, z, "q_eval_exact");
  return mirror(run_recurrence<Rational>(n, z, Rational(-z / (z + 1)), [&z] {
    return Rational((z * z + 1) / (z * (z + 1)));
  }));
}

RationalValue r_eval_exact(int n, const Rational& z) {
  require_exact_admissible(n, z, "r_eval_exact");
  return mirror(run_recurrence<Rational>(n, z, Rational(Rational(-1) / (z + 1)), [&z] {
    return Rational((z - 1) / (z * (z + 1)));
  }));
}

double g_eval(int k, double x) {
  require_order(k, "g_eval");
  if (!(x > k - 2)) {
    throw DomainError("g_eval: requires x > k - 2, got x = " + std::to_string(x) +
                      ", k = " + std::to_string(k));
  }
  double sum = 0.0;
  for (int i = 0; i <= k - 1; ++i) sum += parity_sign(k + i) * specfun::gamma(x + 1.0 - i);
  return sum;
}

}  // namespace altkurepa::seqcore
