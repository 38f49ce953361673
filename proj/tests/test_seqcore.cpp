#include <doctest.h>

#include <boost/multiprecision/cpp_int.hpp>
#include <cmath>
#include <random>
#include <vector>

#include "altkurepa/errors.hpp"
#include "altkurepa/seqcore.hpp"
#include "altkurepa/specfun.hpp"

using namespace altkurepa;
using namespace altkurepa::seqcore;

namespace {

double rel_close(double a, double b) { return std::abs(a - b) / std::max(1.0, std::abs(a)); }

// Grid on [-1.9, 20] that keeps a distance > 0.05 from {-1, ..., n-2}.
std::vector<double> admissible_grid(int n, int count) {
  std::vector<double> zs;
  const ExclusionSet excl(n);
  for (int i = 0; static_cast<int>(zs.size()) < count && i < 10 * count; ++i) {
    const double z = -1.9 + 21.9 * (i + 0.5) / (2.0 * count);
    if (excl.distance(z) > 0.05) zs.push_back(z);
  }
  return zs;
}

}  // namespace

TEST_CASE("p_eval: spot values") {
  CHECK(p_eval(0, 7.3) == 1.0);
  CHECK(p_eval(1, 5.0) == 4.0);
  CHECK(p_eval(2, 5.0) == 17.0);
  CHECK(p_eval(3, 5.0) == 50.0);
  CHECK_THROWS_AS(p_eval(-1, 1.0), DomainError);
}

TEST_CASE("p_eval_explicit: spot values") {
  CHECK(p_eval_explicit(1, 5.0) == 4.0);
  CHECK(p_eval_explicit(2, 3.0) == 5.0);
  CHECK(p_eval_explicit(3, 5.0) == 50.0);
  CHECK_THROWS_AS(p_eval_explicit(0, 1.0), DomainError);
}

TEST_CASE("q/r recurrences: spot values") {
  CHECK(q_eval(1, 3.0) == doctest::Approx(-0.75).epsilon(1e-15));
  CHECK(q_eval(2, 3.0) == doctest::Approx(10.0 / 12.0).epsilon(1e-15));
  CHECK(q_eval(3, 3.0) == doctest::Approx(-19.0 / 24.0).epsilon(1e-15));
  CHECK(r_eval(1, 3.0) == doctest::Approx(-0.25).epsilon(1e-15));
  CHECK(r_eval(2, 3.0) == doctest::Approx(2.0 / 12.0).epsilon(1e-15));
  CHECK(r_eval(3, 3.0) == doctest::Approx(-5.0 / 24.0).epsilon(1e-15));
}

TEST_CASE("q/r explicit forms: spot values") {
  CHECK(q_eval_explicit(1, 3.0) == doctest::Approx(-0.75).epsilon(1e-15));
  CHECK(q_eval_explicit(2, 3.0) == doctest::Approx(5.0 / 6.0).epsilon(1e-15));
  CHECK(q_eval_explicit(3, 3.0) == doctest::Approx(-19.0 / 24.0).epsilon(1e-15));
  CHECK(r_eval_explicit(2, 3.0) == doctest::Approx(1.0 / 6.0).epsilon(1e-15));
  CHECK(r_eval_explicit(3, 3.0) == doctest::Approx(-5.0 / 24.0).epsilon(1e-15));
  CHECK(r_eval_explicit(1, 0.0) == -1.0);
}

TEST_CASE("exclusion set") {
  const ExclusionSet e(4);  // {-1, 0, 1, 2}
  CHECK(e.contains(-1));
  CHECK(e.contains(2));
  CHECK_FALSE(e.contains(3));
  CHECK_FALSE(e.contains(-2));
  CHECK(e.distance(2.5) == doctest::Approx(0.5));
  CHECK(e.distance(-3.0) == doctest::Approx(2.0));
  CHECK(e.distance(0.75) == doctest::Approx(0.25));

  CHECK_THROWS_AS(q_eval(3, 1.0), DomainError);
  CHECK_THROWS_AS(r_eval(3, 1.0 + 5e-10), DomainError);
  CHECK_THROWS_AS(q_eval_explicit(2, -1.0), DomainError);
  CHECK_THROWS_AS(r_eval_explicit(5, 3.0), DomainError);
  CHECK_NOTHROW(q_eval(3, 1.0 + 1e-6));
  CHECK_NOTHROW(r_eval(3, 2.0));
  CHECK_THROWS_AS(q_eval(0, 5.0), DomainError);
}

TEST_CASE("property: recurrence and explicit forms agree (n <= 12, 200 points)") {
  for (int n = 1; n <= 12; ++n) {
    CAPTURE(n);
    const auto zs = admissible_grid(n, 200);
    REQUIRE(zs.size() == 200);
    double worst_q = 0.0, worst_r = 0.0, worst_p = 0.0;
    for (double z : zs) {
      worst_q = std::max(worst_q, rel_close(q_eval(n, z), q_eval_explicit(n, z)));
      worst_r = std::max(worst_r, rel_close(r_eval(n, z), r_eval_explicit(n, z)));
      worst_p = std::max(worst_p, rel_close(p_eval(n, z), p_eval_explicit(n, z)));
    }
    CHECK(worst_q <= 1e-12);
    CHECK(worst_r <= 1e-12);
    CHECK(worst_p <= 1e-12);
  }
}

TEST_CASE("property: complement identity r_n = (-1)^n - q_n") {
  for (int n = 1; n <= 12; ++n) {
    const double sign = (n % 2 == 0) ? 1.0 : -1.0;
    for (double z : admissible_grid(n, 200)) {
      CAPTURE(n);
      CAPTURE(z);
      CHECK(rel_close(r_eval(n, z), sign - q_eval(n, z)) <= 1e-12);
    }
  }
}

TEST_CASE("property: p_n is a monic polynomial of degree n") {
  using boost::multiprecision::cpp_int;
  for (int n = 0; n <= 12; ++n) {
    CAPTURE(n);
    // Samples at z = 0..n+1 are integers well inside 2^53, so the finite
    // differences can be taken exactly.
    std::vector<cpp_int> values;
    for (int z = 0; z <= n + 1; ++z) {
      const double v = p_eval(n, z);
      REQUIRE(v == std::round(v));
      values.emplace_back(static_cast<long long>(v));
    }
    for (int order = 1; order <= n + 1; ++order) {
      for (std::size_t i = 0; i + 1 < values.size(); ++i) values[i] = values[i + 1] - values[i];
      values.pop_back();
      if (order == n) {
        cpp_int factorial = 1;
        for (int i = 2; i <= n; ++i) factorial *= i;
        CHECK(values.front() == factorial);
      }
    }
    REQUIRE(values.size() == 1);
    CHECK(values.front() == 0);
  }
}

TEST_CASE("exact rational path matches the floating path") {
  for (int n = 1; n <= 12; ++n) {
    for (int zi = -7; zi <= 25; ++zi) {
      if (ExclusionSet(n).contains(zi)) continue;
      const auto q = q_eval_exact(n, Rational(zi));
      const auto r = r_eval_exact(n, Rational(zi));
      CAPTURE(n);
      CAPTURE(zi);
      CHECK(std::abs(q.approx - q_eval(n, zi)) <= 64 * std::numeric_limits<double>::epsilon() *
                                                      std::max(1.0, std::abs(q.approx)));
      CHECK(std::abs(r.approx - r_eval(n, zi)) <= 64 * std::numeric_limits<double>::epsilon() *
                                                      std::max(1.0, std::abs(r.approx)));
      // Exact complement identity.
      const Rational sign = (n % 2 == 0) ? 1 : -1;
      CHECK(r.exact == sign - q.exact);
    }
  }
}

TEST_CASE("exact rational path: values and limits") {
  const auto q3 = q_eval_exact(3, Rational(3));
  CHECK(q3.exact == Rational(-19, 24));
  const auto r3 = r_eval_exact(3, Rational(3));
  CHECK(r3.exact == Rational(-5, 24));
  const auto half = r_eval_exact(2, Rational(1, 2));  // (z-1)/(z(z+1)) at 1/2 = -2/3
  CHECK(half.exact == Rational(-2, 3));
  CHECK(boost::multiprecision::denominator(half.exact) == 3);

  CHECK_THROWS_AS(q_eval_exact(33, Rational(40)), DomainError);
  CHECK_NOTHROW(q_eval_exact(32, Rational(40)));
  CHECK_THROWS_AS(r_eval_exact(4, Rational(2)), DomainError);
  CHECK_NOTHROW(r_eval_exact(4, Rational(5, 2)));
  CHECK(q_eval_exact(1, Rational(0)).exact == 0);
  CHECK(r_eval_exact(1, Rational(0)).exact == -1);
}

TEST_CASE("g_eval: spot values and domain") {
  CHECK(g_eval(1, 3.0) == -6.0);
  CHECK(g_eval(2, 3.0) == 4.0);
  CHECK(specfun::gamma(5.0) * r_eval(2, 3.0) == doctest::Approx(4.0).epsilon(1e-14));
  CHECK_THROWS_AS(g_eval(3, 1.0), DomainError);
  CHECK_THROWS_AS(g_eval(0, 5.0), DomainError);
}

TEST_CASE("property: g_k(x) = Gamma(x+2) r_k(x) for k <= 10") {
  std::mt19937_64 rng(7);
  for (int k = 1; k <= 10; ++k) {
    std::uniform_real_distribution<double> dist(k - 2.0 + 1e-3, k + 20.0);
    for (int i = 0; i < 100; ++i) {
      const double x = dist(rng);
      if (ExclusionSet(k).near(x, 1e-6)) continue;
      const double g = g_eval(k, x);
      const double bridge = specfun::gamma(x + 2.0) * r_eval(k, x);
      CAPTURE(k);
      CAPTURE(x);
      CHECK(std::abs(g - bridge) <= 1e-10 * std::max(1.0, std::abs(g)));
    }
  }
}
