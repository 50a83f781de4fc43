#include <doctest.h>

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "lee/integrator.hpp"

using lee::IntegrationResult;
using lee::IntegratorConfig;
using lee::Termination;

namespace {

IntegratorConfig config(double dx, double xmax = 50.0) {
  IntegratorConfig cfg;
  cfg.dx = dx;
  cfg.xmax = xmax;
  return cfg;
}

// Grid value nearest to x.
std::size_t nearest(const IntegrationResult& r, double x) {
  std::size_t best = 0;
  for (std::size_t i = 0; i < r.xs.size(); ++i)
    if (std::abs(r.xs[i] - x) < std::abs(r.xs[best] - x)) best = i;
  return best;
}

}  // namespace

TEST_CASE("seed_values") {
  for (const double n : {0.0, 1.5, 3.0}) {
    const auto s = lee::seed_values(n, 0.0, 10);
    CHECK(s.F == 1.0);
    CHECK(s.H == 0.0);
  }
  // direct summation with the exact n = 3 coefficients at x = 1/10
  const auto s3 = lee::seed_values(3.0, 0.1, 10);
  CHECK(s3.F == doctest::Approx(0.9983358295691694).epsilon(1e-15));
  CHECK(s3.H == doctest::Approx(-0.03323355906978768).epsilon(1e-15));

  const auto s0 = lee::seed_values(0.0, 1.0, 10);
  CHECK(s0.F == doctest::Approx(5.0 / 6.0).epsilon(1e-15));
  CHECK(s0.H == doctest::Approx(-1.0 / 3.0).epsilon(1e-15));

  const auto coefficients = lee::seed_coefficients(1.5, 10);
  CHECK(coefficients.size() == 11);
  CHECK(coefficients[4] == 1.0 / 80.0);  // exact 3/2 / 120, correctly rounded
}

TEST_CASE("initial samples and seed region") {
  const auto r = lee::solve_midpoint(0.0, config(0.5));
  REQUIRE(r.xs.size() >= 4);
  CHECK(r.xs[0] == 0.0);
  CHECK(r.Fs[0] == 1.0);
  CHECK(r.Hs[0] == 0.0);
  for (std::size_t i = 1; i <= 3; ++i) {
    const auto s = lee::seed_values(0.0, r.xs[i], 10);
    CHECK(r.Fs[i] == s.F);
    CHECK(r.Hs[i] == s.H);
  }
}

TEST_CASE("first zeros of the closed-form solutions") {
  const auto r0 = lee::solve_midpoint(0.0, config(1e-3));
  CHECK(r0.termination == Termination::crossed_zero);
  REQUIRE(r0.first_zero.has_value());
  CHECK(std::abs(*r0.first_zero - std::sqrt(6.0)) < 1e-3);
  CHECK(r0.xs.back() < std::sqrt(6.0));
  CHECK(r0.rejected->first > std::sqrt(6.0) - 1e-3);

  const auto r1 = lee::solve_midpoint(1.0, config(1e-3));
  REQUIRE(r1.first_zero.has_value());
  CHECK(std::abs(*r1.first_zero - std::numbers::pi) < 1e-3);

  const auto fine = lee::solve_midpoint(1.0, config(1e-4));
  REQUIRE(fine.first_zero.has_value());
  CHECK(std::abs(*fine.first_zero - std::numbers::pi) < 1e-4);
}

TEST_CASE("n = 3 zero against a fine-step self oracle") {
  const auto coarse = lee::solve_midpoint(3.0, config(1e-3));
  const auto fine = lee::solve_midpoint(3.0, config(1e-5));
  REQUIRE(coarse.first_zero.has_value());
  REQUIRE(fine.first_zero.has_value());
  CHECK(std::abs(*coarse.first_zero - *fine.first_zero) < 5e-3);
  CHECK(*fine.first_zero == doctest::Approx(6.8968).epsilon(1e-4));
}

TEST_CASE("n = 5 stays positive up to xmax") {
  const auto r = lee::solve_midpoint(5.0, config(1e-3, 50.0));
  CHECK(r.termination == Termination::reached_xmax);
  CHECK_FALSE(r.first_zero.has_value());
  CHECK_FALSE(lee::first_zero(r).has_value());
  CHECK(r.xs.back() <= 50.0);
  CHECK(r.xs.back() > 50.0 - 2e-3);
  for (const double f : r.Fs) CHECK(f > 0.0);
  // closed form (1 + x^2/3)^(-1/2)
  const std::size_t i = nearest(r, 10.0);
  CHECK(r.Fs[i] == doctest::Approx(1.0 / std::sqrt(1.0 + r.xs[i] * r.xs[i] / 3.0)).epsilon(1e-5));
}

TEST_CASE("first_zero interpolates the rejected step") {
  IntegrationResult r;
  r.xs = {0.0, 1.0};
  r.Fs = {1.0, 0.01};
  r.Hs = {0.0, -0.2};
  r.termination = Termination::crossed_zero;
  r.rejected = std::make_pair(1.1, -0.01);
  REQUIRE(lee::first_zero(r).has_value());
  CHECK(*lee::first_zero(r) == doctest::Approx(1.05).epsilon(1e-14));

  r.termination = Termination::reached_xmax;
  CHECK_FALSE(lee::first_zero(r).has_value());
}

TEST_CASE("second-order convergence for n = 1") {
  double errors[3];
  const double steps[3] = {4e-3, 2e-3, 1e-3};
  for (int j = 0; j < 3; ++j) {
    const auto r = lee::solve_midpoint(1.0, config(steps[j]));
    const std::size_t i = nearest(r, 2.0);
    const double x = r.xs[i];
    errors[j] = std::abs(r.Fs[i] - std::sin(x) / x);
  }
  for (int j = 0; j < 2; ++j) {
    const double ratio = errors[j] / errors[j + 1];
    INFO("ratio " << ratio);
    CHECK(ratio >= 3.4);
    CHECK(ratio <= 4.6);
  }
}

TEST_CASE("seed and first stepped point are consistent") {
  for (const double n : {1.0, 3.0}) {
    for (const double dx : {1e-2, 1e-3}) {
      const auto r = lee::solve_midpoint(n, config(dx));
      const auto s = lee::seed_values(n, r.xs[4], 10);
      CHECK(std::abs(r.Fs[4] - s.F) <= 10.0 * dx * dx * dx);
    }
  }
}

TEST_CASE("F decreases strictly up to the first zero") {
  for (const double n : {0.0, 1.0, 1.5, 2.0, 3.0}) {
    const auto r = lee::solve_midpoint(n, config(1e-3));
    CHECK(r.termination == Termination::crossed_zero);
    bool decreasing = true;
    for (std::size_t i = 2; i < r.Fs.size(); ++i) decreasing = decreasing && r.Fs[i] < r.Fs[i - 1];
    CHECK(decreasing);
    for (std::size_t i = 0; i < r.Fs.size(); ++i) CHECK(r.Fs[i] >= 0.0);
  }
}

TEST_CASE("difference quotient matches the averaged slope to second order") {
  for (const double n : {1.0, 3.0}) {
    double worst[2] = {0.0, 0.0};
    const double steps[2] = {2e-3, 1e-3};
    for (int j = 0; j < 2; ++j) {
      const auto r = lee::solve_midpoint(n, config(steps[j]));
      for (std::size_t i = 4; i < r.xs.size() && r.xs[i] < 2.0; ++i) {
        const double quotient = (r.Fs[i + 1] - r.Fs[i]) / steps[j];
        const double average = 0.5 * (r.Hs[i] + r.Hs[i + 1]);
        worst[j] = std::max(worst[j], std::abs(quotient - average));
      }
    }
    CHECK(worst[0] < 1e-4);
    // O(dx^2): halving dx cuts the discrepancy about four times
    CHECK(worst[0] / worst[1] > 3.0);
  }
}

TEST_CASE("non-integer index stops cleanly") {
  const auto r = lee::solve_midpoint(1.5, config(1e-2));
  CHECK(r.termination == Termination::crossed_zero);
  for (const double f : r.Fs) CHECK(std::isfinite(f));
  for (const double h : r.Hs) CHECK(std::isfinite(h));
  REQUIRE(r.first_zero.has_value());
  CHECK(*r.first_zero == doctest::Approx(3.65375).epsilon(1e-3));
}

TEST_CASE("invalid configurations are rejected") {
  CHECK_THROWS_AS(lee::solve_midpoint(-1.0, config(1e-3)), std::invalid_argument);
  CHECK_THROWS_AS(lee::solve_midpoint(1.0, config(0.0)), std::invalid_argument);
  CHECK_THROWS_AS(lee::solve_midpoint(1.0, config(2.0, 1.0)), std::invalid_argument);
  IntegratorConfig odd = config(1e-3);
  odd.seed_order = 7;
  CHECK_THROWS_AS(odd.validate(), std::invalid_argument);
}
