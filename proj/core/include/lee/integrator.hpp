#pragma once

#include <optional>
#include <utility>
#include <vector>

namespace lee {

struct IntegratorConfig {
  double dx = 1e-3;
  /// Safety cap; the solution for n >= 5 never crosses zero.
  double xmax = 50.0;
  /// Degree of the series used on the startup grid points x <= 3*dx.
  int seed_order = 10;

  /// Throws std::invalid_argument unless 0 < dx < xmax and seed_order is even and >= 2.
  void validate() const;
};

enum class Termination { crossed_zero, reached_xmax };

struct IntegrationResult {
  std::vector<double> xs;
  std::vector<double> Fs;
  std::vector<double> Hs;
  Termination termination = Termination::reached_xmax;
  /// The step that went negative, (x, F), kept only for locating the zero.
  std::optional<std::pair<double, double>> rejected;
  std::optional<double> first_zero;
};

struct SeedValues {
  double F;
  double H;
};

/// a[0..seed_order](n) rounded to double.
std::vector<double> seed_coefficients(double n, int seed_order);

/// Truncated series F(x) of degree seed_order and its derivative H(x).
SeedValues seed_values(double n, double x, int seed_order);
SeedValues seed_values(const std::vector<double>& coefficients, double x);

/// Midpoint (RK2) integration of
///
///     F' = H
///     H' = -F^n - (2/x) H
///
/// on the grid x_i = i*dx (accumulated by repeated addition). Grid points with
/// x <= 3*dx take their values from the truncated series; after that each
/// point is one midpoint step. Stops before storing a negative F
/// (crossed_zero) or a point beyond xmax (reached_xmax). For non-integer n a
/// non-positive half-step predictor also ends the run as crossed_zero.
///
/// Throws std::invalid_argument for n < 0 or an invalid configuration.
IntegrationResult solve_midpoint(double n, const IntegratorConfig& cfg);

/// Linear interpolation between the last stored sample and the rejected one;
/// empty when the run did not cross zero.
std::optional<double> first_zero(const IntegrationResult& r);

}  // namespace lee
