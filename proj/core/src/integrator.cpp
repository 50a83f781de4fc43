#include "lee/integrator.hpp"

#include <cmath>
#include <stdexcept>

#include "lee/rational.hpp"
#include "lee/series_engine.hpp"

namespace lee {

void IntegratorConfig::validate() const {
  if (!(dx > 0.0) || !std::isfinite(dx)) throw std::invalid_argument("dx must be positive");
  if (!(xmax > dx) || !std::isfinite(xmax)) throw std::invalid_argument("xmax must exceed dx");
  if (seed_order < 2 || seed_order % 2 != 0) throw std::invalid_argument("seed_order must be even and >= 2");
}

std::vector<double> seed_coefficients(double n, int seed_order) {
  if (seed_order < 0) throw std::invalid_argument("negative seed order");
  const CoefficientTable table = compute_coefficients(static_cast<std::size_t>(seed_order));
  const Rational index = Rational::from_double(n);
  std::vector<double> out;
  out.reserve(table.a.size());
  for (const auto& p : table.a) out.push_back(p.evaluate(index).to_double());
  return out;
}

SeedValues seed_values(const std::vector<double>& coefficients, double x) {
  double F = 0.0;
  double H = 0.0;
  for (std::size_t k = coefficients.size(); k-- > 0;) {
    F = F * x + coefficients[k];
    if (k > 0) H = H * x + static_cast<double>(k) * coefficients[k];
  }
  return {F, H};
}

SeedValues seed_values(double n, double x, int seed_order) {
  return seed_values(seed_coefficients(n, seed_order), x);
}

IntegrationResult solve_midpoint(double n, const IntegratorConfig& cfg) {
  if (!(n >= 0.0) || !std::isfinite(n)) throw std::invalid_argument("polytropic index must be >= 0");
  cfg.validate();

  const bool integer_index = std::floor(n) == n;
  const std::vector<double> seed = seed_coefficients(n, cfg.seed_order);
  const double dx = cfg.dx;

  IntegrationResult r;
  r.xs.push_back(0.0);
  r.Fs.push_back(1.0);
  r.Hs.push_back(0.0);

  std::size_t i = 0;
  double x = dx;
  while (true) {
    if (x > cfg.xmax) {
      r.termination = Termination::reached_xmax;
      break;
    }
    if (x <= 3.0 * dx) {
      const SeedValues s = seed_values(seed, x);
      r.Fs.push_back(s.F);
      r.Hs.push_back(s.H);
    } else {
      const double Fi = r.Fs[i];
      const double Hi = r.Hs[i];
      const double xi = r.xs[i];
      const double F_half = Fi + 0.5 * dx * Hi;
      const double H_half = Hi + 0.5 * dx * (-std::pow(Fi, n) - (2.0 / xi) * Hi);
      const double F_next = Fi + dx * H_half;
      if (F_next < 0.0) {
        r.termination = Termination::crossed_zero;
        r.rejected = std::make_pair(x, F_next);
        break;
      }
      if (!integer_index && F_half <= 0.0) {
        r.termination = Termination::crossed_zero;
        r.rejected = std::make_pair(xi + 0.5 * dx, F_half);
        break;
      }
      const double x_half = xi + 0.5 * dx;
      const double H_next = Hi + dx * (-std::pow(F_half, n) - (2.0 / x_half) * H_half);
      r.Fs.push_back(F_next);
      r.Hs.push_back(H_next);
    }
    r.xs.push_back(x);
    x = x + dx;
    ++i;
  }
  r.first_zero = first_zero(r);
  return r;
}

std::optional<double> first_zero(const IntegrationResult& r) {
  if (r.termination != Termination::crossed_zero || !r.rejected || r.xs.empty()) return std::nullopt;
  const double x0 = r.xs.back();
  const double f0 = r.Fs.back();
  const auto [x1, f1] = *r.rejected;
  if (f0 == f1) return x0;
  return x0 + (x1 - x0) * f0 / (f0 - f1);
}

}  // namespace lee
