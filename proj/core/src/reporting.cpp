#include "lee/reporting.hpp"

#include <array>
#include <charconv>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <limits>
#include <ostream>
#include <stdexcept>

#include "lee/series_eval.hpp"

namespace lee {

void write_coefficient_file(std::ostream& os, const CoefficientTable& table, CoefficientFormat format) {
  if (format == CoefficientFormat::csv) os << "k,expression\n";
  for (std::size_t k = 0; k < table.a.size(); k += 2) {
    if (format == CoefficientFormat::paper) {
      std::array<char, 32> index{};
      std::snprintf(index.data(), index.size(), "%03zu", k);
      os << index.data() << ';' << table.a[k].to_string() << '\n';
    } else {
      os << std::to_string(k) << ',' << table.a[k].to_string() << '\n';
    }
  }
}

void write_evaluated_table(std::ostream& os, const EvaluatedTable& table) {
  for (std::size_t k = 0; k < table.a_values.size(); k += 2)
    os << "a[" << std::to_string(k) << "] = " << table.a_values[k].to_string() << '\n';
}

std::string format_double(double value) {
  std::array<char, 64> buf{};
  const auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), value,
                                       std::chars_format::general, std::numeric_limits<double>::max_digits10);
  if (ec != std::errc()) throw std::runtime_error("failed to format double");
  return std::string(buf.data(), end);
}

void write_integration_csv(std::ostream& os, const IntegrationResult& result) {
  os << "x,F,H\n";
  for (std::size_t i = 0; i < result.xs.size(); ++i)
    os << format_double(result.xs[i]) << ',' << format_double(result.Fs[i]) << ','
       << format_double(result.Hs[i]) << '\n';
  os << "# first_zero=" << (result.first_zero ? format_double(*result.first_zero) : std::string("none")) << '\n';
}

ComparisonReport compare_series(double n, std::size_t m, const IntegratorConfig& cfg) {
  if (!(n >= 0.0) || !std::isfinite(n)) throw std::invalid_argument("polytropic index must be >= 0");
  const TruncatedSeries series(compute_numeric_series(Rational::from_double(n), m));
  const IntegrationResult numeric = solve_midpoint(n, cfg);

  ComparisonReport report{n, m, cfg.dx, {}};
  report.rows.reserve(numeric.xs.size());
  for (std::size_t i = 0; i < numeric.xs.size(); ++i) {
    const double x = numeric.xs[i];
    const double s = eval_series_float(series, x);
    report.rows.push_back({x, s, numeric.Fs[i], std::abs(s - numeric.Fs[i])});
  }
  return report;
}

void write_comparison_csv(std::ostream& os, const ComparisonReport& report) {
  os << "x,series,numeric,abs_err\n";
  for (const auto& row : report.rows)
    os << format_double(row.x) << ',' << format_double(row.series) << ',' << format_double(row.numeric) << ','
       << format_double(row.abs_error) << '\n';
}

std::vector<BenchRecord> run_bench(std::size_t m_max, std::size_t step, int reps) {
  if (step < 2 || m_max < step) throw std::invalid_argument("bench requires m_max >= step >= 2");
  if (reps < 1) throw std::invalid_argument("bench requires reps >= 1");

  using clock = std::chrono::steady_clock;
  std::vector<BenchRecord> records;
  for (std::size_t m = step; m <= m_max; m += step) {
    double best = std::numeric_limits<double>::infinity();
    for (int r = 0; r < reps; ++r) {
      const auto start = clock::now();
      const CoefficientTable table = compute_coefficients(m);
      const auto stop = clock::now();
      // keep the table alive until the clock is read
      if (table.a.size() != m + 1) throw std::logic_error("coefficient table has the wrong size");
      best = std::min(best, std::chrono::duration<double>(stop - start).count());
    }
    records.push_back({m, best, reps});
  }
  return records;
}

void write_bench_csv(std::ostream& os, std::span<const BenchRecord> records) {
  os << "m,seconds\n";
  for (const auto& r : records) os << std::to_string(r.m) << ',' << format_double(r.seconds) << '\n';
}

}  // namespace lee
