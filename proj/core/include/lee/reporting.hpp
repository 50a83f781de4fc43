#pragma once

#include <cstddef>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "lee/integrator.hpp"
#include "lee/series_engine.hpp"

namespace lee {

enum class CoefficientFormat { paper, csv };

/// paper: one "%03d;<expression>\n" line per even index ("000;1", "002;-1/6", ...).
/// csv:   header "k,expression" then "k,<expression>" per even index.
void write_coefficient_file(std::ostream& os, const CoefficientTable& table, CoefficientFormat format);

/// "a[k] = p/q" per even index, "a[k] = p" for integer values.
void write_evaluated_table(std::ostream& os, const EvaluatedTable& table);

/// 17 significant digits with '.' as decimal separator whatever the locale.
std::string format_double(double value);

/// Header "x,F,H", one row per grid point, then "# first_zero=<value|none>".
void write_integration_csv(std::ostream& os, const IntegrationResult& result);

struct ComparisonRow {
  double x;
  double series;
  double numeric;
  double abs_error;
};

struct ComparisonReport {
  double n_value = 0.0;
  std::size_t m = 0;
  double dx = 0.0;
  std::vector<ComparisonRow> rows;
};

/// Evaluates the degree-m series on the integrator's grid. The index is
/// converted to an exact rational (1.5 becomes 3/2). Throws
/// std::invalid_argument on invalid input.
ComparisonReport compare_series(double n, std::size_t m, const IntegratorConfig& cfg);

/// Header "x,series,numeric,abs_err".
void write_comparison_csv(std::ostream& os, const ComparisonReport& report);

struct BenchRecord {
  std::size_t m = 0;
  double seconds = 0.0;
  int reps = 1;
};

/// Times compute_coefficients(m) for m = step, 2*step, ..., m_max on a
/// monotonic clock, keeping the fastest of `reps` runs. Runs sequentially.
/// Throws std::invalid_argument unless m_max >= step >= 2 and reps >= 1.
std::vector<BenchRecord> run_bench(std::size_t m_max, std::size_t step, int reps);

/// Header "m,seconds".
void write_bench_csv(std::ostream& os, std::span<const BenchRecord> records);

}  // namespace lee
