#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <locale>
#include <sstream>
#include <string>

#include "lee/expression_parser.hpp"
#include "lee/reporting.hpp"

using lee::CoefficientFormat;
using lee::Rational;

namespace {

std::string coefficient_file(std::size_t m, CoefficientFormat format) {
  std::ostringstream os;
  lee::write_coefficient_file(os, lee::compute_coefficients(m), format);
  return os.str();
}

std::string evaluated(const Rational& n, std::size_t m) {
  std::ostringstream os;
  lee::write_evaluated_table(os, lee::evaluate_table(lee::compute_coefficients(m), n));
  return os.str();
}

}  // namespace

TEST_CASE("coefficient file in the paper layout") {
  CHECK(coefficient_file(6, CoefficientFormat::paper) == "000;1\n002;-1/6\n004;n/120\n006;-n*(8*n - 5)/15120\n");
  CHECK(coefficient_file(0, CoefficientFormat::paper) == "000;1\n");
  CHECK(coefficient_file(7, CoefficientFormat::paper) == coefficient_file(6, CoefficientFormat::paper));
  const std::string eight = coefficient_file(8, CoefficientFormat::paper);
  CHECK(eight.ends_with("\n008;n*(122*n**2 - 183*n + 70)/3265920\n"));
}

TEST_CASE("coefficient file as csv") {
  CHECK(coefficient_file(4, CoefficientFormat::csv) == "k,expression\n0,1\n2,-1/6\n4,n/120\n");
}

TEST_CASE("coefficient file lines parse back to the table") {
  const auto table = lee::compute_coefficients(40);
  std::ostringstream os;
  lee::write_coefficient_file(os, table, CoefficientFormat::paper);
  std::istringstream is(os.str());
  std::string line;
  std::size_t k = 0;
  while (std::getline(is, line)) {
    REQUIRE(line.size() > 4);
    CHECK(std::stoul(line.substr(0, 3)) == k);
    CHECK(line[3] == ';');
    CHECK(lee::parse_expression(line.substr(4)) == table.a[k]);
    k += 2;
  }
  CHECK(k == 42);
}

TEST_CASE("evaluated table lines") {
  const std::string three = evaluated(Rational(3), 8);
  CHECK(three.find("a[8] = 619/1088640\n") != std::string::npos);
  CHECK(evaluated(Rational(1), 4) == "a[0] = 1\na[2] = -1/6\na[4] = 1/120\n");
  const std::string zero = evaluated(Rational(0), 8);
  CHECK(zero.find("a[4] = 0\n") != std::string::npos);
  CHECK(zero.find("a[6] = 0\n") != std::string::npos);
  CHECK(zero.find("a[8] = 0\n") != std::string::npos);
}

TEST_CASE("format_double uses 17 significant digits and ignores the locale") {
  CHECK(lee::format_double(0.0) == "0");
  CHECK(lee::format_double(1.0) == "1");
  CHECK(lee::format_double(0.1) == "0.10000000000000001");
  CHECK(std::stod(lee::format_double(std::numbers::pi)) == std::numbers::pi);
  try {
    const std::locale previous = std::locale::global(std::locale("de_DE.UTF-8"));
    CHECK(lee::format_double(1.5) == "1.5");
    std::locale::global(previous);
  } catch (const std::runtime_error&) {
    // locale not installed in this environment
  }
}

TEST_CASE("integration csv") {
  lee::IntegratorConfig cfg;
  cfg.dx = 0.5;
  std::ostringstream os;
  lee::write_integration_csv(os, lee::solve_midpoint(0.0, cfg));
  const std::string text = os.str();
  CHECK(text.starts_with("x,F,H\n0,1,0\n0.5,"));
  CHECK(text.find("\n# first_zero=") != std::string::npos);
  CHECK(text.ends_with("\n"));

  cfg.dx = 1e-2;
  cfg.xmax = 10.0;
  std::ostringstream positive;
  lee::write_integration_csv(positive, lee::solve_midpoint(5.0, cfg));
  CHECK(positive.str().ends_with("# first_zero=none\n"));

  cfg.dx = 1e-3;
  cfg.xmax = 50.0;
  const auto r = lee::solve_midpoint(1.0, cfg);
  std::ostringstream sine;
  lee::write_integration_csv(sine, r);
  const std::string s = sine.str();
  const auto pos = s.rfind("# first_zero=");
  REQUIRE(pos != std::string::npos);
  const double zero = std::stod(s.substr(pos + 13));
  CHECK(std::abs(zero - std::numbers::pi) < 1e-3);
}

TEST_CASE("comparison report") {
  lee::IntegratorConfig cfg;
  cfg.dx = 1e-3;
  const auto report = lee::compare_series(3.0, 28, cfg);
  CHECK(report.m == 28);
  double worst = 0.0;
  for (std::size_t i = 0; i < report.rows.size(); ++i) {
    const auto& row = report.rows[i];
    CHECK(row.abs_error == std::abs(row.series - row.numeric));
    if (i > 0) CHECK(row.x > report.rows[i - 1].x);
    if (row.x <= 1.0) worst = std::max(worst, row.abs_error);
  }
  CHECK(worst < 1e-6);

  cfg.dx = 1e-2;
  const auto exact = lee::compare_series(0.0, 4, cfg);
  for (const auto& row : exact.rows) CHECK(row.abs_error <= 10.0 * cfg.dx * cfg.dx);

  std::ostringstream os;
  lee::write_comparison_csv(os, exact);
  CHECK(os.str().starts_with("x,series,numeric,abs_err\n0,1,1,0\n"));
}

TEST_CASE("truncated series departs from the numeric solution for large x") {
  lee::IntegratorConfig cfg;
  cfg.dx = 1e-3;
  const auto report = lee::compare_series(2.0, 24, cfg);
  bool increasing = true;
  for (std::size_t i = 1; i < report.rows.size(); ++i)
    if (report.rows[i].x >= 3.0) increasing = increasing && report.rows[i].abs_error >= report.rows[i - 1].abs_error;
  CHECK(increasing);
  CHECK(report.rows.back().abs_error > 1e-2);
}

TEST_CASE("bench records") {
  const auto records = lee::run_bench(40, 10, 3);
  REQUIRE(records.size() == 4);
  for (std::size_t i = 0; i < records.size(); ++i) {
    CHECK(records[i].m == 10 * (i + 1));
    CHECK(records[i].seconds >= 0.0);
    CHECK(records[i].reps == 3);
  }
  std::ostringstream os;
  lee::write_bench_csv(os, records);
  const std::string text = os.str();
  CHECK(text.starts_with("m,seconds\n10,"));
  CHECK(std::count(text.begin(), text.end(), '\n') == 5);

  CHECK_THROWS_AS(lee::run_bench(10, 1, 1), std::invalid_argument);
  CHECK_THROWS_AS(lee::run_bench(5, 10, 1), std::invalid_argument);
  CHECK_THROWS_AS(lee::run_bench(10, 2, 0), std::invalid_argument);
}
