#include "cli.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <locale>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string_view>

#include <CLI11.hpp>

#include "lee/errors.hpp"
#include "lee/rational.hpp"
#include "lee/reporting.hpp"
#include "lee/series_engine.hpp"

namespace lee::cli {

namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

double parse_real(std::string_view name, const std::string& text) {
  double value = 0.0;
  const char* first = text.data();
  const char* last = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last || !std::isfinite(value))
    throw UsageError("invalid value for " + std::string(name) + ": '" + text + "'");
  return value;
}

Rational parse_exact(std::string_view name, const std::string& text) {
  try {
    return Rational::parse(text);
  } catch (const ParseError&) {
    throw UsageError("invalid value for " + std::string(name) + ": '" + text +
                     "' (expected an integer or fraction p/q)");
  } catch (const ArithmeticError&) {
    throw UsageError("invalid value for " + std::string(name) + ": zero denominator");
  }
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream file(path, std::ios::binary | std::ios::trunc);
  if (!file) throw IoError("cannot open '" + path + "' for writing");
  file << content;
  file.flush();
  if (!file) throw IoError("failed writing '" + path + "'");
}

std::ostringstream make_buffer() {
  std::ostringstream os;
  os.imbue(std::locale::classic());
  return os;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Lane-Emden power series coefficients, midpoint integration and comparison data"};
  app.require_subcommand(1);

  std::size_t m = 0;
  std::string out_path;
  std::string format = "paper";
  std::string n_text;
  std::string dx_text;
  std::string xmax_text = "50";
  std::size_t m_max = 0;
  std::size_t step = 10;
  int reps = 3;

  auto* coeffs = app.add_subcommand("coeffs", "Write the symbolic coefficients a[k](n) for k <= m");
  coeffs->add_option("--m", m, "Largest coefficient index")->required();
  coeffs->add_option("--out", out_path, "Output file")->required();
  coeffs->add_option("--format", format, "paper (\"000;1\" lines) or csv")
      ->check(CLI::IsMember({"paper", "csv"}));

  auto* eval = app.add_subcommand("eval", "Print exact coefficients for a fixed index");
  eval->add_option("--n", n_text, "Index as an integer or fraction, e.g. 3 or 3/2")->required();
  eval->add_option("--m", m, "Largest coefficient index")->required();
  eval->add_option("--out", out_path, "Output file (default: stdout)");

  auto* integrate = app.add_subcommand("integrate", "Midpoint integration, CSV x,F,H");
  integrate->add_option("--n", n_text, "Index (decimal)")->required();
  integrate->add_option("--dx", dx_text, "Step size")->required();
  integrate->add_option("--xmax", xmax_text,
                        "Stop once x exceeds this value (default 50; the n >= 5 solutions never reach zero)");
  integrate->add_option("--out", out_path, "Output file")->required();

  auto* compare = app.add_subcommand("compare", "Series versus numeric solution, CSV x,series,numeric,abs_err");
  compare->add_option("--n", n_text, "Index (decimal)")->required();
  compare->add_option("--m", m, "Largest series coefficient index")->required();
  compare->add_option("--dx", dx_text, "Step size")->required();
  compare->add_option("--xmax", xmax_text, "Stop once x exceeds this value (default 50)");
  compare->add_option("--out", out_path, "Output file")->required();

  auto* bench = app.add_subcommand("bench", "Time the symbolic coefficient computation, CSV m,seconds");
  bench->add_option("--mmax", m_max, "Largest m to time")->required();
  bench->add_option("--step", step, "Increment of m (default 10)");
  bench->add_option("--reps", reps, "Repetitions per m, fastest kept (default 3)");
  bench->add_option("--out", out_path, "Output file")->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kUsageError;
  }

  try {
    std::ostringstream buffer = make_buffer();
    if (coeffs->parsed()) {
      const auto fmt = format == "csv" ? CoefficientFormat::csv : CoefficientFormat::paper;
      write_coefficient_file(buffer, compute_coefficients(m), fmt);
      write_file(out_path, buffer.str());
    } else if (eval->parsed()) {
      const Rational n = parse_exact("--n", n_text);
      write_evaluated_table(buffer, evaluate_table(compute_coefficients(m), n));
      if (out_path.empty())
        out << buffer.str();
      else
        write_file(out_path, buffer.str());
    } else if (integrate->parsed() || compare->parsed()) {
      const double n = parse_real("--n", n_text);
      if (n < 0.0) throw UsageError("--n must be >= 0");
      IntegratorConfig cfg;
      cfg.dx = parse_real("--dx", dx_text);
      cfg.xmax = parse_real("--xmax", xmax_text);
      try {
        cfg.validate();
      } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
      }
      if (integrate->parsed())
        write_integration_csv(buffer, solve_midpoint(n, cfg));
      else
        write_comparison_csv(buffer, compare_series(n, m, cfg));
      write_file(out_path, buffer.str());
    } else if (bench->parsed()) {
      if (step < 2 || m_max < step) throw UsageError("bench requires --mmax >= --step >= 2");
      if (reps < 1) throw UsageError("bench requires --reps >= 1");
      const auto records = run_bench(m_max, step, reps);
      write_bench_csv(buffer, records);
      write_file(out_path, buffer.str());
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const IoError& e) {
    err << "error: " << e.what() << '\n';
    return kIoError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kInternalError;
  }
  return kSuccess;
}

}  // namespace lee::cli
