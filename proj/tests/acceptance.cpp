// Acceptance run: one PASS/FAIL line per criterion, each with a wall-clock budget.
#include <chrono>
#include <cstdio>
#include <exception>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "colorpart/colorpart.hpp"
#include "test_support.hpp"

namespace {

using colorpart::ExactRat;

struct Outcome {
  bool ok;
  std::string detail;
};

struct Criterion {
  std::string name;
  double budget_s;
  std::function<Outcome()> check;
};

Outcome from_report(const colorpart::VerificationReport& report) {
  std::ostringstream os;
  os << report.range << ", " << report.checked << " points, " << report.failures.size() << " failures";
  if (!report.failures.empty()) {
    const auto& f = report.failures.front();
    os << "; first " << colorpart::cli::render_params(f, " ") << ": expected " << colorpart::rat_render(f.expected)
       << ", got " << colorpart::rat_render(f.actual);
  }
  return {report.passed(), os.str()};
}

Outcome log_euler() {
  const auto coeffs = colorpart::neg_log_euler(200);
  const auto sieve = colorpart::sigma_sieve(200);
  unsigned matched = 0;
  for (unsigned n = 1; n <= 200; ++n) matched += coeffs[n] == sieve.theta(n) ? 1 : 0;
  return {matched == 200, std::to_string(matched) + "/200 coefficients equal sigma(n)/n"};
}

Outcome compositions() {
  return from_report(colorpart::verify_range(colorpart::Identity::compositions, {.max_n = 18, .max_r = 4}));
}

Outcome erratum() {
  const ExactRat printed = colorpart::colored_count_by_compositions(2, 2, colorpart::LeadingTerm::theta);
  const ExactRat truth(colorpart::p_color_series(2, 2)[2]);
  if (printed == truth || printed != colorpart::make_rat(7, 2) || truth != ExactRat(5)) {
    return {false, "unscaled form at n=2 r=2 gave " + colorpart::rat_render(printed)};
  }
  const auto p = colorpart::partition_p(12);
  for (unsigned n = 2; n <= 12; ++n) {
    if (colorpart::colored_count_by_compositions(n, 1, colorpart::LeadingTerm::theta) != ExactRat(p[n])) {
      return {false, "unscaled form differs from p(n) at n=" + std::to_string(n)};
    }
  }
  return {true, "unscaled form gives 7/2 against 5 at n=2 r=2, and equals p(n) for 2<=n<=12 at r=1"};
}

Outcome bell_colored() {
  return from_report(colorpart::verify_range(colorpart::Identity::bell_colored, {.max_n = 100, .r_values = {1, 2, 3, 5, 10}}));
}

Outcome bell_triple() {
  std::mt19937_64 rng(20240611);
  unsigned checked = 0;
  for (int trial = 0; trial < 5; ++trial) {
    const colorpart::BellArgs point(testing_support::random_rats(rng, 12));
    colorpart::BellRecurrence recurrence(point);
    for (unsigned n = 1; n <= 12; ++n) {
      for (unsigned k = 1; k <= n; ++k) {
        const ExactRat def = colorpart::bell_definition(n, k, point);
        if (recurrence(n, k) != def || colorpart::bell_cvijovic(n, k, point) != def) {
          return {false, "disagreement at n=" + std::to_string(n) + " k=" + std::to_string(k)};
        }
        ++checked;
      }
    }
  }
  return {true, std::to_string(checked) + " (n,k) points over 5 random vectors"};
}

Outcome bell_theta() { return from_report(colorpart::verify_range(colorpart::Identity::bell_theta, {.max_n = 60})); }

Outcome bell_alternating() {
  return from_report(colorpart::verify_range(colorpart::Identity::bell_alternating, {.max_n = 40}));
}

Outcome sigma_inversion() {
  const auto table = colorpart::p_color_table(300);
  const auto sieve = colorpart::sigma_sieve(300);
  for (unsigned n = 1; n <= 300; ++n) {
    const ExactRat value = colorpart::sigma_by_colored_counts(n, table);
    if (!value.is_integer()) return {false, "non-integer value " + colorpart::rat_render(value) + " at n=" + std::to_string(n)};
    if (value != ExactRat(sieve[n])) return {false, "wrong value at n=" + std::to_string(n)};
  }
  return {true, "n=1..300, every value an integer equal to sigma(n)"};
}

Outcome harmonic_binomial() {
  return from_report(colorpart::verify_range(colorpart::Identity::harmonic_binomial, {.max_n = 200}));
}

Outcome routes() {
  unsigned checked = 0;
  for (unsigned r = 1; r <= 5; ++r) {
    const auto series = colorpart::p_color_series(r, 25);
    const auto recurrence = colorpart::p_color_recurrence(r, 25);
    for (unsigned n = 0; n <= 25; ++n) {
      if (series[n] != recurrence[n] || series[n] != colorpart::brute_force_colored(n, r)) {
        return {false, "disagreement at n=" + std::to_string(n) + " r=" + std::to_string(r)};
      }
      ++checked;
    }
  }
  return {true, std::to_string(checked) + " (n,r) points, three routes"};
}

Outcome cli_contract() {
  namespace cli = colorpart::cli;
  struct Case {
    std::vector<std::string> args;
    int code;
  };
  const std::vector<Case> matrix{
      {{"sigma", "--n", "12"}, cli::kExitOk},
      {{"pr", "--n", "3", "--r", "2"}, cli::kExitOk},
      {{"theta", "--n", "2"}, cli::kExitOk},
      {{"bell", "--n", "3", "--k", "2", "--xs", "1,4", "--algo", "cvijovic"}, cli::kExitOk},
      {{"verify", "th2", "--max-n", "50"}, cli::kExitOk},
      {{"verify", "th1", "--max-n", "10", "--max-r", "3"}, cli::kExitOk},
      {{"verify", "lemma4", "--max-n", "10"}, cli::kExitOk},
      {{"table", "--max-n", "5", "--max-r", "3", "--format", "csv"}, cli::kExitOk},
      {{"bench", "--max-n", "20", "--routes", "series,recurrence"}, cli::kExitOk},
      {{"verify", "th1-printed", "--max-n", "4", "--max-r", "2"}, cli::kExitCounterexample},
      {{"sigma", "--n", "0"}, cli::kExitUsage},
      {{"table", "--max-n", "0", "--max-r", "2"}, cli::kExitUsage},
      {{"verify", "th3", "--max-n", "5"}, cli::kExitUsage},
      {{"verify", "th1", "--max-n", "30"}, cli::kExitUsage},
      {{"bench", "--max-n", "30", "--routes", "series,th1"}, cli::kExitUsage},
      {{"bell", "--n", "3", "--k", "2", "--xs", "1,x"}, cli::kExitUsage},
      {{"frobnicate"}, cli::kExitUsage},
  };
  for (const auto& c : matrix) {
    std::ostringstream out;
    std::ostringstream err;
    const int code = cli::run(c.args, out, err);
    if (code != c.code) {
      std::string joined;
      for (const auto& a : c.args) joined += (joined.empty() ? "" : " ") + a;
      return {false, "'" + joined + "' exited " + std::to_string(code) + ", wanted " + std::to_string(c.code)};
    }
  }
  for (auto format : {cli::OutputFormat::csv, cli::OutputFormat::json_lines}) {
    const std::string text = cli::render_cells(cli::table_cells(30, 6), format);
    if (cli::render_cells(cli::parse_cells(text, format), format) != text) return {false, "table round trip differs"};
  }
  return {true, std::to_string(matrix.size()) + " invocations, csv and json-lines round trips identical"};
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {"log-euler coefficients are sigma(n)/n", 10, log_euler},
      {"composition formula with r*theta leading term", 120, compositions},
      {"unscaled leading term fails for r>1, holds for r=1", 10, erratum},
      {"Bell form of p_{-r}(n)", 60, bell_colored},
      {"three Bell algorithms agree", 60, bell_triple},
      {"theta(n) from Bell polynomials in p(n)", 30, bell_theta},
      {"alternating Bell sum of p(n)", 60, bell_alternating},
      {"sigma(n) from colored partition counts", 120, sigma_inversion},
      {"harmonic binomial sum", 10, harmonic_binomial},
      {"series, recurrence and brute force agree", 60, routes},
      {"CLI exit codes and round trips", 60, cli_contract},
  };

  int failed = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome outcome{false, ""};
    try {
      outcome = c.check();
    } catch (const std::exception& e) {
      outcome = {false, std::string("exception: ") + e.what()};
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_budget = seconds <= c.budget_s;
    const bool pass = outcome.ok && in_budget;
    if (!pass) ++failed;
    std::printf("%s  %-52s %8.3f s / %4.0f s  %s%s\n", pass ? "PASS" : "FAIL", c.name.c_str(), seconds, c.budget_s,
                outcome.detail.c_str(), in_budget ? "" : " [over budget]");
  }
  std::printf("%zu criteria, %d failed\n", criteria.size(), failed);
  return failed == 0 ? 0 : 1;
}
