#ifndef COLORPART_TOOLS_CLI_HPP
#define COLORPART_TOOLS_CLI_HPP

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <cstdio>
#include <functional>
#include <iomanip>
#include <limits>
#include <map>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "colorpart/colorpart.hpp"

namespace colorpart::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitCounterexample = 1;
inline constexpr int kExitUsage = 2;

class usage_error : public std::invalid_argument {
 public:
  explicit usage_error(const std::string& what) : std::invalid_argument(what) {}
};

enum class OutputFormat { plain, csv, json_lines };

inline OutputFormat parse_format(std::string_view text) {
  if (text == "plain") return OutputFormat::plain;
  if (text == "csv") return OutputFormat::csv;
  if (text == "json-lines") return OutputFormat::json_lines;
  throw usage_error("unknown format '" + std::string(text) + "' (expected plain, csv or json-lines)");
}

// ---------------------------------------------------------------------------
// p_{-r}(n) grids
// ---------------------------------------------------------------------------

struct TableCell {
  std::uint64_t n = 0;
  std::uint64_t r = 0;
  ExactInt value;

  friend bool operator==(const TableCell&, const TableCell&) = default;
};

inline std::vector<TableCell> table_cells(unsigned max_n, unsigned max_r) {
  const PartitionTable table(max_n, max_r);
  std::vector<TableCell> cells;
  cells.reserve(static_cast<std::size_t>(max_n) * max_r);
  for (unsigned n = 1; n <= max_n; ++n) {
    for (unsigned r = 1; r <= max_r; ++r) cells.push_back({n, r, table.at(r, n)});
  }
  return cells;
}

inline std::string render_cells(const std::vector<TableCell>& cells, OutputFormat format) {
  std::ostringstream os;
  switch (format) {
    case OutputFormat::csv:
      os << "n,r,p_r_n\n";
      for (const auto& c : cells) os << c.n << ',' << c.r << ',' << c.value.str() << '\n';
      break;
    case OutputFormat::json_lines:
      for (const auto& c : cells) {
        nlohmann::ordered_json rec;
        rec["n"] = c.n;
        rec["r"] = c.r;
        rec["value"] = c.value.str();
        os << rec.dump() << '\n';
      }
      break;
    case OutputFormat::plain: {
      // One row per n, one column per r.
      std::map<std::uint64_t, std::vector<std::string>> rows;
      std::uint64_t max_r = 0;
      std::size_t width = 1;
      for (const auto& c : cells) {
        rows[c.n].push_back(c.value.str());
        max_r = std::max(max_r, c.r);
        width = std::max(width, rows[c.n].back().size());
      }
      os << std::setw(4) << "n";
      for (std::uint64_t r = 1; r <= max_r; ++r) os << ' ' << std::setw(static_cast<int>(width)) << ("r=" + std::to_string(r));
      os << '\n';
      for (const auto& [n, values] : rows) {
        os << std::setw(4) << n;
        for (const auto& v : values) os << ' ' << std::setw(static_cast<int>(width)) << v;
        os << '\n';
      }
      break;
    }
  }
  return os.str();
}

namespace detail {

inline ExactInt parse_digits(const std::string& text) {
  if (text.empty() || !std::all_of(text.begin(), text.end(), [](char c) { return c >= '0' && c <= '9'; })) {
    throw std::invalid_argument("expected a digit string, got '" + text + "'");
  }
  return ExactInt(text);
}

inline std::uint64_t parse_index(const std::string& text) {
  const ExactInt v = parse_digits(text);
  if (v > std::numeric_limits<std::uint64_t>::max()) throw std::invalid_argument("index out of range: " + text);
  return v.convert_to<std::uint64_t>();
}

}  // namespace detail

/// Reads back the csv or json-lines form produced by render_cells.
inline std::vector<TableCell> parse_cells(std::string_view text, OutputFormat format) {
  std::vector<TableCell> cells;
  std::istringstream is{std::string(text)};
  std::string line;
  if (format == OutputFormat::csv) {
    if (!std::getline(is, line) || line != "n,r,p_r_n") throw std::invalid_argument("missing csv header");
    while (std::getline(is, line)) {
      std::vector<std::string> fields;
      std::stringstream ls(line);
      std::string field;
      while (std::getline(ls, field, ',')) fields.push_back(field);
      if (fields.size() != 3) throw std::invalid_argument("bad csv row: " + line);
      cells.push_back({detail::parse_index(fields[0]), detail::parse_index(fields[1]), detail::parse_digits(fields[2])});
    }
  } else if (format == OutputFormat::json_lines) {
    while (std::getline(is, line)) {
      const auto rec = nlohmann::json::parse(line);
      cells.push_back({rec.at("n").get<std::uint64_t>(), rec.at("r").get<std::uint64_t>(),
                       detail::parse_digits(rec.at("value").get<std::string>())});
    }
  } else {
    throw std::invalid_argument("only csv and json-lines tables can be parsed");
  }
  return cells;
}

// ---------------------------------------------------------------------------
// Verification reports
// ---------------------------------------------------------------------------

inline std::string format_ms(double ms) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.3f", ms);
  return buf;
}

inline std::string render_params(const Counterexample& c, std::string_view sep) {
  std::string out;
  for (const auto& [name, value] : c.params) {
    if (!out.empty()) out += sep;
    out += name + "=" + std::to_string(value);
  }
  return out;
}

inline std::string render_report(const VerificationReport& report, OutputFormat format) {
  std::ostringstream os;
  const char* verdict = report.passed() ? "pass" : "fail";
  switch (format) {
    case OutputFormat::plain:
      os << report.identity << ": " << (report.passed() ? "PASS" : "FAIL") << " (" << report.range << ", checked "
         << report.checked << ", failures " << report.failures.size() << ", " << format_ms(report.elapsed_ms)
         << " ms)\n";
      for (const auto& f : report.failures) {
        os << "  " << render_params(f, " ") << ": expected " << rat_render(f.expected) << ", got "
           << rat_render(f.actual) << '\n';
      }
      break;
    case OutputFormat::csv:
      os << "identity,range,checked,failures,verdict,elapsed_ms\n";
      os << report.identity << ',' << report.range << ',' << report.checked << ',' << report.failures.size() << ','
         << verdict << ',' << format_ms(report.elapsed_ms) << '\n';
      if (!report.failures.empty()) {
        os << "\nparams,expected,actual\n";
        for (const auto& f : report.failures) {
          os << render_params(f, ";") << ',' << rat_render(f.expected) << ',' << rat_render(f.actual) << '\n';
        }
      }
      break;
    case OutputFormat::json_lines: {
      nlohmann::ordered_json summary;
      summary["identity"] = report.identity;
      summary["range"] = report.range;
      summary["checked"] = report.checked;
      summary["failures"] = report.failures.size();
      summary["verdict"] = verdict;
      summary["elapsed_ms"] = format_ms(report.elapsed_ms);
      os << summary.dump() << '\n';
      for (const auto& f : report.failures) {
        nlohmann::ordered_json rec;
        rec["identity"] = report.identity;
        nlohmann::ordered_json params = nlohmann::ordered_json::object();
        for (const auto& [name, value] : f.params) params[name] = value;
        rec["params"] = std::move(params);
        rec["expected"] = rat_render(f.expected);
        rec["actual"] = rat_render(f.actual);
        os << rec.dump() << '\n';
      }
      break;
    }
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// Benchmark routes
// ---------------------------------------------------------------------------

struct Route {
  std::string_view name;
  unsigned max_n_guard;
  unsigned max_r_guard;
  // p_{-r}(1..max_n); element 0 is p_{-r}(1).
  std::function<std::vector<ExactRat>(unsigned max_n, unsigned r)> run;
};

inline const std::vector<Route>& routes() {
  static const std::vector<Route> all = {
      {"series", 2000, 1000,
       [](unsigned max_n, unsigned r) {
         const auto p = p_color_series(r, max_n);
         return std::vector<ExactRat>(p.begin() + 1, p.end());
       }},
      {"recurrence", 2000, 1000,
       [](unsigned max_n, unsigned r) {
         const auto p = p_color_recurrence(r, max_n);
         return std::vector<ExactRat>(p.begin() + 1, p.end());
       }},
      {"bell", 400, 1000,
       [](unsigned max_n, unsigned r) {
         ColoredCountByBell eval(max_n);
         std::vector<ExactRat> out;
         for (unsigned n = 1; n <= max_n; ++n) out.push_back(eval(n, r));
         return out;
       }},
      {"th1", kCompositionGuard, 1000,
       [](unsigned max_n, unsigned r) {
         std::vector<ExactRat> out;
         for (unsigned n = 1; n <= max_n; ++n) out.push_back(colored_count_by_compositions(n, r));
         return out;
       }},
      {"brute", kBruteForceMaxN, kBruteForceMaxColours,
       [](unsigned max_n, unsigned r) {
         std::vector<ExactRat> out;
         for (unsigned n = 1; n <= max_n; ++n) out.push_back(ExactRat(brute_force_colored(n, r)));
         return out;
       }},
  };
  return all;
}

inline const Route& find_route(std::string_view name) {
  for (const auto& route : routes()) {
    if (route.name == name) return route;
  }
  throw usage_error("unknown route '" + std::string(name) + "' (expected series, recurrence, bell, th1 or brute)");
}

// ---------------------------------------------------------------------------
// Dispatch
// ---------------------------------------------------------------------------

namespace detail {

inline std::uint64_t checked_u64(long long value, long long lo, long long hi, std::string_view flag) {
  if (value < lo || value > hi) {
    throw usage_error("--" + std::string(flag) + " must lie in " + std::to_string(lo) + ".." + std::to_string(hi) +
                      ", got " + std::to_string(value));
  }
  return static_cast<std::uint64_t>(value);
}

inline unsigned checked_unsigned(long long value, long long lo, long long hi, std::string_view flag) {
  return static_cast<unsigned>(checked_u64(value, lo, hi, flag));
}

inline std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    const auto pos = text.find(sep, start);
    out.push_back(text.substr(start, pos - start));
    if (pos == std::string::npos) break;
    start = pos + 1;
  }
  return out;
}

}  // namespace detail

inline constexpr long long kMaxSigmaArgument = 1'000'000'000'000'000LL;
inline constexpr long long kMaxCountArgument = 5000;
inline constexpr long long kMaxTableSide = 500;

/// Runs one command line (without the program name). Returns the exit code:
/// 0 success, 1 counterexample or route disagreement, 2 usage or guard error.
inline int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact r-coloured partition counts, divisor sums and partial Bell polynomials", "colorpart"};
  app.require_subcommand(1);

  long long n = 0;
  long long r = 1;
  long long k = 0;
  long long max_n = 0;
  long long max_r = 1;
  std::string xs_text;
  std::string algo = "recurrence";
  std::string format_text = "plain";
  std::string identity_text;
  std::string routes_text = "series,recurrence";

  auto* sigma_cmd = app.add_subcommand("sigma", "Sum of divisors sigma(n)");
  sigma_cmd->add_option("--n", n, "n >= 1")->required();

  auto* theta_cmd = app.add_subcommand("theta", "theta(n) = sigma(n)/n in lowest terms");
  theta_cmd->add_option("--n", n, "n >= 1")->required();

  auto* pr_cmd = app.add_subcommand("pr", "Number of r-coloured partitions of n");
  pr_cmd->add_option("--n", n, "n >= 0")->required();
  pr_cmd->add_option("--r", r, "colours, r >= 1")->required();

  auto* partitions_cmd = app.add_subcommand("partitions", "Partition numbers p(n)");
  auto* partitions_n = partitions_cmd->add_option("--n", n, "single n >= 0");
  auto* partitions_max = partitions_cmd->add_option("--max-n", max_n, "list p(0..max-n)");
  partitions_n->excludes(partitions_max);
  partitions_cmd->add_option("--format", format_text, "plain | csv | json-lines");

  auto* bell_cmd = app.add_subcommand("bell", "Partial Bell polynomial B(n,k) at a rational point");
  bell_cmd->add_option("--n", n, "n >= 0")->required();
  bell_cmd->add_option("--k", k, "k >= 0")->required();
  bell_cmd->add_option("--xs", xs_text, "comma-separated rationals x1,x2,...")->required();
  bell_cmd->add_option("--algo", algo, "definition | recurrence | cvijovic");

  auto* verify_cmd = app.add_subcommand("verify", "Check an identity over a parameter range");
  verify_cmd->add_option("identity", identity_text, "lemma1 | th1 | th1-printed | lemma2 | lemma3 | lemma4 | th2 | binom-sum")
      ->required();
  verify_cmd->add_option("--max-n", max_n, "largest n")->required();
  verify_cmd->add_option("--max-r", max_r, "largest colour count (th1, th1-printed, lemma2)");
  verify_cmd->add_option("--format", format_text, "plain | csv | json-lines");

  auto* table_cmd = app.add_subcommand("table", "Grid of p_{-r}(n) for 1 <= n <= max-n, 1 <= r <= max-r");
  table_cmd->add_option("--max-n", max_n, "largest n")->required();
  table_cmd->add_option("--max-r", max_r, "largest colour count")->required();
  table_cmd->add_option("--format", format_text, "plain | csv | json-lines");

  auto* bench_cmd = app.add_subcommand("bench", "Time and cross-check the routes to p_{-r}(1..max-n)");
  bench_cmd->add_option("--max-n", max_n, "largest n")->required();
  bench_cmd->add_option("--r", r, "colours (default 1)");
  bench_cmd->add_option("--routes", routes_text, "comma-separated: series, recurrence, bell, th1, brute");
  bench_cmd->add_option("--format", format_text, "plain | csv | json-lines");

  std::reverse(args.begin(), args.end());
  try {
    app.parse(args);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    const OutputFormat format = parse_format(format_text);

    if (sigma_cmd->parsed()) {
      out << sigma(detail::checked_u64(n, 1, kMaxSigmaArgument, "n")).str() << '\n';
      return kExitOk;
    }
    if (theta_cmd->parsed()) {
      out << rat_render(theta(detail::checked_u64(n, 1, kMaxSigmaArgument, "n"))) << '\n';
      return kExitOk;
    }
    if (pr_cmd->parsed()) {
      const unsigned nn = detail::checked_unsigned(n, 0, kMaxCountArgument, "n");
      const unsigned rr = detail::checked_unsigned(r, 1, kMaxCountArgument, "r");
      out << p_color_recurrence(rr, nn)[nn].str() << '\n';
      return kExitOk;
    }
    if (partitions_cmd->parsed()) {
      if (!*partitions_n && !*partitions_max) throw usage_error("partitions needs --n or --max-n");
      if (*partitions_n) {
        const unsigned nn = detail::checked_unsigned(n, 0, kMaxCountArgument, "n");
        out << partition_p(nn)[nn].str() << '\n';
        return kExitOk;
      }
      const unsigned top = detail::checked_unsigned(max_n, 0, kMaxCountArgument, "max-n");
      const auto p = partition_p(top);
      for (unsigned i = 0; i <= top; ++i) {
        if (format == OutputFormat::csv) {
          if (i == 0) out << "n,p_n\n";
          out << i << ',' << p[i].str() << '\n';
        } else if (format == OutputFormat::json_lines) {
          nlohmann::ordered_json rec;
          rec["n"] = i;
          rec["value"] = p[i].str();
          out << rec.dump() << '\n';
        } else {
          out << i << ' ' << p[i].str() << '\n';
        }
      }
      return kExitOk;
    }
    if (bell_cmd->parsed()) {
      const unsigned nn = detail::checked_unsigned(n, 0, kMaxCountArgument, "n");
      const unsigned kk = detail::checked_unsigned(k, 0, kMaxCountArgument, "k");
      std::vector<ExactRat> xs;
      for (const auto& piece : detail::split(xs_text, ',')) xs.push_back(rat_parse(piece));
      const BellArgs args_point(std::move(xs));
      ExactRat value;
      if (algo == "definition") {
        value = bell_definition(nn, kk, args_point);
      } else if (algo == "recurrence") {
        value = bell_recurrence(nn, kk, args_point);
      } else if (algo == "cvijovic") {
        value = bell_cvijovic(nn, kk, args_point);
      } else {
        throw usage_error("unknown --algo '" + algo + "' (expected definition, recurrence or cvijovic)");
      }
      out << rat_render(value) << '\n';
      return kExitOk;
    }
    if (verify_cmd->parsed()) {
      const auto id = parse_identity(identity_text);
      if (!id) throw usage_error("unknown identity '" + identity_text + "'");
      SweepBounds bounds;
      bounds.max_n = detail::checked_unsigned(max_n, 1, 100000, "max-n");
      bounds.max_r = detail::checked_unsigned(max_r, 1, kMaxColourGuard, "max-r");
      const VerificationReport report = verify_range(*id, bounds);
      out << render_report(report, format);
      return report.passed() ? kExitOk : kExitCounterexample;
    }
    if (table_cmd->parsed()) {
      const unsigned nn = detail::checked_unsigned(max_n, 1, kMaxTableSide, "max-n");
      const unsigned rr = detail::checked_unsigned(max_r, 1, kMaxTableSide, "max-r");
      out << render_cells(table_cells(nn, rr), format);
      return kExitOk;
    }
    if (bench_cmd->parsed()) {
      const unsigned nn = detail::checked_unsigned(max_n, 1, 100000, "max-n");
      const unsigned rr = detail::checked_unsigned(r, 1, kMaxColourGuard, "r");
      std::vector<const Route*> chosen;
      for (const auto& name : detail::split(routes_text, ',')) chosen.push_back(&find_route(name));
      for (const Route* route : chosen) {
        if (nn > route->max_n_guard || rr > route->max_r_guard) {
          throw guard_error("route " + std::string(route->name) + " is limited to max-n <= " +
                            std::to_string(route->max_n_guard) + " and r <= " + std::to_string(route->max_r_guard));
        }
      }
      std::vector<std::pair<std::string_view, double>> timings;
      std::vector<ExactRat> reference;
      for (const Route* route : chosen) {
        const auto start = std::chrono::steady_clock::now();
        std::vector<ExactRat> values = route->run(nn, rr);
        const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
        if (reference.empty()) {
          reference = std::move(values);
        } else if (values != reference) {
          std::size_t i = 0;
          while (i < values.size() && values[i] == reference[i]) ++i;
          err << "route " << route->name << " disagrees with " << chosen.front()->name << " at n=" << i + 1 << ": "
              << rat_render(values.at(i)) << " vs " << rat_render(reference.at(i)) << '\n';
          return kExitCounterexample;
        }
        timings.emplace_back(route->name, ms);
      }
      if (format == OutputFormat::csv) out << "route,max_n,r,elapsed_ms\n";
      for (const auto& [name, ms] : timings) {
        if (format == OutputFormat::csv) {
          out << name << ',' << nn << ',' << rr << ',' << format_ms(ms) << '\n';
        } else if (format == OutputFormat::json_lines) {
          nlohmann::ordered_json rec;
          rec["route"] = name;
          rec["max_n"] = nn;
          rec["r"] = rr;
          rec["elapsed_ms"] = format_ms(ms);
          out << rec.dump() << '\n';
        } else {
          out << std::left << std::setw(12) << name << std::right << std::setw(14) << format_ms(ms) << " ms\n";
        }
      }
      if (format == OutputFormat::plain) out << "all " << timings.size() << " routes agree on p_{-" << rr << "}(1.." << nn << ")\n";
      return kExitOk;
    }
  } catch (const consistency_error& e) {
    err << "error: " << e.what() << '\n';
    return kExitCounterexample;
  } catch (const std::invalid_argument& e) {  // usage_error, guard_error, malformed input
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  err << "error: no subcommand\n";
  return kExitUsage;
}

}  // namespace colorpart::cli

#endif  // COLORPART_TOOLS_CLI_HPP
