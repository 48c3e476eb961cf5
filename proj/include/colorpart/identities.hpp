#ifndef COLORPART_IDENTITIES_HPP
#define COLORPART_IDENTITIES_HPP

#include <array>
#include <chrono>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "colorpart/bell.hpp"
#include "colorpart/compositions.hpp"
#include "colorpart/divisors.hpp"
#include "colorpart/errors.hpp"
#include "colorpart/exact.hpp"
#include "colorpart/partitions.hpp"
#include "colorpart/series.hpp"

namespace colorpart {

/// Both sides of an identity evaluated at one parameter point.
struct IdentitySides {
  ExactRat lhs;
  ExactRat rhs;
  bool holds() const { return lhs == rhs; }
};

// ---------------------------------------------------------------------------
// p_{-r}(n) as a sum over compositions of theta values
// ---------------------------------------------------------------------------

/// Coefficient of the single-part (m = 1) term.
enum class LeadingTerm {
  r_theta,  ///< r * theta(n): the value the exponential expansion produces
  theta,    ///< theta(n) alone: correct only for r = 1
};

/// p_{-r}(n) = sum_{m=1}^{n} r^m/m! * sum over compositions (b1..bm) of n
/// of theta(b1)...theta(bm). Visits 2^(n-1) compositions; n <= 25.
///
/// With LeadingTerm::theta the m = 1 term is theta(n) instead of r*theta(n).
inline ExactRat colored_count_by_compositions(unsigned n, unsigned r, LeadingTerm lead = LeadingTerm::r_theta) {
  if (n == 0 || r == 0) {
    throw std::domain_error("colored_count_by_compositions: requires n >= 1 and r >= 1");
  }
  if (n > kCompositionGuard) {
    throw guard_error("colored_count_by_compositions: composition sum limited to n <= 25");
  }
  const std::vector<ExactRat> th = theta_values(n);

  ExactRat total = lead == LeadingTerm::r_theta ? ExactRat(r) * th[n] : th[n];
  ExactRat r_pow(r);
  ExactInt m_fact = 1;
  for (unsigned m = 2; m <= n; ++m) {
    r_pow *= ExactRat(r);
    m_fact *= m;
    ExactRat parts_sum;
    fold_compositions(
        n, m, ExactRat(1), [&](const ExactRat& acc, unsigned, unsigned part) { return acc * th[part]; },
        [&](const ExactRat& product) { parts_sum += product; });
    total += r_pow / ExactRat(m_fact) * parts_sum;
  }
  return total;
}

// ---------------------------------------------------------------------------
// p_{-r}(n) from Bell polynomials at x_j = j! theta(j)
// ---------------------------------------------------------------------------

/// p_{-r}(n) = (1/n!) sum_{k=1}^{n} r^k B(n,k)(1!theta(1), 2!theta(2), ...)
/// for every n <= max_n, sharing one memoized Bell table.
class ColoredCountByBell {
 public:
  explicit ColoredCountByBell(unsigned max_n) : max_n_(max_n), bell_(make_args(max_n)) {}

  unsigned max_n() const noexcept { return max_n_; }

  ExactRat operator()(unsigned n, unsigned r) {
    if (n == 0 || n > max_n_ || r == 0) {
      throw std::domain_error("ColoredCountByBell: requires 1 <= n <= " + std::to_string(max_n_) + " and r >= 1");
    }
    ExactRat total;
    ExactRat r_pow(1);
    for (unsigned k = 1; k <= n; ++k) {
      r_pow *= ExactRat(r);
      total += r_pow * bell_(n, k);
    }
    return total / ExactRat(factorial(n));
  }

 private:
  static BellArgs make_args(unsigned max_n) {
    const std::vector<ExactRat> th = theta_values(max_n);
    std::vector<ExactRat> xs;
    xs.reserve(max_n);
    for (unsigned j = 1; j <= max_n; ++j) xs.push_back(ExactRat(factorial(j)) * th[j]);
    return BellArgs(std::move(xs));
  }

  unsigned max_n_;
  BellRecurrence bell_;
};

inline ExactRat colored_count_by_bell(unsigned n, unsigned r) {
  ColoredCountByBell eval(n);
  return eval(n, r);
}

// ---------------------------------------------------------------------------
// theta(n) from Bell polynomials at x_j = j! p(j)
// ---------------------------------------------------------------------------

/// Bell polynomials evaluated at x_j = j! p(j), j = 1..max_n.
class PartitionBell {
 public:
  explicit PartitionBell(unsigned max_n) : max_n_(max_n), bell_(make_args(max_n)) {}

  unsigned max_n() const noexcept { return max_n_; }

  /// B(n,k)(1!p(1), 2!p(2), ...).
  const ExactRat& bell(unsigned n, unsigned k) {
    if (n > max_n_) {
      throw std::domain_error("PartitionBell: n exceeds " + std::to_string(max_n_));
    }
    return bell_(n, k);
  }

  /// theta(n) = (1/n!) sum_{k=1}^{n} (-1)^(k-1) (k-1)! B(n,k).
  ExactRat theta(unsigned n) {
    if (n == 0) {
      throw std::domain_error("PartitionBell::theta: requires n >= 1");
    }
    ExactRat total;
    ExactInt k_minus_1_fact = 1;
    for (unsigned k = 1; k <= n; ++k) {
      if (k > 1) k_minus_1_fact *= (k - 1);
      const ExactRat term = ExactRat(k_minus_1_fact) * bell(n, k);
      if (k % 2 == 1) {
        total += term;
      } else {
        total -= term;
      }
    }
    return total / ExactRat(factorial(n));
  }

 private:
  static BellArgs make_args(unsigned max_n) {
    const std::vector<ExactInt> p = partition_p(max_n);
    std::vector<ExactRat> xs;
    xs.reserve(max_n);
    for (unsigned j = 1; j <= max_n; ++j) xs.emplace_back(factorial(j) * p[j]);
    return BellArgs(std::move(xs));
  }

  unsigned max_n_;
  BellRecurrence bell_;
};

inline ExactRat theta_by_bell(unsigned n) {
  PartitionBell eval(n);
  return eval.theta(n);
}

/// lhs = B(n,k)(1!p(1), 2!p(2), ...),
/// rhs = (n!/k!) sum_{r=1}^{k} (-1)^(k-r) C(k,r) p_{-r}(n).
/// `table` must cover n and k colours.
inline IdentitySides bell_partition_sides(unsigned n, unsigned k, PartitionBell& bell, const PartitionTable& table) {
  if (n == 0 || k == 0) {
    throw std::domain_error("bell_partition_sides: requires n >= 1 and k >= 1");
  }
  if (k > n) return {ExactRat(0), ExactRat(0)};
  ExactInt alternating = 0;
  for (unsigned r = 1; r <= k; ++r) {
    ExactInt term = binomial(k, r) * table.at(r, n);
    if ((k - r) % 2 == 0) {
      alternating += term;
    } else {
      alternating -= term;
    }
  }
  return {bell.bell(n, k), ExactRat(factorial(n) * alternating, factorial(k))};
}

inline IdentitySides bell_partition_sides(unsigned n, unsigned k) {
  if (n == 0 || k == 0) {
    throw std::domain_error("bell_partition_sides: requires n >= 1 and k >= 1");
  }
  if (k > n) return {ExactRat(0), ExactRat(0)};
  PartitionBell bell(n);
  const PartitionTable table(n, k);
  return bell_partition_sides(n, k, bell, table);
}

// ---------------------------------------------------------------------------
// sigma(n) from the coloured partition counts
// ---------------------------------------------------------------------------

/// n * sum_{r=1}^{n} (-1)^(r-1)/r * C(n,r) * p_{-r}(n), reading column n of
/// `table`, which must have at least n colours.
inline ExactRat sigma_by_colored_counts(unsigned n, const PartitionTable& table) {
  if (n == 0) {
    throw std::domain_error("sigma_by_colored_counts: requires n >= 1");
  }
  ExactRat total;
  for (unsigned r = 1; r <= n; ++r) {
    ExactRat term(binomial(n, r) * table.at(r, n), ExactInt(r));
    if (r % 2 == 1) {
      total += term;
    } else {
      total -= term;
    }
  }
  return ExactRat(n) * total;
}

inline ExactRat sigma_by_colored_counts(unsigned n) {
  if (n == 0) {
    throw std::domain_error("sigma_by_colored_counts: requires n >= 1");
  }
  return sigma_by_colored_counts(n, p_color_table(n));
}

/// lhs = sum_{k=r}^{n} C(k,r)/k, rhs = C(n,r)/r. Requires 1 <= r <= n.
inline IdentitySides harmonic_binomial_sides(unsigned n, unsigned r) {
  if (r == 0 || r > n) {
    throw std::domain_error("harmonic_binomial_sides: requires 1 <= r <= n");
  }
  ExactRat lhs;
  for (unsigned k = r; k <= n; ++k) lhs += ExactRat(binomial(k, r), ExactInt(k));
  return {lhs, ExactRat(binomial(n, r), ExactInt(r))};
}

/// -log E(q) through q^cutoff.
inline TruncatedSeries neg_log_euler(std::size_t cutoff) { return -series_log(euler_E(cutoff)); }

// ---------------------------------------------------------------------------
// Range verification
// ---------------------------------------------------------------------------

enum class Identity {
  log_euler,           ///< "lemma1": coefficients of -log E equal theta
  compositions,        ///< "th1": composition sum equals p_{-r}(n)
  compositions_theta,  ///< "th1-printed": same with leading term theta(n)
  bell_colored,        ///< "lemma2": Bell sum at j!theta(j) equals p_{-r}(n)
  bell_theta,          ///< "lemma3": Bell sum at j!p(j) equals theta(n)
  bell_alternating,    ///< "lemma4": B(n,k) at j!p(j) equals the alternating p_{-r} sum
  sigma_inversion,     ///< "th2": sigma(n) from the p_{-r}(n) column
  harmonic_binomial,   ///< "binom-sum"
};

struct IdentityInfo {
  Identity id;
  std::string_view name;
  unsigned max_n_guard;
  bool uses_colours;
  unsigned min_n;
};

inline constexpr unsigned kMaxColourGuard = 1000;

inline constexpr std::array<IdentityInfo, 8> kIdentities{{
    {Identity::log_euler, "lemma1", 1000, false, 1},
    {Identity::compositions, "th1", kCompositionGuard, true, 2},
    {Identity::compositions_theta, "th1-printed", kCompositionGuard, true, 2},
    {Identity::bell_colored, "lemma2", 400, true, 1},
    {Identity::bell_theta, "lemma3", 200, false, 1},
    {Identity::bell_alternating, "lemma4", 150, false, 1},
    {Identity::sigma_inversion, "th2", 600, false, 1},
    {Identity::harmonic_binomial, "binom-sum", 2000, false, 1},
}};

inline const IdentityInfo& identity_info(Identity id) {
  for (const auto& info : kIdentities) {
    if (info.id == id) return info;
  }
  throw std::logic_error("unregistered identity");
}

inline std::string_view identity_name(Identity id) { return identity_info(id).name; }

inline std::optional<Identity> parse_identity(std::string_view name) {
  for (const auto& info : kIdentities) {
    if (info.name == name) return info.id;
  }
  return std::nullopt;
}

/// Sweep bounds. Colour counts are 1..max_r unless `r_values` is non-empty.
struct SweepBounds {
  unsigned max_n = 1;
  unsigned max_r = 1;
  std::vector<unsigned> r_values;
};

struct Counterexample {
  std::vector<std::pair<std::string, unsigned>> params;
  ExactRat expected;
  ExactRat actual;
};

struct VerificationReport {
  std::string identity;
  std::string range;
  std::size_t checked = 0;
  std::vector<Counterexample> failures;
  double elapsed_ms = 0.0;

  bool passed() const noexcept { return failures.empty(); }
};

namespace detail {

inline std::vector<unsigned> colour_set(const SweepBounds& bounds) {
  if (!bounds.r_values.empty()) return bounds.r_values;
  std::vector<unsigned> out;
  for (unsigned r = 1; r <= bounds.max_r; ++r) out.push_back(r);
  return out;
}

inline std::string describe_colours(const SweepBounds& bounds) {
  if (bounds.r_values.empty()) return "r=1.." + std::to_string(bounds.max_r);
  std::string out = "r={";
  for (std::size_t i = 0; i < bounds.r_values.size(); ++i) {
    if (i != 0) out += ',';
    out += std::to_string(bounds.r_values[i]);
  }
  return out + "}";
}

class Recorder {
 public:
  explicit Recorder(VerificationReport& report) : report_(report) {}

  void check(std::vector<std::pair<std::string, unsigned>> params, const ExactRat& expected, const ExactRat& actual) {
    ++report_.checked;
    if (expected != actual) report_.failures.push_back({std::move(params), expected, actual});
  }

 private:
  VerificationReport& report_;
};

}  // namespace detail

/// Checks one identity at every point of the sweep and collects every
/// counterexample, ordered by parameter tuple.
///
/// Throws std::invalid_argument for empty bounds and guard_error when
/// max_n exceeds the identity's guard.
inline VerificationReport verify_range(Identity id, const SweepBounds& bounds) {
  const IdentityInfo& info = identity_info(id);
  if (bounds.max_n == 0) {
    throw std::invalid_argument("verify " + std::string(info.name) + ": max-n must be >= 1");
  }
  if (bounds.max_n < info.min_n) {
    throw std::invalid_argument("verify " + std::string(info.name) + ": max-n must be >= " + std::to_string(info.min_n));
  }
  if (bounds.max_n > info.max_n_guard) {
    throw guard_error("verify " + std::string(info.name) + ": max-n " + std::to_string(bounds.max_n) +
                      " exceeds the limit " + std::to_string(info.max_n_guard));
  }
  const std::vector<unsigned> colours = detail::colour_set(bounds);
  if (info.uses_colours) {
    if (colours.empty()) {
      throw std::invalid_argument("verify " + std::string(info.name) + ": max-r must be >= 1");
    }
    for (unsigned r : colours) {
      if (r == 0 || r > kMaxColourGuard) {
        throw guard_error("verify " + std::string(info.name) + ": colour counts must lie in 1..1000");
      }
    }
  }

  const auto start = std::chrono::steady_clock::now();
  VerificationReport report;
  report.identity = std::string(info.name);
  const unsigned max_n = bounds.max_n;
  const std::string n_range = "n=" + std::to_string(info.min_n) + ".." + std::to_string(max_n);
  if (info.uses_colours) {
    report.range = n_range + ";" + detail::describe_colours(bounds);
  } else if (id == Identity::bell_alternating) {
    report.range = "1<=k<=n<=" + std::to_string(max_n);
  } else if (id == Identity::harmonic_binomial) {
    report.range = "1<=r<=n<=" + std::to_string(max_n);
  } else {
    report.range = n_range;
  }
  detail::Recorder rec(report);

  switch (id) {
    case Identity::log_euler: {
      const TruncatedSeries series = neg_log_euler(max_n);
      const SigmaTable sig(max_n);
      for (unsigned n = 1; n <= max_n; ++n) rec.check({{"n", n}}, sig.theta(n), series[n]);
      break;
    }
    case Identity::compositions:
    case Identity::compositions_theta: {
      const LeadingTerm lead = id == Identity::compositions ? LeadingTerm::r_theta : LeadingTerm::theta;
      std::vector<std::vector<ExactInt>> truth;
      for (unsigned r : colours) truth.push_back(p_color_series(r, max_n));
      // Ordered by (n, r).
      for (unsigned n = 2; n <= max_n; ++n) {
        for (std::size_t i = 0; i < colours.size(); ++i) {
          rec.check({{"n", n}, {"r", colours[i]}}, ExactRat(truth[i][n]),
                    colored_count_by_compositions(n, colours[i], lead));
        }
      }
      break;
    }
    case Identity::bell_colored: {
      std::vector<std::vector<ExactInt>> truth;
      for (unsigned r : colours) truth.push_back(p_color_series(r, max_n));
      ColoredCountByBell eval(max_n);
      for (unsigned n = 1; n <= max_n; ++n) {
        for (std::size_t i = 0; i < colours.size(); ++i) {
          rec.check({{"n", n}, {"r", colours[i]}}, ExactRat(truth[i][n]), eval(n, colours[i]));
        }
      }
      break;
    }
    case Identity::bell_theta: {
      const SigmaTable sig(max_n);
      PartitionBell eval(max_n);
      for (unsigned n = 1; n <= max_n; ++n) rec.check({{"n", n}}, sig.theta(n), eval.theta(n));
      break;
    }
    case Identity::bell_alternating: {
      PartitionBell bell(max_n);
      const PartitionTable table = p_color_table(max_n);
      for (unsigned n = 1; n <= max_n; ++n) {
        for (unsigned k = 1; k <= n; ++k) {
          const IdentitySides sides = bell_partition_sides(n, k, bell, table);
          rec.check({{"n", n}, {"k", k}}, sides.rhs, sides.lhs);
        }
      }
      break;
    }
    case Identity::sigma_inversion: {
      const PartitionTable table = p_color_table(max_n);
      const SigmaTable sig(max_n);
      for (unsigned n = 1; n <= max_n; ++n) rec.check({{"n", n}}, ExactRat(sig[n]), sigma_by_colored_counts(n, table));
      break;
    }
    case Identity::harmonic_binomial: {
      for (unsigned n = 1; n <= max_n; ++n) {
        for (unsigned r = 1; r <= n; ++r) {
          const IdentitySides sides = harmonic_binomial_sides(n, r);
          rec.check({{"n", n}, {"r", r}}, sides.rhs, sides.lhs);
        }
      }
      break;
    }
  }

  report.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return report;
}

}  // namespace colorpart

#endif  // COLORPART_IDENTITIES_HPP
