#ifndef COLORPART_PARTITIONS_HPP
#define COLORPART_PARTITIONS_HPP

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "colorpart/divisors.hpp"
#include "colorpart/errors.hpp"
#include "colorpart/exact.hpp"
#include "colorpart/series.hpp"

namespace colorpart {

namespace detail {

inline std::vector<ExactInt> integer_coefficients(const TruncatedSeries& s, const char* what) {
  std::vector<ExactInt> out;
  out.reserve(s.cutoff() + 1);
  for (std::size_t n = 0; n <= s.cutoff(); ++n) {
    if (!s[n].is_integer()) {
      throw consistency_error(std::string(what) + ": coefficient " + std::to_string(n) + " is " + rat_render(s[n]) +
                              ", expected an integer");
    }
    out.push_back(s[n].num());
  }
  return out;
}

// Truncated Cauchy product of two integer sequences of equal length.
inline std::vector<ExactInt> convolve(std::span<const ExactInt> a, std::span<const ExactInt> b) {
  std::vector<ExactInt> out(a.size(), ExactInt(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; i + j < out.size(); ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

}  // namespace detail

/// p(0..max_n), read off 1/E(q).
inline std::vector<ExactInt> partition_p(std::size_t max_n) {
  return detail::integer_coefficients(series_inv(euler_E(max_n)), "partition_p");
}

/// p_{-r}(0..max_n) as the coefficients of E(q)^{-r}.
inline std::vector<ExactInt> p_color_series(unsigned r, std::size_t max_n) {
  if (r == 0) {
    throw std::domain_error("p_color_series: r must be >= 1");
  }
  return detail::integer_coefficients(series_pow(euler_E(max_n), -static_cast<long long>(r)), "p_color_series");
}

/// p_{-r}(0..max_n) from n*p_{-r}(n) = r * sum_{k=1}^{n} sigma(k)*p_{-r}(n-k).
///
/// The recurrence is the coefficient form of F' = F * (r * sum sigma(k) q^{k-1})
/// for F = E^{-r}, obtained by differentiating log F = r * (-log E) and using
/// -log E = sum sigma(n)/n q^n. Every division by n must be exact.
inline std::vector<ExactInt> p_color_recurrence(unsigned r, std::size_t max_n) {
  if (r == 0) {
    throw std::domain_error("p_color_recurrence: r must be >= 1");
  }
  std::vector<ExactInt> p(max_n + 1, ExactInt(0));
  p[0] = 1;
  if (max_n == 0) return p;
  const SigmaTable sig(max_n);
  for (std::size_t n = 1; n <= max_n; ++n) {
    ExactInt acc = 0;
    for (std::size_t k = 1; k <= n; ++k) acc += sig[k] * p[n - k];
    acc *= r;
    ExactInt rem;
    boost::multiprecision::divide_qr(acc, ExactInt(n), p[n], rem);
    if (rem != 0) {
      throw consistency_error("p_color_recurrence: inexact division at n=" + std::to_string(n));
    }
  }
  return p;
}

/// p_{-r}(n) for r = 1..max_colour and n = 0..max_n, stored r-major.
class PartitionTable {
 public:
  PartitionTable(std::size_t max_n, unsigned max_colour) : max_n_(max_n), max_colour_(max_colour) {
    rows_.reserve(max_colour);
    if (max_colour == 0) return;
    rows_.push_back(partition_p(max_n));
    for (unsigned r = 2; r <= max_colour; ++r) rows_.push_back(detail::convolve(rows_.back(), rows_.front()));
  }

  std::size_t max_n() const noexcept { return max_n_; }
  unsigned max_colour() const noexcept { return max_colour_; }

  const ExactInt& at(unsigned r, std::size_t n) const {
    check(r, n);
    return rows_[r - 1][n];
  }

  /// p_{-r}(0..max_n).
  std::span<const ExactInt> row(unsigned r) const {
    check(r, 0);
    return rows_[r - 1];
  }

  /// p_{-1}(n), ..., p_{-R}(n); element i holds colour count i+1.
  std::vector<ExactInt> column(std::size_t n) const {
    check(1, n);
    std::vector<ExactInt> out;
    out.reserve(max_colour_);
    for (const auto& row : rows_) out.push_back(row[n]);
    return out;
  }

 private:
  void check(unsigned r, std::size_t n) const {
    if (r == 0 || r > max_colour_ || n > max_n_) {
      throw std::out_of_range("partition table has no entry (r=" + std::to_string(r) + ", n=" + std::to_string(n) + ")");
    }
  }

  std::size_t max_n_;
  unsigned max_colour_;
  std::vector<std::vector<ExactInt>> rows_;
};

/// Table with one colour count per possible n, as needed to sum over r = 1..n.
inline PartitionTable p_color_table(std::size_t max_n) {
  return PartitionTable(max_n, static_cast<unsigned>(max_n));
}

inline PartitionTable p_color_table(std::size_t max_n, unsigned max_colour) { return PartitionTable(max_n, max_colour); }

inline constexpr unsigned kBruteForceMaxN = 25;
inline constexpr unsigned kBruteForceMaxColours = 5;
inline constexpr unsigned kMultisetEnumerationMaxN = 12;

/// Counts r-coloured partitions of n by listing every multiset of
/// (value, colour) pairs whose values sum to n. Exponential; n <= 12.
inline ExactInt count_colored_multisets(unsigned n, unsigned r) {
  if (n > kMultisetEnumerationMaxN || r == 0 || r > kBruteForceMaxColours) {
    throw guard_error("count_colored_multisets: requires n <= 12 and 1 <= r <= 5");
  }
  // Coloured parts are indexed value*r + colour; a multiset is a weakly
  // decreasing sequence of indices.
  std::uint64_t count = 0;
  std::function<void(unsigned, unsigned)> extend = [&](unsigned remaining, unsigned max_index) {
    if (remaining == 0) {
      ++count;
      return;
    }
    for (unsigned index = max_index + 1; index-- > 0;) {
      const unsigned value = index / r + 1;
      if (value <= remaining) extend(remaining - value, index);
    }
  };
  if (n == 0) return 1;
  extend(n, n * r - 1);
  return count;
}

/// Brute-force p_{-r}(n): enumerate ordinary partitions of n and, for a part
/// value of multiplicity m, count the C(r+m-1, m) multisets of colours.
/// For n <= 12 the result is also checked against count_colored_multisets.
/// Guarded to n <= 25 and r <= 5.
inline ExactInt brute_force_colored(unsigned n, unsigned r) {
  if (r == 0) {
    throw std::domain_error("brute_force_colored: r must be >= 1");
  }
  if (n > kBruteForceMaxN || r > kBruteForceMaxColours) {
    throw guard_error("brute_force_colored: oracle limited to n <= 25 and r <= 5");
  }
  ExactInt total = 0;
  std::vector<unsigned> multiplicity(n + 1, 0);
  std::function<void(unsigned, unsigned)> place = [&](unsigned remaining, unsigned largest) {
    if (remaining == 0) {
      ExactInt ways = 1;
      for (unsigned v = 1; v <= n; ++v) {
        if (multiplicity[v] != 0) ways *= binomial(r + multiplicity[v] - 1, multiplicity[v]);
      }
      total += ways;
      return;
    }
    for (unsigned part = std::min(remaining, largest); part >= 1; --part) {
      ++multiplicity[part];
      place(remaining - part, part);
      --multiplicity[part];
    }
  };
  place(n, n);
  if (n <= kMultisetEnumerationMaxN) {
    const ExactInt direct = count_colored_multisets(n, r);
    if (direct != total) {
      throw consistency_error("brute_force_colored: counting arguments disagree at n=" + std::to_string(n) +
                              ", r=" + std::to_string(r));
    }
  }
  return total;
}

}  // namespace colorpart

#endif  // COLORPART_PARTITIONS_HPP
