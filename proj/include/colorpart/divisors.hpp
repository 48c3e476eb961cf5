#ifndef COLORPART_DIVISORS_HPP
#define COLORPART_DIVISORS_HPP

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "colorpart/exact.hpp"

namespace colorpart {

/// sigma(n), the sum of the positive divisors of n, by trial division up to
/// sqrt(n) with paired divisors. Throws std::domain_error for n == 0.
inline ExactInt sigma(std::uint64_t n) {
  if (n == 0) {
    throw std::domain_error("sigma is defined for n >= 1");
  }
  ExactInt total = 0;
  for (std::uint64_t d = 1; d <= n / d; ++d) {
    if (n % d != 0) continue;
    total += d;
    const std::uint64_t pair = n / d;
    if (pair != d) total += pair;
  }
  return total;
}

/// sigma(1..limit), filled by adding each d to all of its multiples.
class SigmaTable {
 public:
  explicit SigmaTable(std::uint64_t limit) : values_(limit + 1, ExactInt(0)) {
    if (limit == 0) {
      throw std::domain_error("sigma table needs limit >= 1");
    }
    for (std::uint64_t d = 1; d <= limit; ++d) {
      for (std::uint64_t m = d; m <= limit; m += d) values_[m] += d;
    }
  }

  std::uint64_t limit() const noexcept { return values_.size() - 1; }

  /// 1-based; throws std::out_of_range outside 1..limit.
  const ExactInt& operator[](std::uint64_t n) const {
    if (n == 0 || n > limit()) {
      throw std::out_of_range("sigma table index " + std::to_string(n) + " outside 1.." + std::to_string(limit()));
    }
    return values_[n];
  }

  /// sigma(n)/n in lowest terms.
  ExactRat theta(std::uint64_t n) const { return ExactRat((*this)[n], ExactInt(n)); }

  /// Entries 1..limit.
  std::span<const ExactInt> values() const noexcept { return std::span<const ExactInt>(values_).subspan(1); }

 private:
  std::vector<ExactInt> values_;
};

inline SigmaTable sigma_sieve(std::uint64_t limit) { return SigmaTable(limit); }

/// theta(n) = sigma(n)/n. Throws std::domain_error for n == 0.
inline ExactRat theta(std::uint64_t n) { return ExactRat(sigma(n), ExactInt(n)); }

/// theta(1..limit) as a vector indexed 0..limit; entry 0 is unused and zero.
inline std::vector<ExactRat> theta_values(std::uint64_t limit) {
  std::vector<ExactRat> out(limit + 1);
  if (limit == 0) return out;
  const SigmaTable table(limit);
  for (std::uint64_t n = 1; n <= limit; ++n) out[n] = table.theta(n);
  return out;
}

}  // namespace colorpart

#endif  // COLORPART_DIVISORS_HPP
