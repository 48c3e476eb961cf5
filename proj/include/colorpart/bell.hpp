#ifndef COLORPART_BELL_HPP
#define COLORPART_BELL_HPP

#include <algorithm>
#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "colorpart/compositions.hpp"
#include "colorpart/errors.hpp"
#include "colorpart/exact.hpp"

namespace colorpart {

/// Evaluation point x1, x2, ..., xm for partial Bell polynomials.
/// B(n,k) reads x1..x(n-k+1); anything past that is ignored.
class BellArgs {
 public:
  BellArgs() = default;
  explicit BellArgs(std::vector<ExactRat> xs) : xs_(std::move(xs)) {}

  std::size_t size() const noexcept { return xs_.size(); }

  /// 1-based.
  const ExactRat& x(std::size_t i) const { return xs_.at(i - 1); }

  std::span<const ExactRat> values() const noexcept { return xs_; }

  /// Throws std::invalid_argument when B(n,k) needs more variables than held.
  void require_for(unsigned n, unsigned k) const {
    if (k == 0 || k > n) return;
    const std::size_t needed = n - k + 1;
    if (xs_.size() < needed) {
      throw std::invalid_argument("B(" + std::to_string(n) + "," + std::to_string(k) + ") needs " +
                                  std::to_string(needed) + " variables, got " + std::to_string(xs_.size()));
    }
  }

 private:
  std::vector<ExactRat> xs_;
};

inline constexpr unsigned kBellDefinitionGuard = 20;

namespace detail {

inline std::optional<ExactRat> bell_boundary(unsigned n, unsigned k) {
  if (k == 0) return ExactRat(n == 0 ? 1 : 0);
  if (k > n) return ExactRat(0);
  return std::nullopt;
}

}  // namespace detail

/// B(n,k) straight from the multiplicity sum: over all (l1, l2, ...) with
/// sum i*li = n and sum li = k, add n!/prod(li!) * prod (xi/i!)^li.
/// Guarded to n <= 20.
inline ExactRat bell_definition(unsigned n, unsigned k, const BellArgs& xs) {
  if (n > kBellDefinitionGuard) {
    throw guard_error("bell_definition: enumeration limited to n <= 20");
  }
  if (auto b = detail::bell_boundary(n, k)) return *b;
  xs.require_for(n, k);

  const unsigned top = n - k + 1;
  std::vector<ExactRat> scaled(top + 1);
  for (unsigned i = 1; i <= top; ++i) scaled[i] = xs.x(i) / ExactRat(factorial(i));
  const ExactRat n_fact(factorial(n));

  // Partitions of n into exactly k parts, largest part first; multiplicities
  // are collected in `mult`.
  ExactRat total;
  std::vector<unsigned> mult(top + 1, 0);
  std::function<void(unsigned, unsigned, unsigned)> place = [&](unsigned remaining, unsigned parts_left,
                                                                unsigned largest) {
    if (parts_left == 0) {
      if (remaining != 0) return;
      ExactRat term = n_fact;
      for (unsigned i = 1; i <= top; ++i) {
        if (mult[i] == 0) continue;
        term /= ExactRat(factorial(mult[i]));
        term *= pow(scaled[i], mult[i]);
      }
      total += term;
      return;
    }
    if (remaining < parts_left) return;
    // The remaining parts are each >= 1 and <= part.
    for (unsigned part = std::min(largest, remaining - (parts_left - 1)); part >= 1; --part) {
      if (static_cast<unsigned long long>(part) * parts_left < remaining) break;
      ++mult[part];
      place(remaining - part, parts_left - 1, part);
      --mult[part];
    }
  };
  place(n, k, top);
  return total;
}

/// Memoized B(n,k) at one fixed evaluation point, via
/// B(n,k) = sum_{i=1}^{n-k+1} C(n-1, i-1) * xi * B(n-i, k-1).
///
/// Not safe for concurrent use; give each thread its own evaluator.
class BellRecurrence {
 public:
  explicit BellRecurrence(BellArgs xs) : xs_(std::move(xs)) {}

  const BellArgs& args() const noexcept { return xs_; }

  const ExactRat& operator()(unsigned n, unsigned k) {
    xs_.require_for(n, k);
    return value(n, k);
  }

 private:
  const ExactRat& value(unsigned n, unsigned k) {
    if (memo_.size() <= n) memo_.resize(n + 1);
    auto& row = memo_[n];
    if (row.size() <= k) row.resize(k + 1);
    if (row[k]) return *row[k];

    ExactRat result;
    if (auto b = detail::bell_boundary(n, k)) {
      result = *b;
    } else {
      for (unsigned i = 1; i <= n - k + 1; ++i) {
        const ExactRat& x = xs_.x(i);
        if (x.is_zero()) continue;
        const ExactRat& rest = value(n - i, k - 1);
        if (rest.is_zero()) continue;
        result += ExactRat(binomial(n - 1, i - 1)) * x * rest;
      }
    }
    // value() may have grown memo_, so index again rather than reuse `row`.
    memo_[n][k] = std::move(result);
    return *memo_[n][k];
  }

  BellArgs xs_;
  std::vector<std::vector<std::optional<ExactRat>>> memo_;
};

inline ExactRat bell_recurrence(unsigned n, unsigned k, const BellArgs& xs) {
  BellRecurrence eval(xs);
  return eval(n, k);
}

/// B(n, m) with m = k+1 parts as a sum over compositions of n:
/// (1/m!) * sum C(n,a1) C(a1,a2) ... C(a(m-2),a(m-1)) * x(n-a1) x(a1-a2) ... x(a(m-1))
/// over n > a1 > a2 > ... > a(m-1) >= 1. For m = 1 this is the single term xn.
/// Requires 1 <= m <= n <= 25.
inline ExactRat bell_cvijovic(unsigned n, unsigned k_plus_1, const BellArgs& xs) {
  if (k_plus_1 == 0 || n < k_plus_1) {
    throw std::domain_error("bell_cvijovic: requires 1 <= k+1 <= n, got n=" + std::to_string(n) +
                            ", k+1=" + std::to_string(k_plus_1));
  }
  if (n > kCompositionGuard) {
    throw guard_error("bell_cvijovic: composition sum limited to n <= 25");
  }
  xs.require_for(n, k_plus_1);

  ExactRat total;
  fold_compositions(
      n, k_plus_1, ExactRat(1),
      [&](const ExactRat& acc, unsigned before, unsigned part) {
        return acc * ExactRat(binomial(before, before - part)) * xs.x(part);
      },
      [&](const ExactRat& term) { total += term; });
  return total / ExactRat(factorial(k_plus_1));
}

}  // namespace colorpart

#endif  // COLORPART_BELL_HPP
