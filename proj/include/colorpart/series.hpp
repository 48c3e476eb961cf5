#ifndef COLORPART_SERIES_HPP
#define COLORPART_SERIES_HPP

#include <algorithm>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "colorpart/exact.hpp"

namespace colorpart {

/// Formal power series over ExactRat truncated after q^cutoff.
///
/// Binary operations on series with different cutoffs truncate to the
/// smaller cutoff.
class TruncatedSeries {
 public:
  /// The zero series with the given cutoff.
  explicit TruncatedSeries(std::size_t cutoff) : coeffs_(cutoff + 1) {}

  /// Takes coefficients c0..cN; the cutoff is N. An empty vector is invalid.
  explicit TruncatedSeries(std::vector<ExactRat> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) {
      throw std::invalid_argument("a truncated series needs at least the constant coefficient");
    }
  }

  static TruncatedSeries constant(const ExactRat& c, std::size_t cutoff) {
    TruncatedSeries out(cutoff);
    out.coeffs_[0] = c;
    return out;
  }

  static TruncatedSeries one(std::size_t cutoff) { return constant(ExactRat(1), cutoff); }

  std::size_t cutoff() const noexcept { return coeffs_.size() - 1; }

  const ExactRat& operator[](std::size_t n) const { return coeffs_.at(n); }
  ExactRat& operator[](std::size_t n) { return coeffs_.at(n); }

  std::span<const ExactRat> coeffs() const noexcept { return coeffs_; }

  TruncatedSeries truncated(std::size_t cutoff) const {
    if (cutoff >= this->cutoff()) return *this;
    return TruncatedSeries(std::vector<ExactRat>(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(cutoff) + 1));
  }

  TruncatedSeries operator-() const {
    TruncatedSeries out(cutoff());
    for (std::size_t n = 0; n < coeffs_.size(); ++n) out.coeffs_[n] = -coeffs_[n];
    return out;
  }

  friend TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) {
    TruncatedSeries out(std::min(a.cutoff(), b.cutoff()));
    for (std::size_t n = 0; n <= out.cutoff(); ++n) out.coeffs_[n] = a.coeffs_[n] + b.coeffs_[n];
    return out;
  }

  friend TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b) { return a + (-b); }

  friend TruncatedSeries operator*(const ExactRat& c, const TruncatedSeries& a) {
    TruncatedSeries out(a.cutoff());
    for (std::size_t n = 0; n <= a.cutoff(); ++n) out.coeffs_[n] = c * a.coeffs_[n];
    return out;
  }

  friend bool operator==(const TruncatedSeries&, const TruncatedSeries&) = default;

 private:
  std::vector<ExactRat> coeffs_;
};

/// Cauchy product, truncated to the smaller cutoff.
inline TruncatedSeries series_mul(const TruncatedSeries& a, const TruncatedSeries& b) {
  const std::size_t cutoff = std::min(a.cutoff(), b.cutoff());
  TruncatedSeries out(cutoff);
  for (std::size_t i = 0; i <= cutoff; ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; i + j <= cutoff; ++j) {
      if (b[j].is_zero()) continue;
      out[i + j] += a[i] * b[j];
    }
  }
  return out;
}

inline TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) { return series_mul(a, b); }

/// Multiplicative inverse. Throws std::domain_error when a0 == 0.
inline TruncatedSeries series_inv(const TruncatedSeries& a) {
  if (a[0].is_zero()) {
    throw std::domain_error("series_inv: constant term is zero");
  }
  const std::size_t cutoff = a.cutoff();
  const ExactRat inv_a0 = reciprocal(a[0]);
  TruncatedSeries out(cutoff);
  out[0] = inv_a0;
  for (std::size_t n = 1; n <= cutoff; ++n) {
    ExactRat acc;
    for (std::size_t k = 1; k <= n; ++k) {
      if (!a[k].is_zero()) acc += a[k] * out[n - k];
    }
    out[n] = -(inv_a0 * acc);
  }
  return out;
}

/// Formal derivative; the result has cutoff one less (zero series for cutoff 0).
inline TruncatedSeries series_derivative(const TruncatedSeries& a) {
  if (a.cutoff() == 0) return TruncatedSeries(0);
  TruncatedSeries out(a.cutoff() - 1);
  for (std::size_t n = 0; n < a.cutoff(); ++n) out[n] = ExactRat(n + 1) * a[n + 1];
  return out;
}

/// Formal antiderivative with zero constant term; cutoff grows by one.
inline TruncatedSeries series_integral(const TruncatedSeries& a) {
  TruncatedSeries out(a.cutoff() + 1);
  for (std::size_t n = 0; n <= a.cutoff(); ++n) out[n + 1] = a[n] / ExactRat(n + 1);
  return out;
}

/// Formal logarithm through (log a)' = a'/a. Requires a0 == 1.
inline TruncatedSeries series_log(const TruncatedSeries& a) {
  if (a[0] != ExactRat(1)) {
    throw std::domain_error("series_log: constant term must be 1");
  }
  if (a.cutoff() == 0) return TruncatedSeries(0);
  const TruncatedSeries quotient = series_mul(series_derivative(a), series_inv(a.truncated(a.cutoff() - 1)));
  return series_integral(quotient);
}

/// Formal exponential. Requires a0 == 0. Uses n*b_n = sum_k k*a_k*b_{n-k},
/// which is b' = a'b read coefficientwise.
inline TruncatedSeries series_exp(const TruncatedSeries& a) {
  if (!a[0].is_zero()) {
    throw std::domain_error("series_exp: constant term must be 0");
  }
  const std::size_t cutoff = a.cutoff();
  TruncatedSeries out(cutoff);
  out[0] = ExactRat(1);
  for (std::size_t n = 1; n <= cutoff; ++n) {
    ExactRat acc;
    for (std::size_t k = 1; k <= n; ++k) {
      if (!a[k].is_zero()) acc += ExactRat(k) * a[k] * out[n - k];
    }
    out[n] = acc / ExactRat(n);
  }
  return out;
}

/// Integer power by repeated squaring; negative exponents invert first.
inline TruncatedSeries series_pow(const TruncatedSeries& a, long long exponent) {
  TruncatedSeries base = exponent < 0 ? series_inv(a) : a;
  unsigned long long e = exponent < 0 ? 0ULL - static_cast<unsigned long long>(exponent)
                                      : static_cast<unsigned long long>(exponent);
  TruncatedSeries out = TruncatedSeries::one(a.cutoff());
  while (e != 0) {
    if (e & 1ULL) out = series_mul(out, base);
    e >>= 1ULL;
    if (e != 0) base = series_mul(base, base);
  }
  return out;
}

/// prod_{j=1}^{cutoff} (1 - q^j), truncated after q^cutoff.
inline TruncatedSeries euler_E(std::size_t cutoff) {
  // Multiply in the factors one at a time on integers; each factor only
  // subtracts a shifted copy.
  std::vector<ExactInt> c(cutoff + 1);
  c[0] = 1;
  for (std::size_t j = 1; j <= cutoff; ++j) {
    for (std::size_t n = cutoff; n >= j; --n) {
      if (c[n - j] != 0) c[n] -= c[n - j];
    }
  }
  std::vector<ExactRat> coeffs;
  coeffs.reserve(cutoff + 1);
  for (auto& v : c) coeffs.emplace_back(std::move(v));
  return TruncatedSeries(std::move(coeffs));
}

}  // namespace colorpart

#endif  // COLORPART_SERIES_HPP
