#ifndef COLORPART_EXACT_HPP
#define COLORPART_EXACT_HPP

#include <compare>
#include <concepts>
#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

#include <boost/multiprecision/cpp_int.hpp>

#include "colorpart/errors.hpp"

namespace colorpart {

/// Arbitrary-precision signed integer.
using ExactInt = boost::multiprecision::cpp_int;

/// Arbitrary-precision rational, always held in lowest terms with a
/// strictly positive denominator. Zero is 0/1.
class ExactRat {
 public:
  ExactRat() : num_(0), den_(1) {}
  ExactRat(ExactInt value) : num_(std::move(value)), den_(1) {}  // NOLINT
  template <std::integral T>
  ExactRat(T value) : num_(value), den_(1) {}  // NOLINT

  /// Builds num/den and reduces it. Throws std::domain_error on den == 0.
  ExactRat(ExactInt num, ExactInt den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_ == 0) {
      throw std::domain_error("rational with zero denominator");
    }
    normalize();
  }

  const ExactInt& num() const noexcept { return num_; }
  const ExactInt& den() const noexcept { return den_; }

  bool is_integer() const noexcept { return den_ == 1; }
  bool is_zero() const noexcept { return num_ == 0; }
  int sign() const noexcept { return num_.sign(); }

  ExactRat operator-() const {
    ExactRat out;
    out.num_ = -num_;
    out.den_ = den_;
    return out;
  }

  ExactRat& operator+=(const ExactRat& rhs) { return *this = add(*this, rhs, false); }
  ExactRat& operator-=(const ExactRat& rhs) { return *this = add(*this, rhs, true); }
  ExactRat& operator*=(const ExactRat& rhs) { return *this = mul(*this, rhs); }
  ExactRat& operator/=(const ExactRat& rhs) { return *this = mul(*this, reciprocal(rhs)); }

  friend ExactRat operator+(const ExactRat& a, const ExactRat& b) { return add(a, b, false); }
  friend ExactRat operator-(const ExactRat& a, const ExactRat& b) { return add(a, b, true); }
  friend ExactRat operator*(const ExactRat& a, const ExactRat& b) { return mul(a, b); }
  friend ExactRat operator/(const ExactRat& a, const ExactRat& b) { return mul(a, reciprocal(b)); }

  friend bool operator==(const ExactRat& a, const ExactRat& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend std::strong_ordering operator<=>(const ExactRat& a, const ExactRat& b) {
    const ExactInt lhs = a.num_ * b.den_;
    const ExactInt rhs = b.num_ * a.den_;
    if (lhs < rhs) return std::strong_ordering::less;
    if (lhs > rhs) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  /// Throws std::domain_error for zero.
  friend ExactRat reciprocal(const ExactRat& q) {
    if (q.num_ == 0) {
      throw std::domain_error("reciprocal of zero");
    }
    ExactRat out;
    out.num_ = q.den_;
    out.den_ = q.num_;
    if (out.den_ < 0) {
      out.num_ = -out.num_;
      out.den_ = -out.den_;
    }
    return out;
  }

 private:
  struct Reduced {};
  ExactRat(ExactInt num, ExactInt den, Reduced) : num_(std::move(num)), den_(std::move(den)) {}

  void normalize() {
    if (den_ < 0) {
      num_ = -num_;
      den_ = -den_;
    }
    if (num_ == 0) {
      den_ = 1;
      return;
    }
    if (den_ == 1) return;
    ExactInt g = gcd(num_, den_);
    if (g != 1) {
      num_ /= g;
      den_ /= g;
    }
  }

  // Reduction keeps intermediate gcds small: only the common part of the
  // denominators can survive into the numerator.
  static ExactRat add(const ExactRat& a, const ExactRat& b, bool subtract) {
    if (a.den_ == 1 && b.den_ == 1) {
      return ExactRat(subtract ? ExactInt(a.num_ - b.num_) : ExactInt(a.num_ + b.num_), 1, Reduced{});
    }
    ExactInt g = gcd(a.den_, b.den_);
    if (g == 1) {
      ExactInt t = subtract ? ExactInt(a.num_ * b.den_ - b.num_ * a.den_)
                            : ExactInt(a.num_ * b.den_ + b.num_ * a.den_);
      if (t == 0) return ExactRat();
      return ExactRat(std::move(t), a.den_ * b.den_, Reduced{});
    }
    ExactInt a_scale = b.den_ / g;
    ExactInt b_scale = a.den_ / g;
    ExactInt t = subtract ? ExactInt(a.num_ * a_scale - b.num_ * b_scale)
                          : ExactInt(a.num_ * a_scale + b.num_ * b_scale);
    if (t == 0) return ExactRat();
    ExactInt g2 = gcd(t, g);
    if (g2 != 1) {
      t /= g2;
      return ExactRat(std::move(t), b_scale * (b.den_ / g2), Reduced{});
    }
    return ExactRat(std::move(t), b_scale * b.den_, Reduced{});
  }

  static ExactRat mul(const ExactRat& a, const ExactRat& b) {
    if (a.num_ == 0 || b.num_ == 0) return ExactRat();
    if (a.den_ == 1 && b.den_ == 1) {
      return ExactRat(a.num_ * b.num_, 1, Reduced{});
    }
    ExactInt g1 = gcd(a.num_, b.den_);
    ExactInt g2 = gcd(b.num_, a.den_);
    return ExactRat((a.num_ / g1) * (b.num_ / g2), (a.den_ / g2) * (b.den_ / g1), Reduced{});
  }

  ExactInt num_;
  ExactInt den_;
};

/// Canonical constructor. Zero denominator throws std::domain_error.
inline ExactRat make_rat(ExactInt num, ExactInt den) { return ExactRat(std::move(num), std::move(den)); }

/// "a/b" when b > 1, "a" when b == 1.
inline std::string rat_render(const ExactRat& q) {
  std::string out = q.num().str();
  if (!q.is_integer()) {
    out += '/';
    out += q.den().str();
  }
  return out;
}

inline std::ostream& operator<<(std::ostream& os, const ExactRat& q) { return os << rat_render(q); }

namespace detail {

inline bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (c < '0' || c > '9') return false;
  }
  return true;
}

}  // namespace detail

/// Parses the rat_render form: optional '-', digits, optionally '/' and a
/// positive digit string. Non-reduced input such as "6/4" is accepted and
/// reduced. Anything else throws std::invalid_argument.
inline ExactRat rat_parse(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && body.front() == '-') {
    negative = true;
    body.remove_prefix(1);
  }
  const auto slash = body.find('/');
  const std::string_view num_text = body.substr(0, slash);
  const std::string_view den_text = slash == std::string_view::npos ? std::string_view("1") : body.substr(slash + 1);
  if (!detail::all_digits(num_text) || !detail::all_digits(den_text)) {
    throw std::invalid_argument("malformed rational: '" + std::string(text) + "'");
  }
  ExactInt num{std::string(num_text)};
  ExactInt den{std::string(den_text)};
  if (den == 0) {
    throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
  }
  if (negative) num = -num;
  return ExactRat(std::move(num), std::move(den));
}

/// n!
inline ExactInt factorial(std::uint64_t n) {
  ExactInt out = 1;
  for (std::uint64_t i = 2; i <= n; ++i) out *= i;
  return out;
}

/// C(n, k), zero for k > n.
inline ExactInt binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  ExactInt out = 1;
  // Each partial product out * (n-k+i) / i is itself a binomial coefficient.
  for (std::uint64_t i = 1; i <= k; ++i) {
    out *= n - k + i;
    out /= i;
  }
  return out;
}

inline ExactRat pow(const ExactRat& base, unsigned exponent) {
  ExactRat out(1);
  ExactRat b = base;
  while (exponent != 0) {
    if (exponent & 1U) out *= b;
    exponent >>= 1U;
    if (exponent != 0) b *= b;
  }
  return out;
}

}  // namespace colorpart

#endif  // COLORPART_EXACT_HPP
