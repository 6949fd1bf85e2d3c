#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace zq {

/// Exact rational on 64-bit integers, always reduced, denominator > 0.
/// Formula evaluation stays in this type end to end; flooring is an explicit
/// final step, never an implicit conversion.
class Rational {
 public:
  Rational() : num_(0), den_(1) {}
  Rational(long long n) : num_(n), den_(1) {}  // NOLINT: implicit by design
  Rational(long long n, long long d) : num_(n), den_(d) {
    if (den_ == 0) throw std::domain_error("rational with zero denominator");
    normalize();
  }

  long long num() const noexcept { return num_; }
  long long den() const noexcept { return den_; }

  bool is_integer() const noexcept { return den_ == 1; }

  /// floor(num/den), exact for negative values too.
  long long floor() const noexcept {
    long long quot = num_ / den_;
    if (num_ % den_ != 0 && num_ < 0) --quot;
    return quot;
  }

  std::string str() const { return std::to_string(num_) + "/" + std::to_string(den_); }

  friend Rational operator+(const Rational& a, const Rational& b) {
    return Rational(checked(a.num_, b.den_) + checked(b.num_, a.den_), checked(a.den_, b.den_));
  }
  friend Rational operator-(const Rational& a, const Rational& b) {
    return Rational(checked(a.num_, b.den_) - checked(b.num_, a.den_), checked(a.den_, b.den_));
  }
  friend Rational operator*(const Rational& a, const Rational& b) {
    return Rational(checked(a.num_, b.num_), checked(a.den_, b.den_));
  }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.num_ == 0) throw std::domain_error("rational division by zero");
    return Rational(checked(a.num_, b.den_), checked(a.den_, b.num_));
  }

  friend bool operator==(const Rational&, const Rational&) = default;
  friend auto operator<=>(const Rational& a, const Rational& b) {
    return checked(a.num_, b.den_) <=> checked(b.num_, a.den_);
  }

 private:
  static long long checked(long long a, long long b) {
    long long out = 0;
    if (__builtin_mul_overflow(a, b, &out)) throw std::overflow_error("rational overflow");
    return out;
  }

  void normalize() {
    if (den_ < 0) {
      num_ = -num_;
      den_ = -den_;
    }
    const long long g = std::gcd(num_, den_);
    if (g > 1) {
      num_ /= g;
      den_ /= g;
    }
  }

  long long num_;
  long long den_;
};

}  // namespace zq
