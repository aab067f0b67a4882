#pragma once

#include <iosfwd>
#include <string>
#include <string_view>

#include "branecalc/bigint.hpp"

namespace branecalc {

// Exact rational number. Always normalized: positive denominator, reduced by
// gcd, zero stored as 0/1.
class Rational {
 public:
  Rational() : num_(0), den_(1) {}
  Rational(long long value) : num_(value), den_(1) {}  // NOLINT: implicit
  Rational(BigInt value) : num_(std::move(value)), den_(1) {}  // NOLINT
  Rational(BigInt numerator, BigInt denominator);
  static Rational from_string(std::string_view text);  // "p/q" or "n"

  const BigInt& num() const { return num_; }
  const BigInt& den() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_negative() const { return num_.is_negative(); }
  bool is_integer() const { return den_.is_one(); }
  int sign() const { return num_.sign(); }

  Rational operator-() const;
  Rational& operator+=(const Rational& rhs);
  Rational& operator-=(const Rational& rhs);
  Rational& operator*=(const Rational& rhs);
  Rational& operator/=(const Rational& rhs);  // throws on zero divisor

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  static int compare(const Rational& a, const Rational& b);
  friend bool operator==(const Rational& a, const Rational& b) {
    return compare(a, b) == 0;
  }
  friend bool operator!=(const Rational& a, const Rational& b) {
    return compare(a, b) != 0;
  }
  friend bool operator<(const Rational& a, const Rational& b) {
    return compare(a, b) < 0;
  }
  friend bool operator<=(const Rational& a, const Rational& b) {
    return compare(a, b) <= 0;
  }
  friend bool operator>(const Rational& a, const Rational& b) {
    return compare(a, b) > 0;
  }
  friend bool operator>=(const Rational& a, const Rational& b) {
    return compare(a, b) >= 0;
  }

  // "p/q" when den != 1, plain integer otherwise
  std::string str() const;
  double to_double() const;

  friend std::ostream& operator<<(std::ostream& os, const Rational& v);

 private:
  BigInt num_;
  BigInt den_;
  void normalize();
};

}  // namespace branecalc
