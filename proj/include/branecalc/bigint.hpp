#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace branecalc {

// Signed arbitrary-precision integer, sign plus little-endian base-2^32
// magnitude. Small values stay single-limb, which keeps the cyclic-ring
// convolutions cheap; nothing here is tuned beyond that.
class BigInt {
 public:
  BigInt() = default;
  BigInt(long long value);  // NOLINT: implicit by design, mirrors int literals
  static BigInt from_string(std::string_view text);

  bool is_zero() const { return sign_ == 0; }
  bool is_negative() const { return sign_ < 0; }
  bool is_one() const;
  int sign() const { return sign_; }

  BigInt operator-() const;
  BigInt abs() const;

  BigInt& operator+=(const BigInt& rhs);
  BigInt& operator-=(const BigInt& rhs);
  BigInt& operator*=(const BigInt& rhs);

  friend BigInt operator+(BigInt lhs, const BigInt& rhs) { return lhs += rhs; }
  friend BigInt operator-(BigInt lhs, const BigInt& rhs) { return lhs -= rhs; }
  friend BigInt operator*(const BigInt& lhs, const BigInt& rhs);

  // *this += a * b without building the product as a named temporary at call
  // sites; this is the convolution inner loop.
  void add_mul(const BigInt& a, const BigInt& b);

  // Truncated division (quotient rounds toward zero, remainder takes the
  // dividend's sign). Division by zero throws.
  static void divmod(const BigInt& num, const BigInt& den, BigInt& quot,
                     BigInt& rem);
  BigInt operator/(const BigInt& rhs) const;
  BigInt operator%(const BigInt& rhs) const;

  static BigInt gcd(BigInt a, BigInt b);  // nonnegative result

  // -1, 0, +1
  static int compare(const BigInt& a, const BigInt& b);
  friend bool operator==(const BigInt& a, const BigInt& b) {
    return compare(a, b) == 0;
  }
  friend bool operator!=(const BigInt& a, const BigInt& b) {
    return compare(a, b) != 0;
  }
  friend bool operator<(const BigInt& a, const BigInt& b) {
    return compare(a, b) < 0;
  }
  friend bool operator<=(const BigInt& a, const BigInt& b) {
    return compare(a, b) <= 0;
  }
  friend bool operator>(const BigInt& a, const BigInt& b) {
    return compare(a, b) > 0;
  }
  friend bool operator>=(const BigInt& a, const BigInt& b) {
    return compare(a, b) >= 0;
  }

  std::string str() const;
  bool fits_int64() const;
  long long to_int64() const;  // throws ConstraintError if out of range

  friend std::ostream& operator<<(std::ostream& os, const BigInt& v);

 private:
  int sign_ = 0;
  std::vector<std::uint32_t> mag_;

  void trim();
  static int compare_mag(const std::vector<std::uint32_t>& a,
                         const std::vector<std::uint32_t>& b);
  static void add_mag(std::vector<std::uint32_t>& a,
                      const std::vector<std::uint32_t>& b);
  // a -= b, requires a >= b
  static void sub_mag(std::vector<std::uint32_t>& a,
                      const std::vector<std::uint32_t>& b);
  static std::vector<std::uint32_t> mul_mag(
      const std::vector<std::uint32_t>& a,
      const std::vector<std::uint32_t>& b);
  static std::uint32_t divmod_small(std::vector<std::uint32_t>& mag,
                                    std::uint32_t d);
  static void divmod_mag(const std::vector<std::uint32_t>& num,
                         const std::vector<std::uint32_t>& den,
                         std::vector<std::uint32_t>& quot,
                         std::vector<std::uint32_t>& rem);
};

}  // namespace branecalc
