#include "branecalc/bigint.hpp"

#include <algorithm>
#include <ostream>

#include "branecalc/errors.hpp"

namespace branecalc {

namespace {
constexpr std::uint64_t kBase = 1ull << 32;
}

BigInt::BigInt(long long value) {
  if (value == 0) return;
  sign_ = value > 0 ? 1 : -1;
  // avoid UB on LLONG_MIN
  std::uint64_t mag = value > 0 ? static_cast<std::uint64_t>(value)
                                : ~static_cast<std::uint64_t>(value) + 1u;
  while (mag != 0) {
    mag_.push_back(static_cast<std::uint32_t>(mag & 0xffffffffu));
    mag >>= 32;
  }
}

bool BigInt::is_one() const { return sign_ == 1 && mag_.size() == 1 && mag_[0] == 1; }

void BigInt::trim() {
  while (!mag_.empty() && mag_.back() == 0) mag_.pop_back();
  if (mag_.empty()) sign_ = 0;
}

int BigInt::compare_mag(const std::vector<std::uint32_t>& a,
                        const std::vector<std::uint32_t>& b) {
  if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
  for (std::size_t i = a.size(); i-- > 0;) {
    if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
  }
  return 0;
}

void BigInt::add_mag(std::vector<std::uint32_t>& a,
                     const std::vector<std::uint32_t>& b) {
  if (a.size() < b.size()) a.resize(b.size(), 0);
  std::uint64_t carry = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    std::uint64_t sum = carry + a[i] + (i < b.size() ? b[i] : 0u);
    a[i] = static_cast<std::uint32_t>(sum & 0xffffffffu);
    carry = sum >> 32;
  }
  if (carry != 0) a.push_back(static_cast<std::uint32_t>(carry));
}

void BigInt::sub_mag(std::vector<std::uint32_t>& a,
                     const std::vector<std::uint32_t>& b) {
  std::int64_t borrow = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    std::int64_t diff = static_cast<std::int64_t>(a[i]) - borrow -
                        (i < b.size() ? static_cast<std::int64_t>(b[i]) : 0);
    if (diff < 0) {
      diff += static_cast<std::int64_t>(kBase);
      borrow = 1;
    } else {
      borrow = 0;
    }
    a[i] = static_cast<std::uint32_t>(diff);
  }
}

std::vector<std::uint32_t> BigInt::mul_mag(
    const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b) {
  std::vector<std::uint32_t> out(a.size() + b.size(), 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    std::uint64_t carry = 0;
    for (std::size_t j = 0; j < b.size(); ++j) {
      std::uint64_t cur = out[i + j] +
                          static_cast<std::uint64_t>(a[i]) * b[j] + carry;
      out[i + j] = static_cast<std::uint32_t>(cur & 0xffffffffu);
      carry = cur >> 32;
    }
    std::size_t k = i + b.size();
    while (carry != 0) {
      std::uint64_t cur = out[k] + carry;
      out[k] = static_cast<std::uint32_t>(cur & 0xffffffffu);
      carry = cur >> 32;
      ++k;
    }
  }
  while (!out.empty() && out.back() == 0) out.pop_back();
  return out;
}

BigInt BigInt::operator-() const {
  BigInt out = *this;
  out.sign_ = -out.sign_;
  return out;
}

BigInt BigInt::abs() const {
  BigInt out = *this;
  if (out.sign_ < 0) out.sign_ = 1;
  return out;
}

BigInt& BigInt::operator+=(const BigInt& rhs) {
  if (rhs.sign_ == 0) return *this;
  if (sign_ == 0) {
    *this = rhs;
    return *this;
  }
  if (sign_ == rhs.sign_) {
    add_mag(mag_, rhs.mag_);
    return *this;
  }
  int cmp = compare_mag(mag_, rhs.mag_);
  if (cmp == 0) {
    sign_ = 0;
    mag_.clear();
  } else if (cmp > 0) {
    sub_mag(mag_, rhs.mag_);
    trim();
  } else {
    std::vector<std::uint32_t> tmp = rhs.mag_;
    sub_mag(tmp, mag_);
    mag_ = std::move(tmp);
    sign_ = rhs.sign_;
    trim();
  }
  return *this;
}

BigInt& BigInt::operator-=(const BigInt& rhs) {
  if (rhs.sign_ == 0) return *this;
  BigInt neg = rhs;
  neg.sign_ = -neg.sign_;
  return *this += neg;
}

BigInt& BigInt::operator*=(const BigInt& rhs) {
  if (sign_ == 0 || rhs.sign_ == 0) {
    sign_ = 0;
    mag_.clear();
    return *this;
  }
  // single-limb fast path
  if (mag_.size() == 1 && rhs.mag_.size() == 1) {
    std::uint64_t prod = static_cast<std::uint64_t>(mag_[0]) * rhs.mag_[0];
    mag_[0] = static_cast<std::uint32_t>(prod & 0xffffffffu);
    if (prod >> 32) mag_.push_back(static_cast<std::uint32_t>(prod >> 32));
  } else {
    mag_ = mul_mag(mag_, rhs.mag_);
  }
  sign_ *= rhs.sign_;
  return *this;
}

BigInt operator*(const BigInt& lhs, const BigInt& rhs) {
  BigInt out = lhs;
  out *= rhs;
  return out;
}

void BigInt::add_mul(const BigInt& a, const BigInt& b) {
  if (a.sign_ == 0 || b.sign_ == 0) return;
  if (sign_ == 0 && a.mag_.size() == 1 && b.mag_.size() == 1) {
    std::uint64_t prod = static_cast<std::uint64_t>(a.mag_[0]) * b.mag_[0];
    mag_.clear();
    mag_.push_back(static_cast<std::uint32_t>(prod & 0xffffffffu));
    if (prod >> 32) mag_.push_back(static_cast<std::uint32_t>(prod >> 32));
    sign_ = a.sign_ * b.sign_;
    trim();
    return;
  }
  *this += a * b;
}

std::uint32_t BigInt::divmod_small(std::vector<std::uint32_t>& mag,
                                   std::uint32_t d) {
  std::uint64_t rem = 0;
  for (std::size_t i = mag.size(); i-- > 0;) {
    std::uint64_t cur = (rem << 32) | mag[i];
    mag[i] = static_cast<std::uint32_t>(cur / d);
    rem = cur % d;
  }
  while (!mag.empty() && mag.back() == 0) mag.pop_back();
  return static_cast<std::uint32_t>(rem);
}

// Plain binary long division; operands here stay tiny (gcd reduction of
// rationals and decimal printing), so simplicity wins over Knuth D.
void BigInt::divmod_mag(const std::vector<std::uint32_t>& num,
                        const std::vector<std::uint32_t>& den,
                        std::vector<std::uint32_t>& quot,
                        std::vector<std::uint32_t>& rem) {
  quot.assign(num.size(), 0);
  rem.clear();
  if (compare_mag(num, den) < 0) {
    rem = num;
    quot.clear();
    while (!rem.empty() && rem.back() == 0) rem.pop_back();
    return;
  }
  if (den.size() == 1) {
    quot = num;
    std::uint32_t r = divmod_small(quot, den[0]);
    rem.clear();
    if (r != 0) rem.push_back(r);
    return;
  }
  const std::size_t bits = num.size() * 32;
  for (std::size_t bit = bits; bit-- > 0;) {
    // rem = (rem << 1) | bit(num, bit)
    std::uint32_t carry = 0;
    for (std::size_t i = 0; i < rem.size(); ++i) {
      std::uint32_t next = rem[i] >> 31;
      rem[i] = (rem[i] << 1) | carry;
      carry = next;
    }
    if (carry != 0) rem.push_back(carry);
    if ((num[bit / 32] >> (bit % 32)) & 1u) {
      if (rem.empty()) rem.push_back(1u);
      else rem[0] |= 1u;
    }
    if (compare_mag(rem, den) >= 0) {
      sub_mag(rem, den);
      while (!rem.empty() && rem.back() == 0) rem.pop_back();
      quot[bit / 32] |= (1u << (bit % 32));
    }
  }
  while (!quot.empty() && quot.back() == 0) quot.pop_back();
}

void BigInt::divmod(const BigInt& num, const BigInt& den, BigInt& quot,
                    BigInt& rem) {
  if (den.sign_ == 0) throw ConstraintError("BigInt division by zero");
  if (num.sign_ == 0) {
    quot = BigInt();
    rem = BigInt();
    return;
  }
  std::vector<std::uint32_t> q, r;
  divmod_mag(num.mag_, den.mag_, q, r);
  quot.mag_ = std::move(q);
  quot.sign_ = quot.mag_.empty() ? 0 : num.sign_ * den.sign_;
  rem.mag_ = std::move(r);
  rem.sign_ = rem.mag_.empty() ? 0 : num.sign_;
}

BigInt BigInt::operator/(const BigInt& rhs) const {
  BigInt q, r;
  divmod(*this, rhs, q, r);
  return q;
}

BigInt BigInt::operator%(const BigInt& rhs) const {
  BigInt q, r;
  divmod(*this, rhs, q, r);
  return r;
}

BigInt BigInt::gcd(BigInt a, BigInt b) {
  a.sign_ = a.mag_.empty() ? 0 : 1;
  b.sign_ = b.mag_.empty() ? 0 : 1;
  while (!b.is_zero()) {
    BigInt q, r;
    divmod(a, b, q, r);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

int BigInt::compare(const BigInt& a, const BigInt& b) {
  if (a.sign_ != b.sign_) return a.sign_ < b.sign_ ? -1 : 1;
  if (a.sign_ == 0) return 0;
  int cmp = compare_mag(a.mag_, b.mag_);
  return a.sign_ > 0 ? cmp : -cmp;
}

BigInt BigInt::from_string(std::string_view text) {
  if (text.empty()) throw ParseError("empty integer literal");
  bool negative = false;
  std::size_t pos = 0;
  if (text[0] == '+' || text[0] == '-') {
    negative = text[0] == '-';
    pos = 1;
  }
  if (pos == text.size()) throw ParseError("integer literal has no digits");
  BigInt out;
  const BigInt ten(10);
  for (; pos < text.size(); ++pos) {
    char c = text[pos];
    if (c < '0' || c > '9')
      throw ParseError(std::string("bad digit '") + c + "' in integer literal");
    out *= ten;
    out += BigInt(c - '0');
  }
  if (negative && !out.is_zero()) out.sign_ = -1;
  return out;
}

std::string BigInt::str() const {
  if (sign_ == 0) return "0";
  std::vector<std::uint32_t> mag = mag_;
  std::string digits;
  while (!mag.empty()) {
    std::uint32_t chunk = divmod_small(mag, 1000000000u);
    if (mag.empty()) {
      // most significant chunk: no zero padding
      digits = std::to_string(chunk) + digits;
    } else {
      std::string part = std::to_string(chunk);
      digits = std::string(9 - part.size(), '0') + part + digits;
    }
  }
  return sign_ < 0 ? "-" + digits : digits;
}

bool BigInt::fits_int64() const {
  if (mag_.size() > 2) return false;
  if (mag_.size() < 2) return true;
  std::uint64_t mag = (static_cast<std::uint64_t>(mag_[1]) << 32) | mag_[0];
  if (sign_ > 0) return mag <= 0x7fffffffffffffffull;
  return mag <= 0x8000000000000000ull;
}

long long BigInt::to_int64() const {
  if (!fits_int64()) throw ConstraintError("BigInt does not fit in 64 bits");
  if (sign_ == 0) return 0;
  std::uint64_t mag = mag_[0];
  if (mag_.size() == 2) mag |= static_cast<std::uint64_t>(mag_[1]) << 32;
  if (sign_ > 0) return static_cast<long long>(mag);
  return -static_cast<long long>(mag - 1) - 1;
}

std::ostream& operator<<(std::ostream& os, const BigInt& v) {
  return os << v.str();
}

}  // namespace branecalc
