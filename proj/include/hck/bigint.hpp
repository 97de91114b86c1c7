#pragma once

// Arbitrary-precision signed integers. Smith normal form escalates to these
// when 64-bit arithmetic would overflow; magnitudes here stay tiny, so the
// implementation favors simplicity (schoolbook multiply, shift-subtract
// division) over asymptotics.

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

#include "hck/core.hpp"

namespace hck {

class BigInt {
public:
  BigInt() = default;
  BigInt(long long v) {  // NOLINT: implicit by design, mirrors int literals
    if (v == 0) return;
    sign_ = v < 0 ? -1 : 1;
    unsigned long long u = v < 0 ? ~static_cast<unsigned long long>(v) + 1 : static_cast<unsigned long long>(v);
    while (u) {
      mag_.push_back(static_cast<uint32_t>(u & 0xffffffffu));
      u >>= 32;
    }
  }

  bool is_zero() const { return sign_ == 0; }
  int sign() const { return sign_; }

  friend bool operator==(const BigInt& a, const BigInt& b) { return a.sign_ == b.sign_ && a.mag_ == b.mag_; }
  friend bool operator!=(const BigInt& a, const BigInt& b) { return !(a == b); }
  friend bool operator<(const BigInt& a, const BigInt& b) {
    if (a.sign_ != b.sign_) return a.sign_ < b.sign_;
    int c = cmp_mag(a.mag_, b.mag_);
    return a.sign_ >= 0 ? c < 0 : c > 0;
  }
  friend bool operator>(const BigInt& a, const BigInt& b) { return b < a; }
  friend bool operator<=(const BigInt& a, const BigInt& b) { return !(b < a); }
  friend bool operator>=(const BigInt& a, const BigInt& b) { return !(a < b); }

  BigInt operator-() const {
    BigInt r = *this;
    r.sign_ = -r.sign_;
    return r;
  }
  BigInt abs() const {
    BigInt r = *this;
    if (r.sign_ < 0) r.sign_ = 1;
    return r;
  }

  friend BigInt operator+(const BigInt& a, const BigInt& b) {
    if (a.sign_ == 0) return b;
    if (b.sign_ == 0) return a;
    BigInt r;
    if (a.sign_ == b.sign_) {
      r.mag_ = add_mag(a.mag_, b.mag_);
      r.sign_ = a.sign_;
    } else {
      int c = cmp_mag(a.mag_, b.mag_);
      if (c == 0) return BigInt();
      if (c > 0) {
        r.mag_ = sub_mag(a.mag_, b.mag_);
        r.sign_ = a.sign_;
      } else {
        r.mag_ = sub_mag(b.mag_, a.mag_);
        r.sign_ = b.sign_;
      }
    }
    return r;
  }
  friend BigInt operator-(const BigInt& a, const BigInt& b) { return a + (-b); }

  friend BigInt operator*(const BigInt& a, const BigInt& b) {
    if (a.sign_ == 0 || b.sign_ == 0) return BigInt();
    BigInt r;
    r.sign_ = a.sign_ * b.sign_;
    r.mag_.assign(a.mag_.size() + b.mag_.size(), 0);
    for (size_t i = 0; i < a.mag_.size(); ++i) {
      uint64_t carry = 0;
      for (size_t j = 0; j < b.mag_.size(); ++j) {
        uint64_t cur = static_cast<uint64_t>(a.mag_[i]) * b.mag_[j] + r.mag_[i + j] + carry;
        r.mag_[i + j] = static_cast<uint32_t>(cur & 0xffffffffu);
        carry = cur >> 32;
      }
      size_t k = i + b.mag_.size();
      while (carry) {
        uint64_t cur = r.mag_[k] + carry;
        r.mag_[k] = static_cast<uint32_t>(cur & 0xffffffffu);
        carry = cur >> 32;
        ++k;
      }
    }
    r.trim();
    return r;
  }

  BigInt& operator+=(const BigInt& o) { return *this = *this + o; }
  BigInt& operator-=(const BigInt& o) { return *this = *this - o; }
  BigInt& operator*=(const BigInt& o) { return *this = *this * o; }

  // Truncated division: a = q*b + r with |r| < |b| and sign(r) = sign(a).
  static void divmod(const BigInt& a, const BigInt& b, BigInt& q, BigInt& r) {
    require(!b.is_zero(), errc::internal, "BigInt division by zero");
    if (a.is_zero()) {
      q = BigInt();
      r = BigInt();
      return;
    }
    std::vector<uint32_t> qm, rm;
    divmod_mag(a.mag_, b.mag_, qm, rm);
    q.mag_ = std::move(qm);
    r.mag_ = std::move(rm);
    q.sign_ = q.mag_.empty() ? 0 : a.sign_ * b.sign_;
    r.sign_ = r.mag_.empty() ? 0 : a.sign_;
    q.trim();
    r.trim();
  }
  friend BigInt operator/(const BigInt& a, const BigInt& b) {
    BigInt q, r;
    divmod(a, b, q, r);
    return q;
  }
  friend BigInt operator%(const BigInt& a, const BigInt& b) {
    BigInt q, r;
    divmod(a, b, q, r);
    return r;
  }

  bool fits_int64() const {
    if (mag_.size() > 2) return false;
    unsigned long long u = to_u64();
    if (sign_ >= 0) return u <= 0x7fffffffffffffffull;
    return u <= 0x8000000000000000ull;
  }
  long long to_int64() const {
    require(fits_int64(), errc::internal, "BigInt does not fit in int64");
    unsigned long long u = to_u64();
    return sign_ < 0 ? -static_cast<long long>(u - 1) - 1 : static_cast<long long>(u);
  }

  std::string to_string() const {
    if (sign_ == 0) return "0";
    std::vector<uint32_t> m = mag_;
    std::string digits;
    while (!m.empty()) {
      // divide magnitude by 10^9
      uint64_t rem = 0;
      for (size_t i = m.size(); i-- > 0;) {
        uint64_t cur = (rem << 32) | m[i];
        m[i] = static_cast<uint32_t>(cur / 1000000000u);
        rem = cur % 1000000000u;
      }
      while (!m.empty() && m.back() == 0) m.pop_back();
      std::string chunk = std::to_string(rem);
      if (!m.empty()) chunk = std::string(9 - chunk.size(), '0') + chunk;
      digits = chunk + digits;
    }
    return (sign_ < 0 ? "-" : "") + digits;
  }

private:
  int sign_ = 0;
  std::vector<uint32_t> mag_;  // little-endian, no leading zero limbs

  void trim() {
    while (!mag_.empty() && mag_.back() == 0) mag_.pop_back();
    if (mag_.empty()) sign_ = 0;
  }
  unsigned long long to_u64() const {
    unsigned long long u = 0;
    if (mag_.size() > 0) u = mag_[0];
    if (mag_.size() > 1) u |= static_cast<unsigned long long>(mag_[1]) << 32;
    return u;
  }

  static int cmp_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
    if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
    for (size_t i = a.size(); i-- > 0;)
      if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
    return 0;
  }
  static std::vector<uint32_t> add_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
    std::vector<uint32_t> r(std::max(a.size(), b.size()) + 1, 0);
    uint64_t carry = 0;
    for (size_t i = 0; i < r.size(); ++i) {
      uint64_t cur = carry;
      if (i < a.size()) cur += a[i];
      if (i < b.size()) cur += b[i];
      r[i] = static_cast<uint32_t>(cur & 0xffffffffu);
      carry = cur >> 32;
    }
    while (!r.empty() && r.back() == 0) r.pop_back();
    return r;
  }
  // requires a >= b
  static std::vector<uint32_t> sub_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
    std::vector<uint32_t> r = a;
    int64_t borrow = 0;
    for (size_t i = 0; i < r.size(); ++i) {
      int64_t cur = static_cast<int64_t>(r[i]) - borrow - (i < b.size() ? b[i] : 0);
      if (cur < 0) {
        cur += int64_t{1} << 32;
        borrow = 1;
      } else {
        borrow = 0;
      }
      r[i] = static_cast<uint32_t>(cur);
    }
    while (!r.empty() && r.back() == 0) r.pop_back();
    return r;
  }
  // shift-subtract long division on magnitudes
  static void divmod_mag(const std::vector<uint32_t>& num, const std::vector<uint32_t>& den,
                         std::vector<uint32_t>& quot, std::vector<uint32_t>& rem) {
    if (cmp_mag(num, den) < 0) {
      quot.clear();
      rem = num;
      return;
    }
    int nbits = static_cast<int>(num.size()) * 32;
    quot.assign(num.size(), 0);
    rem.clear();
    for (int bit = nbits - 1; bit >= 0; --bit) {
      // rem = (rem << 1) | num[bit]
      uint32_t carry = (num[bit >> 5] >> (bit & 31)) & 1;
      for (size_t i = 0; i < rem.size(); ++i) {
        uint32_t next = rem[i] >> 31;
        rem[i] = (rem[i] << 1) | carry;
        carry = next;
      }
      if (carry) rem.push_back(carry);
      if (cmp_mag(rem, den) >= 0) {
        rem = sub_mag(rem, den);
        quot[bit >> 5] |= uint32_t{1} << (bit & 31);
      }
    }
    while (!quot.empty() && quot.back() == 0) quot.pop_back();
  }
};

}  // namespace hck
