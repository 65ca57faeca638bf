#pragma once

// Arbitrary-precision signed integers, sign-magnitude over 32-bit limbs.
// Small and self-contained; magnitudes in this project stay modest (matrix
// entries of reflection groups), so schoolbook algorithms are enough.

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace coxaff {

class BigInt {
public:
  BigInt() : sign_(0) {}

  BigInt(long long v) : sign_(0) {
    if (v == 0) return;
    sign_ = v < 0 ? -1 : 1;
    unsigned long long m =
        v < 0 ? ~static_cast<unsigned long long>(v) + 1ULL : static_cast<unsigned long long>(v);
    while (m) {
      limbs_.push_back(static_cast<std::uint32_t>(m & 0xffffffffULL));
      m >>= 32;
    }
  }
  BigInt(int v) : BigInt(static_cast<long long>(v)) {}

  static BigInt from_string(std::string_view s) {
    bool neg = false;
    std::size_t i = 0;
    if (i < s.size() && (s[i] == '-' || s[i] == '+')) {
      neg = s[i] == '-';
      ++i;
    }
    if (i == s.size()) throw std::invalid_argument("BigInt: empty numeral");
    BigInt r;
    for (; i < s.size(); ++i) {
      if (s[i] < '0' || s[i] > '9') throw std::invalid_argument("BigInt: bad digit");
      r.mul_small_add(10, static_cast<std::uint32_t>(s[i] - '0'));
    }
    if (neg && r.sign_ != 0) r.sign_ = -r.sign_;
    return r;
  }

  bool is_zero() const { return sign_ == 0; }
  bool is_one() const { return sign_ == 1 && limbs_.size() == 1 && limbs_[0] == 1; }
  bool is_negative() const { return sign_ < 0; }
  int sign() const { return sign_; }

  BigInt abs() const {
    BigInt r = *this;
    if (r.sign_ < 0) r.sign_ = 1;
    return r;
  }
  BigInt operator-() const {
    BigInt r = *this;
    r.sign_ = -r.sign_;
    return r;
  }

  friend BigInt operator+(const BigInt& a, const BigInt& b) {
    if (a.sign_ == 0) return b;
    if (b.sign_ == 0) return a;
    BigInt r;
    if (a.sign_ == b.sign_) {
      r.limbs_ = add_mag(a.limbs_, b.limbs_);
      r.sign_ = a.sign_;
    } else {
      int c = cmp_mag(a.limbs_, b.limbs_);
      if (c == 0) return BigInt();
      if (c > 0) {
        r.limbs_ = sub_mag(a.limbs_, b.limbs_);
        r.sign_ = a.sign_;
      } else {
        r.limbs_ = sub_mag(b.limbs_, a.limbs_);
        r.sign_ = b.sign_;
      }
    }
    return r;
  }
  friend BigInt operator-(const BigInt& a, const BigInt& b) { return a + (-b); }

  friend BigInt operator*(const BigInt& a, const BigInt& b) {
    if (a.sign_ == 0 || b.sign_ == 0) return BigInt();
    BigInt r;
    r.limbs_.assign(a.limbs_.size() + b.limbs_.size(), 0);
    for (std::size_t i = 0; i < a.limbs_.size(); ++i) {
      std::uint64_t carry = 0;
      for (std::size_t j = 0; j < b.limbs_.size(); ++j) {
        std::uint64_t cur = static_cast<std::uint64_t>(a.limbs_[i]) * b.limbs_[j] +
                            r.limbs_[i + j] + carry;
        r.limbs_[i + j] = static_cast<std::uint32_t>(cur);
        carry = cur >> 32;
      }
      r.limbs_[i + b.limbs_.size()] = static_cast<std::uint32_t>(carry);
    }
    r.trim();
    r.sign_ = a.sign_ * b.sign_;
    return r;
  }

  // Truncated division: quotient rounds toward zero, remainder keeps the
  // dividend's sign, a == q*b + r.
  static void divmod(const BigInt& a, const BigInt& b, BigInt& q, BigInt& r) {
    if (b.sign_ == 0) throw std::domain_error("BigInt: division by zero");
    if (a.sign_ == 0) {
      q = BigInt();
      r = BigInt();
      return;
    }
    int c = cmp_mag(a.limbs_, b.limbs_);
    if (c < 0) {
      q = BigInt();
      r = a;
      return;
    }
    std::vector<std::uint32_t> qm, rm;
    divmod_mag(a.limbs_, b.limbs_, qm, rm);
    q.limbs_ = std::move(qm);
    q.trim();
    q.sign_ = q.limbs_.empty() ? 0 : a.sign_ * b.sign_;
    r.limbs_ = std::move(rm);
    r.trim();
    r.sign_ = r.limbs_.empty() ? 0 : a.sign_;
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

  BigInt& operator+=(const BigInt& o) { return *this = *this + o; }
  BigInt& operator-=(const BigInt& o) { return *this = *this - o; }
  BigInt& operator*=(const BigInt& o) { return *this = *this * o; }

  friend bool operator==(const BigInt& a, const BigInt& b) {
    return a.sign_ == b.sign_ && a.limbs_ == b.limbs_;
  }
  friend bool operator!=(const BigInt& a, const BigInt& b) { return !(a == b); }
  friend bool operator<(const BigInt& a, const BigInt& b) { return cmp(a, b) < 0; }
  friend bool operator>(const BigInt& a, const BigInt& b) { return cmp(a, b) > 0; }
  friend bool operator<=(const BigInt& a, const BigInt& b) { return cmp(a, b) <= 0; }
  friend bool operator>=(const BigInt& a, const BigInt& b) { return cmp(a, b) >= 0; }

  static BigInt gcd(BigInt a, BigInt b) {
    a.sign_ = a.limbs_.empty() ? 0 : 1;
    b.sign_ = b.limbs_.empty() ? 0 : 1;
    while (!b.is_zero()) {
      BigInt q, r;
      divmod(a, b, q, r);
      a = std::move(b);
      b = std::move(r);
    }
    return a;
  }

  std::string to_string() const {
    if (sign_ == 0) return "0";
    std::vector<std::uint32_t> tmp = limbs_;
    std::string digits;
    while (!tmp.empty()) {
      std::uint64_t rem = 0;
      for (std::size_t i = tmp.size(); i-- > 0;) {
        std::uint64_t cur = (rem << 32) | tmp[i];
        tmp[i] = static_cast<std::uint32_t>(cur / 1000000000ULL);
        rem = cur % 1000000000ULL;
      }
      while (!tmp.empty() && tmp.back() == 0) tmp.pop_back();
      for (int k = 0; k < 9; ++k) {
        digits.push_back(static_cast<char>('0' + rem % 10));
        rem /= 10;
      }
    }
    while (digits.size() > 1 && digits.back() == '0') digits.pop_back();
    if (sign_ < 0) digits.push_back('-');
    std::reverse(digits.begin(), digits.end());
    return digits;
  }

  // Fits in long long? (used for JSON minimal-polynomial coefficients)
  bool fits_int64() const {
    if (limbs_.size() > 2) return false;
    unsigned long long m = 0;
    for (std::size_t i = limbs_.size(); i-- > 0;) m = (m << 32) | limbs_[i];
    if (sign_ >= 0) return m <= 0x7fffffffffffffffULL;
    return m <= 0x8000000000000000ULL;
  }
  long long to_int64() const {
    unsigned long long m = 0;
    for (std::size_t i = limbs_.size(); i-- > 0;) m = (m << 32) | limbs_[i];
    return sign_ < 0 ? -static_cast<long long>(m) : static_cast<long long>(m);
  }

  std::size_t hash() const {
    std::size_t h = 1469598103934665603ULL;
    auto mix = [&h](std::size_t v) {
      h ^= v;
      h *= 1099511628211ULL;
    };
    mix(static_cast<std::size_t>(sign_ + 2));
    for (std::uint32_t l : limbs_) mix(l);
    return h;
  }

private:
  void trim() {
    while (!limbs_.empty() && limbs_.back() == 0) limbs_.pop_back();
    if (limbs_.empty()) sign_ = 0;
  }

  void mul_small_add(std::uint32_t mul, std::uint32_t add) {
    std::uint64_t carry = add;
    for (std::size_t i = 0; i < limbs_.size(); ++i) {
      std::uint64_t cur = static_cast<std::uint64_t>(limbs_[i]) * mul + carry;
      limbs_[i] = static_cast<std::uint32_t>(cur);
      carry = cur >> 32;
    }
    while (carry) {
      limbs_.push_back(static_cast<std::uint32_t>(carry));
      carry >>= 32;
    }
    if (!limbs_.empty() && sign_ == 0) sign_ = 1;
    trim();
  }

  static int cmp_mag(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b) {
    if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
    for (std::size_t i = a.size(); i-- > 0;)
      if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
    return 0;
  }

  static int cmp(const BigInt& a, const BigInt& b) {
    if (a.sign_ != b.sign_) return a.sign_ < b.sign_ ? -1 : 1;
    int c = cmp_mag(a.limbs_, b.limbs_);
    return a.sign_ >= 0 ? c : -c;
  }

  static std::vector<std::uint32_t> add_mag(const std::vector<std::uint32_t>& a,
                                            const std::vector<std::uint32_t>& b) {
    const auto &big = a.size() >= b.size() ? a : b, &small = a.size() >= b.size() ? b : a;
    std::vector<std::uint32_t> r = big;
    std::uint64_t carry = 0;
    for (std::size_t i = 0; i < r.size(); ++i) {
      std::uint64_t cur = static_cast<std::uint64_t>(r[i]) + (i < small.size() ? small[i] : 0) + carry;
      r[i] = static_cast<std::uint32_t>(cur);
      carry = cur >> 32;
      if (carry == 0 && i >= small.size()) break;
    }
    if (carry) r.push_back(static_cast<std::uint32_t>(carry));
    return r;
  }

  // requires mag(a) >= mag(b)
  static std::vector<std::uint32_t> sub_mag(const std::vector<std::uint32_t>& a,
                                            const std::vector<std::uint32_t>& b) {
    std::vector<std::uint32_t> r = a;
    std::int64_t borrow = 0;
    for (std::size_t i = 0; i < r.size(); ++i) {
      std::int64_t cur = static_cast<std::int64_t>(r[i]) - (i < b.size() ? b[i] : 0) - borrow;
      borrow = cur < 0;
      if (cur < 0) cur += (1LL << 32);
      r[i] = static_cast<std::uint32_t>(cur);
      if (borrow == 0 && i >= b.size()) break;
    }
    while (!r.empty() && r.back() == 0) r.pop_back();
    return r;
  }

  // Knuth algorithm D on magnitudes; u >= v, v nonzero.
  static void divmod_mag(const std::vector<std::uint32_t>& u0, const std::vector<std::uint32_t>& v0,
                         std::vector<std::uint32_t>& q, std::vector<std::uint32_t>& r) {
    if (v0.size() == 1) {
      q.assign(u0.size(), 0);
      std::uint64_t rem = 0;
      for (std::size_t i = u0.size(); i-- > 0;) {
        std::uint64_t cur = (rem << 32) | u0[i];
        q[i] = static_cast<std::uint32_t>(cur / v0[0]);
        rem = cur % v0[0];
      }
      r.clear();
      if (rem) r.push_back(static_cast<std::uint32_t>(rem));
      return;
    }
    int shift = 0;
    for (std::uint32_t top = v0.back(); !(top & 0x80000000u); top <<= 1) ++shift;
    auto shl = [shift](const std::vector<std::uint32_t>& x) {
      std::vector<std::uint32_t> y(x.size() + 1, 0);
      for (std::size_t i = 0; i < x.size(); ++i) {
        y[i] |= shift ? (x[i] << shift) : x[i];
        if (shift) y[i + 1] = x[i] >> (32 - shift);
      }
      return y;
    };
    std::vector<std::uint32_t> u = shl(u0), v = shl(v0);
    while (!v.empty() && v.back() == 0) v.pop_back();
    const std::size_t n = v.size(), m = u0.size() - n;  // u has m+n+1 limbs
    q.assign(m + 1, 0);
    const std::uint64_t B = 1ULL << 32;
    for (std::size_t j = m + 1; j-- > 0;) {
      std::uint64_t num = (static_cast<std::uint64_t>(u[j + n]) << 32) | u[j + n - 1];
      std::uint64_t qhat = num / v[n - 1], rhat = num % v[n - 1];
      while (qhat >= B ||
             static_cast<unsigned __int128>(qhat) * v[n - 2] >
                 ((static_cast<unsigned __int128>(rhat) << 32) | u[j + n - 2])) {
        --qhat;
        rhat += v[n - 1];
        if (rhat >= B) break;
      }
      // multiply-subtract
      std::int64_t borrow = 0;
      std::uint64_t carry = 0;
      for (std::size_t i = 0; i < n; ++i) {
        std::uint64_t p = qhat * v[i] + carry;
        carry = p >> 32;
        std::int64_t t = static_cast<std::int64_t>(u[i + j]) - static_cast<std::int64_t>(p & 0xffffffffULL) - borrow;
        borrow = t < 0;
        if (t < 0) t += static_cast<std::int64_t>(B);
        u[i + j] = static_cast<std::uint32_t>(t);
      }
      std::int64_t t = static_cast<std::int64_t>(u[j + n]) - static_cast<std::int64_t>(carry) - borrow;
      if (t < 0) {
        // qhat was one too large: add divisor back
        --qhat;
        std::uint64_t c2 = 0;
        for (std::size_t i = 0; i < n; ++i) {
          std::uint64_t cur = static_cast<std::uint64_t>(u[i + j]) + v[i] + c2;
          u[i + j] = static_cast<std::uint32_t>(cur);
          c2 = cur >> 32;
        }
        t += static_cast<std::int64_t>(c2);
      }
      u[j + n] = static_cast<std::uint32_t>(t);
      q[j] = static_cast<std::uint32_t>(qhat);
    }
    // denormalize remainder
    r.assign(u.begin(), u.begin() + n);
    if (shift) {
      for (std::size_t i = 0; i + 1 < r.size(); ++i)
        r[i] = (r[i] >> shift) | (r[i + 1] << (32 - shift));
      r[n - 1] >>= shift;
    }
    while (!r.empty() && r.back() == 0) r.pop_back();
  }

  std::vector<std::uint32_t> limbs_;
  int sign_;
};

}  // namespace coxaff
