#include "qspec/bigint.hpp"

#include <algorithm>
#include <stdexcept>

namespace qspec {

namespace {
constexpr uint64_t kBase = 1ull << 32;
}

BigInt::BigInt(long long v) {
  if (v == 0) return;
  negative_ = v < 0;
  unsigned long long m = negative_ ? -(unsigned long long)v : (unsigned long long)v;
  while (m) {
    limbs_.push_back(static_cast<uint32_t>(m & 0xffffffffu));
    m >>= 32;
  }
}

BigInt BigInt::from_i128(__int128 v) {
  BigInt r;
  if (v == 0) return r;
  r.negative_ = v < 0;
  unsigned __int128 m = r.negative_ ? -(unsigned __int128)v : (unsigned __int128)v;
  while (m) {
    r.limbs_.push_back(static_cast<uint32_t>(m & 0xffffffffu));
    m >>= 32;
  }
  return r;
}

BigInt BigInt::from_string(std::string_view s) {
  bool neg = false;
  size_t i = 0;
  if (i < s.size() && (s[i] == '-' || s[i] == '+')) {
    neg = s[i] == '-';
    ++i;
  }
  if (i == s.size()) throw std::invalid_argument("BigInt: empty numeral");
  BigInt r;
  for (; i < s.size(); ++i) {
    char c = s[i];
    if (c < '0' || c > '9') throw std::invalid_argument("BigInt: bad digit");
    // r = r*10 + digit
    uint64_t carry = static_cast<uint64_t>(c - '0');
    for (auto& limb : r.limbs_) {
      uint64_t cur = static_cast<uint64_t>(limb) * 10 + carry;
      limb = static_cast<uint32_t>(cur & 0xffffffffu);
      carry = cur >> 32;
    }
    if (carry) r.limbs_.push_back(static_cast<uint32_t>(carry));
  }
  r.negative_ = neg && !r.limbs_.empty();
  return r;
}

void BigInt::trim() {
  while (!limbs_.empty() && limbs_.back() == 0) limbs_.pop_back();
  if (limbs_.empty()) negative_ = false;
}

int BigInt::cmp_mag(const BigInt& a, const BigInt& b) {
  if (a.limbs_.size() != b.limbs_.size())
    return a.limbs_.size() < b.limbs_.size() ? -1 : 1;
  for (size_t i = a.limbs_.size(); i-- > 0;) {
    if (a.limbs_[i] != b.limbs_[i]) return a.limbs_[i] < b.limbs_[i] ? -1 : 1;
  }
  return 0;
}

void BigInt::add_mag(std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
  if (b.size() > a.size()) a.resize(b.size(), 0);
  uint64_t carry = 0;
  for (size_t i = 0; i < a.size(); ++i) {
    uint64_t cur = carry + a[i] + (i < b.size() ? b[i] : 0);
    a[i] = static_cast<uint32_t>(cur & 0xffffffffu);
    carry = cur >> 32;
  }
  if (carry) a.push_back(static_cast<uint32_t>(carry));
}

void BigInt::sub_mag(std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
  int64_t borrow = 0;
  for (size_t i = 0; i < a.size(); ++i) {
    int64_t cur = static_cast<int64_t>(a[i]) - borrow - (i < b.size() ? b[i] : 0);
    if (cur < 0) {
      cur += kBase;
      borrow = 1;
    } else {
      borrow = 0;
    }
    a[i] = static_cast<uint32_t>(cur);
  }
}

BigInt BigInt::operator-() const {
  BigInt r = *this;
  if (!r.limbs_.empty()) r.negative_ = !r.negative_;
  return r;
}

BigInt& BigInt::operator+=(const BigInt& o) {
  if (negative_ == o.negative_) {
    add_mag(limbs_, o.limbs_);
  } else if (cmp_mag(*this, o) >= 0) {
    sub_mag(limbs_, o.limbs_);
  } else {
    std::vector<uint32_t> tmp = o.limbs_;
    sub_mag(tmp, limbs_);
    limbs_ = std::move(tmp);
    negative_ = o.negative_;
  }
  trim();
  return *this;
}

BigInt& BigInt::operator-=(const BigInt& o) {
  if (negative_ != o.negative_) {
    add_mag(limbs_, o.limbs_);
  } else if (cmp_mag(*this, o) >= 0) {
    sub_mag(limbs_, o.limbs_);
  } else {
    std::vector<uint32_t> tmp = o.limbs_;
    sub_mag(tmp, limbs_);
    limbs_ = std::move(tmp);
    negative_ = !negative_;
  }
  trim();
  return *this;
}

BigInt operator*(const BigInt& a, const BigInt& b) {
  BigInt r;
  if (a.is_zero() || b.is_zero()) return r;
  r.limbs_.assign(a.limbs_.size() + b.limbs_.size(), 0);
  for (size_t i = 0; i < a.limbs_.size(); ++i) {
    uint64_t carry = 0;
    uint64_t ai = a.limbs_[i];
    for (size_t j = 0; j < b.limbs_.size(); ++j) {
      uint64_t cur = r.limbs_[i + j] + ai * b.limbs_[j] + carry;
      r.limbs_[i + j] = static_cast<uint32_t>(cur & 0xffffffffu);
      carry = cur >> 32;
    }
    size_t k = i + b.limbs_.size();
    while (carry) {
      uint64_t cur = r.limbs_[k] + carry;
      r.limbs_[k] = static_cast<uint32_t>(cur & 0xffffffffu);
      carry = cur >> 32;
      ++k;
    }
  }
  r.negative_ = a.negative_ != b.negative_;
  r.trim();
  return r;
}

BigInt& BigInt::operator*=(const BigInt& o) {
  *this = *this * o;
  return *this;
}

// Knuth algorithm D on 32-bit limbs.
void BigInt::divmod(const BigInt& a, const BigInt& b, BigInt& q, BigInt& r) {
  if (b.is_zero()) throw std::domain_error("BigInt: division by zero");
  q = BigInt();
  r = BigInt();
  if (cmp_mag(a, b) < 0) {
    r = a;
    return;
  }
  if (b.limbs_.size() == 1) {
    uint64_t d = b.limbs_[0];
    q.limbs_.assign(a.limbs_.size(), 0);
    uint64_t rem = 0;
    for (size_t i = a.limbs_.size(); i-- > 0;) {
      uint64_t cur = (rem << 32) | a.limbs_[i];
      q.limbs_[i] = static_cast<uint32_t>(cur / d);
      rem = cur % d;
    }
    if (rem) r.limbs_.push_back(static_cast<uint32_t>(rem));
  } else {
    // Normalize so the divisor's top limb has its high bit set.
    int shift = 0;
    uint32_t top = b.limbs_.back();
    while (!(top & 0x80000000u)) {
      top <<= 1;
      ++shift;
    }
    auto shl = [shift](const std::vector<uint32_t>& v) {
      std::vector<uint32_t> out(v.size() + 1, 0);
      for (size_t i = 0; i < v.size(); ++i) {
        out[i] |= static_cast<uint32_t>((static_cast<uint64_t>(v[i]) << shift) & 0xffffffffu);
        if (shift) out[i + 1] = static_cast<uint32_t>(static_cast<uint64_t>(v[i]) >> (32 - shift));
      }
      return out;
    };
    std::vector<uint32_t> u = shl(a.limbs_);
    std::vector<uint32_t> v = shl(b.limbs_);
    while (!v.empty() && v.back() == 0) v.pop_back();
    size_t n = v.size(), m = u.size() - n;
    q.limbs_.assign(m, 0);
    const uint64_t vtop = v[n - 1];
    const uint64_t vsec = n >= 2 ? v[n - 2] : 0;
    for (size_t j = m; j-- > 0;) {
      uint64_t num = (static_cast<uint64_t>(u[j + n]) << 32) | u[j + n - 1];
      uint64_t qhat = num / vtop;
      uint64_t rhat = num % vtop;
      if (qhat > 0xffffffffu) qhat = 0xffffffffu;
      while (rhat <= 0xffffffffu &&
             qhat * vsec > ((rhat << 32) | (n >= 2 ? u[j + n - 2] : 0))) {
        --qhat;
        rhat += vtop;
      }
      // u[j..j+n] -= qhat * v
      int64_t borrow = 0;
      uint64_t carry = 0;
      for (size_t i = 0; i < n; ++i) {
        uint64_t p = qhat * v[i] + carry;
        carry = p >> 32;
        int64_t t = static_cast<int64_t>(u[i + j]) - static_cast<int64_t>(p & 0xffffffffu) - borrow;
        borrow = 0;
        if (t < 0) {
          t += kBase;
          borrow = 1;
        }
        u[i + j] = static_cast<uint32_t>(t);
      }
      int64_t t = static_cast<int64_t>(u[j + n]) - static_cast<int64_t>(carry) - borrow;
      if (t < 0) {
        // qhat was one too large; add the divisor back.
        t += static_cast<int64_t>(kBase);
        --qhat;
        uint64_t c2 = 0;
        for (size_t i = 0; i < n; ++i) {
          uint64_t cur = static_cast<uint64_t>(u[i + j]) + v[i] + c2;
          u[i + j] = static_cast<uint32_t>(cur & 0xffffffffu);
          c2 = cur >> 32;
        }
        t += static_cast<int64_t>(c2);
        t &= 0xffffffff;
      }
      u[j + n] = static_cast<uint32_t>(t);
      q.limbs_[j] = static_cast<uint32_t>(qhat);
    }
    // Remainder = u >> shift, low n limbs.
    u.resize(n);
    r.limbs_.assign(n, 0);
    for (size_t i = 0; i < n; ++i) {
      uint64_t cur = static_cast<uint64_t>(u[i]) >> shift;
      if (shift && i + 1 < n)
        cur |= (static_cast<uint64_t>(u[i + 1]) << (32 - shift)) & 0xffffffffu;
      r.limbs_[i] = static_cast<uint32_t>(cur);
    }
  }
  q.negative_ = (a.negative_ != b.negative_);
  r.negative_ = a.negative_;
  q.trim();
  r.trim();
}

BigInt BigInt::divexact(const BigInt& d) const {
  BigInt q, r;
  divmod(*this, d, q, r);
  if (!r.is_zero()) throw std::domain_error("BigInt: divexact with remainder");
  return q;
}

std::strong_ordering BigInt::operator<=>(const BigInt& o) const {
  if (negative_ != o.negative_)
    return negative_ ? std::strong_ordering::less : std::strong_ordering::greater;
  int c = cmp_mag(*this, o);
  if (negative_) c = -c;
  if (c < 0) return std::strong_ordering::less;
  if (c > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

bool BigInt::operator==(const BigInt& o) const {
  return negative_ == o.negative_ && limbs_ == o.limbs_;
}

bool BigInt::fits_i64() const {
  if (limbs_.size() > 2) return false;
  if (limbs_.size() < 2) return true;
  uint64_t mag = (static_cast<uint64_t>(limbs_[1]) << 32) | limbs_[0];
  return negative_ ? mag <= 0x8000000000000000ull : mag < 0x8000000000000000ull;
}

long long BigInt::to_i64() const {
  if (!fits_i64()) throw std::overflow_error("BigInt: value exceeds 64 bits");
  uint64_t mag = 0;
  if (limbs_.size() >= 1) mag = limbs_[0];
  if (limbs_.size() == 2) mag |= static_cast<uint64_t>(limbs_[1]) << 32;
  return negative_ ? -static_cast<long long>(mag) : static_cast<long long>(mag);
}

std::string BigInt::str() const {
  if (limbs_.empty()) return "0";
  std::vector<uint32_t> work = limbs_;
  std::string digits;
  while (!work.empty()) {
    // divide by 1e9, collecting 9 decimal digits per round
    uint64_t rem = 0;
    for (size_t i = work.size(); i-- > 0;) {
      uint64_t cur = (rem << 32) | work[i];
      work[i] = static_cast<uint32_t>(cur / 1000000000u);
      rem = cur % 1000000000u;
    }
    while (!work.empty() && work.back() == 0) work.pop_back();
    for (int k = 0; k < 9; ++k) {
      digits.push_back(static_cast<char>('0' + rem % 10));
      rem /= 10;
      if (work.empty() && rem == 0) break;
    }
  }
  while (digits.size() > 1 && digits.back() == '0') digits.pop_back();
  if (negative_) digits.push_back('-');
  std::reverse(digits.begin(), digits.end());
  return digits;
}

}  // namespace qspec
