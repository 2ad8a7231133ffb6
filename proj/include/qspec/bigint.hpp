#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace qspec {

/// Signed arbitrary-precision integer, sign-magnitude over 32-bit limbs.
/// Covers what exact spectral arithmetic needs: ring operations, exact
/// division, comparisons and decimal I/O. Not a general bignum library.
class BigInt {
 public:
  BigInt() = default;
  BigInt(long long v);
  static BigInt from_i128(__int128 v);
  static BigInt from_string(std::string_view s);

  bool is_zero() const { return limbs_.empty(); }
  int sign() const { return limbs_.empty() ? 0 : (negative_ ? -1 : 1); }
  bool is_negative() const { return negative_; }

  BigInt operator-() const;
  BigInt& operator+=(const BigInt& o);
  BigInt& operator-=(const BigInt& o);
  BigInt& operator*=(const BigInt& o);
  friend BigInt operator+(BigInt a, const BigInt& b) { return a += b; }
  friend BigInt operator-(BigInt a, const BigInt& b) { return a -= b; }
  friend BigInt operator*(const BigInt& a, const BigInt& b);

  /// Truncating division (quotient rounds toward zero, like C++ integers).
  static void divmod(const BigInt& a, const BigInt& b, BigInt& q, BigInt& r);
  /// Exact division; the caller guarantees divisibility.
  BigInt divexact(const BigInt& d) const;

  std::strong_ordering operator<=>(const BigInt& o) const;
  bool operator==(const BigInt& o) const;

  bool fits_i64() const;
  long long to_i64() const;  // throws std::overflow_error if out of range

  std::string str() const;

 private:
  bool negative_ = false;           // false for zero
  std::vector<uint32_t> limbs_;     // little-endian, no trailing zero limbs

  void trim();
  static int cmp_mag(const BigInt& a, const BigInt& b);
  static void add_mag(std::vector<uint32_t>& a, const std::vector<uint32_t>& b);
  // requires |a| >= |b|
  static void sub_mag(std::vector<uint32_t>& a, const std::vector<uint32_t>& b);
};

}  // namespace qspec
