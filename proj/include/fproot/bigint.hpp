#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace fproot {

// Arbitrary-precision signed integer. Sign-magnitude over 32-bit limbs,
// least significant limb first, no trailing zero limbs. Sizes here stay
// small (threshold denominators, psi values, ceil(t*p^e)); schoolbook
// arithmetic is plenty.
class BigInt {
 public:
  BigInt() = default;
  BigInt(std::int64_t v);  // NOLINT: implicit, mirrors integer literals

  static BigInt from_decimal(std::string_view text);

  bool is_zero() const { return sign_ == 0; }
  bool is_negative() const { return sign_ < 0; }
  bool is_one() const;
  int sign() const { return sign_; }

  BigInt operator-() const;

  friend BigInt operator+(const BigInt& a, const BigInt& b);
  friend BigInt operator-(const BigInt& a, const BigInt& b);
  friend BigInt operator*(const BigInt& a, const BigInt& b);

  BigInt& operator+=(const BigInt& o) { return *this = *this + o; }
  BigInt& operator-=(const BigInt& o) { return *this = *this - o; }
  BigInt& operator*=(const BigInt& o) { return *this = *this * o; }

  // Truncated division (C semantics): quotient rounds toward zero,
  // remainder has the dividend's sign. Divisor must be nonzero.
  static std::pair<BigInt, BigInt> divmod(const BigInt& a, const BigInt& b);
  friend BigInt operator/(const BigInt& a, const BigInt& b) { return divmod(a, b).first; }
  friend BigInt operator%(const BigInt& a, const BigInt& b) { return divmod(a, b).second; }

  // Floor division: rounds toward minus infinity.
  static BigInt fdiv(const BigInt& a, const BigInt& b);

  static BigInt pow(const BigInt& base, std::uint64_t exp);
  static BigInt gcd(const BigInt& a, const BigInt& b);  // nonnegative

  // -1 / 0 / +1 as a < b, a == b, a > b.
  static int compare(const BigInt& a, const BigInt& b);

  friend bool operator==(const BigInt& a, const BigInt& b) { return compare(a, b) == 0; }
  friend bool operator!=(const BigInt& a, const BigInt& b) { return compare(a, b) != 0; }
  friend bool operator<(const BigInt& a, const BigInt& b) { return compare(a, b) < 0; }
  friend bool operator<=(const BigInt& a, const BigInt& b) { return compare(a, b) <= 0; }
  friend bool operator>(const BigInt& a, const BigInt& b) { return compare(a, b) > 0; }
  friend bool operator>=(const BigInt& a, const BigInt& b) { return compare(a, b) >= 0; }

  bool fits_int64() const;
  std::int64_t to_int64() const;  // throws ExponentOverflow if out of range

  std::string to_string() const;  // decimal

 private:
  int sign_ = 0;  // -1, 0, +1
  std::vector<std::uint32_t> limbs_;

  void normalize();
  static int compare_mag(const std::vector<std::uint32_t>& a,
                         const std::vector<std::uint32_t>& b);
  static std::vector<std::uint32_t> add_mag(const std::vector<std::uint32_t>& a,
                                            const std::vector<std::uint32_t>& b);
  // requires |a| >= |b|
  static std::vector<std::uint32_t> sub_mag(const std::vector<std::uint32_t>& a,
                                            const std::vector<std::uint32_t>& b);
  static std::vector<std::uint32_t> mul_mag(const std::vector<std::uint32_t>& a,
                                            const std::vector<std::uint32_t>& b);
  static std::pair<std::vector<std::uint32_t>, std::vector<std::uint32_t>> divmod_mag(
      const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b);
};

}  // namespace fproot
