#pragma once

#include <string>
#include <string_view>

#include "fproot/bigint.hpp"

namespace fproot {

// Exact fraction. Always normalized: denominator > 0, lowest terms.
class BigRational {
 public:
  BigRational() : num_(0), den_(1) {}
  BigRational(std::int64_t v) : num_(v), den_(1) {}  // NOLINT: intentionally implicit
  BigRational(BigInt num, BigInt den);
  explicit BigRational(const BigInt& v) : num_(v), den_(1) {}

  // "a/b" or "a"; decimals are rejected, not rounded.
  static BigRational parse(std::string_view text);

  const BigInt& num() const { return num_; }
  const BigInt& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_integer() const { return den_.is_one(); }

  friend BigRational operator+(const BigRational& a, const BigRational& b);
  friend BigRational operator-(const BigRational& a, const BigRational& b);
  friend BigRational operator*(const BigRational& a, const BigRational& b);
  friend BigRational operator/(const BigRational& a, const BigRational& b);
  BigRational operator-() const { return BigRational(-num_, den_); }

  static int compare(const BigRational& a, const BigRational& b);
  friend bool operator==(const BigRational& a, const BigRational& b) { return compare(a, b) == 0; }
  friend bool operator!=(const BigRational& a, const BigRational& b) { return compare(a, b) != 0; }
  friend bool operator<(const BigRational& a, const BigRational& b) { return compare(a, b) < 0; }
  friend bool operator<=(const BigRational& a, const BigRational& b) { return compare(a, b) <= 0; }
  friend bool operator>(const BigRational& a, const BigRational& b) { return compare(a, b) > 0; }
  friend bool operator>=(const BigRational& a, const BigRational& b) { return compare(a, b) >= 0; }

  BigInt floor() const { return BigInt::fdiv(num_, den_); }
  BigInt ceil() const { return -BigInt::fdiv(-num_, den_); }

  std::string to_string() const;  // "a/b", or "a" when integral

 private:
  BigInt num_;
  BigInt den_;

  void reduce();
};

// ceil(t * scale) as an exact integer, scale >= 0.
BigInt ceil_scaled(const BigRational& t, const BigInt& scale);

}  // namespace fproot
