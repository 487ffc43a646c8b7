#include "fproot/rational.hpp"

#include "fproot/errors.hpp"

namespace fproot {

BigRational::BigRational(BigInt num, BigInt den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw DomainError("rational with zero denominator");
  reduce();
}

void BigRational::reduce() {
  if (den_.is_negative()) {
    num_ = -num_;
    den_ = -den_;
  }
  if (num_.is_zero()) {
    den_ = BigInt(1);
    return;
  }
  BigInt g = BigInt::gcd(num_, den_);
  if (!g.is_one()) {
    num_ = num_ / g;
    den_ = den_ / g;
  }
}

BigRational BigRational::parse(std::string_view text) {
  auto slash = text.find('/');
  if (text.find('.') != std::string_view::npos)
    throw ParseError("decimal fractions are not accepted; use an exact a/b form",
                     text.find('.'));
  if (slash == std::string_view::npos) return BigRational(BigInt::from_decimal(text), BigInt(1));
  BigInt num = BigInt::from_decimal(text.substr(0, slash));
  BigInt den = BigInt::from_decimal(text.substr(slash + 1));
  return BigRational(std::move(num), std::move(den));
}

BigRational operator+(const BigRational& a, const BigRational& b) {
  return BigRational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

BigRational operator-(const BigRational& a, const BigRational& b) {
  return BigRational(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

BigRational operator*(const BigRational& a, const BigRational& b) {
  return BigRational(a.num_ * b.num_, a.den_ * b.den_);
}

BigRational operator/(const BigRational& a, const BigRational& b) {
  if (b.is_zero()) throw DomainError("rational division by zero");
  return BigRational(a.num_ * b.den_, a.den_ * b.num_);
}

int BigRational::compare(const BigRational& a, const BigRational& b) {
  return BigInt::compare(a.num_ * b.den_, b.num_ * a.den_);
}

std::string BigRational::to_string() const {
  if (den_.is_one()) return num_.to_string();
  return num_.to_string() + "/" + den_.to_string();
}

BigInt ceil_scaled(const BigRational& t, const BigInt& scale) {
  return BigRational(t.num() * scale, t.den()).ceil();
}

}  // namespace fproot
