#include "fproot/bigint.hpp"

#include <algorithm>
#include <cstdlib>

#include "fproot/errors.hpp"

namespace fproot {

namespace {
constexpr std::uint64_t kBase = std::uint64_t{1} << 32;
}

BigInt::BigInt(std::int64_t v) {
  if (v == 0) return;
  sign_ = v < 0 ? -1 : 1;
  // avoid UB on INT64_MIN
  std::uint64_t mag = v < 0 ? ~static_cast<std::uint64_t>(v) + 1 : static_cast<std::uint64_t>(v);
  limbs_.push_back(static_cast<std::uint32_t>(mag & 0xffffffffu));
  if (mag >> 32) limbs_.push_back(static_cast<std::uint32_t>(mag >> 32));
}

void BigInt::normalize() {
  while (!limbs_.empty() && limbs_.back() == 0) limbs_.pop_back();
  if (limbs_.empty()) sign_ = 0;
}

bool BigInt::is_one() const { return sign_ == 1 && limbs_.size() == 1 && limbs_[0] == 1; }

int BigInt::compare_mag(const std::vector<std::uint32_t>& a,
                        const std::vector<std::uint32_t>& b) {
  if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
  for (std::size_t i = a.size(); i-- > 0;) {
    if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
  }
  return 0;
}

std::vector<std::uint32_t> BigInt::add_mag(const std::vector<std::uint32_t>& a,
                                           const std::vector<std::uint32_t>& b) {
  const auto& big = a.size() >= b.size() ? a : b;
  const auto& small = a.size() >= b.size() ? b : a;
  std::vector<std::uint32_t> out;
  out.reserve(big.size() + 1);
  std::uint64_t carry = 0;
  for (std::size_t i = 0; i < big.size(); ++i) {
    std::uint64_t s = carry + big[i] + (i < small.size() ? small[i] : 0u);
    out.push_back(static_cast<std::uint32_t>(s & 0xffffffffu));
    carry = s >> 32;
  }
  if (carry) out.push_back(static_cast<std::uint32_t>(carry));
  return out;
}

std::vector<std::uint32_t> BigInt::sub_mag(const std::vector<std::uint32_t>& a,
                                           const std::vector<std::uint32_t>& b) {
  std::vector<std::uint32_t> out;
  out.reserve(a.size());
  std::int64_t borrow = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    std::int64_t d = static_cast<std::int64_t>(a[i]) - borrow -
                     (i < b.size() ? static_cast<std::int64_t>(b[i]) : 0);
    if (d < 0) {
      d += static_cast<std::int64_t>(kBase);
      borrow = 1;
    } else {
      borrow = 0;
    }
    out.push_back(static_cast<std::uint32_t>(d));
  }
  while (!out.empty() && out.back() == 0) out.pop_back();
  return out;
}

std::vector<std::uint32_t> BigInt::mul_mag(const std::vector<std::uint32_t>& a,
                                           const std::vector<std::uint32_t>& b) {
  if (a.empty() || b.empty()) return {};
  std::vector<std::uint32_t> out(a.size() + b.size(), 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    std::uint64_t carry = 0;
    for (std::size_t j = 0; j < b.size(); ++j) {
      std::uint64_t cur = out[i + j] + static_cast<std::uint64_t>(a[i]) * b[j] + carry;
      out[i + j] = static_cast<std::uint32_t>(cur & 0xffffffffu);
      carry = cur >> 32;
    }
    std::size_t k = i + b.size();
    while (carry) {
      std::uint64_t cur = out[k] + carry;
      out[k] = static_cast<std::uint32_t>(cur & 0xffffffffu);
      carry = cur >> 32;
      ++k;
    }
  }
  while (!out.empty() && out.back() == 0) out.pop_back();
  return out;
}

std::pair<std::vector<std::uint32_t>, std::vector<std::uint32_t>> BigInt::divmod_mag(
    const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b) {
  if (compare_mag(a, b) < 0) return {{}, a};
  if (b.size() == 1) {
    // short division
    std::vector<std::uint32_t> q(a.size(), 0);
    std::uint64_t rem = 0;
    std::uint64_t d = b[0];
    for (std::size_t i = a.size(); i-- > 0;) {
      std::uint64_t cur = (rem << 32) | a[i];
      q[i] = static_cast<std::uint32_t>(cur / d);
      rem = cur % d;
    }
    while (!q.empty() && q.back() == 0) q.pop_back();
    std::vector<std::uint32_t> r;
    if (rem) r.push_back(static_cast<std::uint32_t>(rem));
    return {q, r};
  }
  // binary long division; operand sizes here are tiny so O(bits*limbs) is fine
  std::size_t nbits = a.size() * 32;
  while (nbits > 0) {
    std::size_t i = nbits - 1;
    if ((a[i / 32] >> (i % 32)) & 1u) break;
    --nbits;
  }
  std::vector<std::uint32_t> q(a.size(), 0);
  std::vector<std::uint32_t> r;
  for (std::size_t bit = nbits; bit-- > 0;) {
    // r = (r << 1) | a.bit(bit)
    std::uint32_t carry = (a[bit / 32] >> (bit % 32)) & 1u;
    for (std::size_t i = 0; i < r.size(); ++i) {
      std::uint32_t next = r[i] >> 31;
      r[i] = (r[i] << 1) | carry;
      carry = next;
    }
    if (carry) r.push_back(carry);
    if (compare_mag(r, b) >= 0) {
      r = sub_mag(r, b);
      q[bit / 32] |= (1u << (bit % 32));
    }
  }
  while (!q.empty() && q.back() == 0) q.pop_back();
  return {q, r};
}

BigInt BigInt::operator-() const {
  BigInt out = *this;
  out.sign_ = -out.sign_;
  return out;
}

BigInt operator+(const BigInt& a, const BigInt& b) {
  if (a.sign_ == 0) return b;
  if (b.sign_ == 0) return a;
  BigInt out;
  if (a.sign_ == b.sign_) {
    out.sign_ = a.sign_;
    out.limbs_ = BigInt::add_mag(a.limbs_, b.limbs_);
  } else {
    int c = BigInt::compare_mag(a.limbs_, b.limbs_);
    if (c == 0) return BigInt{};
    const BigInt& big = c > 0 ? a : b;
    const BigInt& small = c > 0 ? b : a;
    out.sign_ = big.sign_;
    out.limbs_ = BigInt::sub_mag(big.limbs_, small.limbs_);
  }
  out.normalize();
  return out;
}

BigInt operator-(const BigInt& a, const BigInt& b) { return a + (-b); }

BigInt operator*(const BigInt& a, const BigInt& b) {
  BigInt out;
  if (a.sign_ == 0 || b.sign_ == 0) return out;
  out.sign_ = a.sign_ * b.sign_;
  out.limbs_ = BigInt::mul_mag(a.limbs_, b.limbs_);
  out.normalize();
  return out;
}

std::pair<BigInt, BigInt> BigInt::divmod(const BigInt& a, const BigInt& b) {
  if (b.sign_ == 0) throw DomainError("division by zero");
  auto [qm, rm] = divmod_mag(a.limbs_, b.limbs_);
  BigInt q, r;
  q.limbs_ = std::move(qm);
  r.limbs_ = std::move(rm);
  q.sign_ = q.limbs_.empty() ? 0 : a.sign_ * b.sign_;
  r.sign_ = r.limbs_.empty() ? 0 : a.sign_;
  return {q, r};
}

BigInt BigInt::fdiv(const BigInt& a, const BigInt& b) {
  auto [q, r] = divmod(a, b);
  if (!r.is_zero() && (a.sign() * b.sign() < 0)) q -= BigInt(1);
  return q;
}

BigInt BigInt::pow(const BigInt& base, std::uint64_t exp) {
  BigInt result(1);
  BigInt sq = base;
  while (exp) {
    if (exp & 1) result *= sq;
    exp >>= 1;
    if (exp) sq *= sq;
  }
  return result;
}

BigInt BigInt::gcd(const BigInt& a, const BigInt& b) {
  BigInt x = a.is_negative() ? -a : a;
  BigInt y = b.is_negative() ? -b : b;
  while (!y.is_zero()) {
    BigInt r = x % y;
    x = std::move(y);
    y = std::move(r);
  }
  return x;
}

int BigInt::compare(const BigInt& a, const BigInt& b) {
  if (a.sign_ != b.sign_) return a.sign_ < b.sign_ ? -1 : 1;
  int c = compare_mag(a.limbs_, b.limbs_);
  return a.sign_ >= 0 ? c : -c;
}

bool BigInt::fits_int64() const {
  if (limbs_.size() > 2) return false;
  std::uint64_t mag = 0;
  if (!limbs_.empty()) mag = limbs_[0];
  if (limbs_.size() == 2) mag |= static_cast<std::uint64_t>(limbs_[1]) << 32;
  if (sign_ >= 0) return mag <= static_cast<std::uint64_t>(INT64_MAX);
  return mag <= static_cast<std::uint64_t>(INT64_MAX) + 1;
}

std::int64_t BigInt::to_int64() const {
  if (!fits_int64()) throw ExponentOverflow("integer too large for machine word: " + to_string());
  std::uint64_t mag = 0;
  if (!limbs_.empty()) mag = limbs_[0];
  if (limbs_.size() == 2) mag |= static_cast<std::uint64_t>(limbs_[1]) << 32;
  return sign_ >= 0 ? static_cast<std::int64_t>(mag) : -static_cast<std::int64_t>(mag - 1) - 1;
}

BigInt BigInt::from_decimal(std::string_view text) {
  std::size_t i = 0;
  bool neg = false;
  if (i < text.size() && (text[i] == '+' || text[i] == '-')) {
    neg = text[i] == '-';
    ++i;
  }
  if (i >= text.size()) throw ParseError("expected digits", i);
  BigInt out;
  for (; i < text.size(); ++i) {
    char c = text[i];
    if (c < '0' || c > '9') throw ParseError("unexpected character in integer", i);
    out = out * BigInt(10) + BigInt(c - '0');
  }
  if (neg) out = -out;
  return out;
}

std::string BigInt::to_string() const {
  if (is_zero()) return "0";
  std::vector<std::uint32_t> mag = limbs_;
  std::string digits;
  const std::vector<std::uint32_t> ten9 = {1000000000u};
  while (!mag.empty()) {
    auto [q, r] = divmod_mag(mag, ten9);
    std::uint32_t chunk = r.empty() ? 0 : r[0];
    mag = std::move(q);
    std::string part = std::to_string(chunk);
    if (!mag.empty()) part.insert(part.begin(), 9 - part.size(), '0');
    digits.insert(0, part);
  }
  if (sign_ < 0) digits.insert(digits.begin(), '-');
  return digits;
}

}  // namespace fproot
