#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fproot/bigint.hpp"
#include "fproot/corpus.hpp"
#include "fproot/errors.hpp"
#include "fproot/rational.hpp"

using namespace fproot;

namespace {
std::int64_t small(corpus::Rng& rng) {
  // signed values spanning several limb widths
  auto v = static_cast<std::int64_t>(rng.next() % 2000000000ull) - 1000000000;
  return v;
}
}  // namespace

TEST_CASE("int64 round trip") {
  corpus::Rng rng(1);
  for (int i = 0; i < 500; ++i) {
    std::int64_t v = small(rng);
    CHECK(BigInt(v).to_int64() == v);
    CHECK(BigInt(v).to_string() == std::to_string(v));
  }
  CHECK(BigInt(0).to_string() == "0");
  CHECK(BigInt(INT64_MAX).to_int64() == INT64_MAX);
  CHECK(BigInt(INT64_MIN).to_int64() == INT64_MIN);
}

TEST_CASE("ring axioms against int64 oracle") {
  corpus::Rng rng(2);
  for (int i = 0; i < 500; ++i) {
    std::int64_t a = small(rng) % 100000, b = small(rng) % 100000, c = small(rng) % 100000;
    CHECK(BigInt(a) + BigInt(b) == BigInt(a + b));
    CHECK(BigInt(a) - BigInt(b) == BigInt(a - b));
    CHECK(BigInt(a) * BigInt(b) == BigInt(a * b));
    CHECK((BigInt(a) + BigInt(b)) + BigInt(c) == BigInt(a) + (BigInt(b) + BigInt(c)));
    CHECK(BigInt(a) * (BigInt(b) + BigInt(c)) == BigInt(a) * BigInt(b) + BigInt(a) * BigInt(c));
  }
}

TEST_CASE("divmod matches truncated division") {
  corpus::Rng rng(3);
  for (int i = 0; i < 500; ++i) {
    std::int64_t a = small(rng);
    std::int64_t b = small(rng) % 10000;
    if (b == 0) b = 7;
    auto [q, r] = BigInt::divmod(BigInt(a), BigInt(b));
    CHECK(q == BigInt(a / b));
    CHECK(r == BigInt(a % b));
    CHECK(q * BigInt(b) + r == BigInt(a));
  }
}

TEST_CASE("multi-limb multiplication and division") {
  BigInt big = BigInt::pow(BigInt(10), 30);  // 10^30, ~100 bits
  CHECK(big.to_string() == "1000000000000000000000000000000");
  CHECK_FALSE(big.fits_int64());
  auto [q, r] = BigInt::divmod(big, BigInt::pow(BigInt(10), 13));
  CHECK(q == BigInt::pow(BigInt(10), 17));
  CHECK(r.is_zero());
  auto [q2, r2] = BigInt::divmod(big + BigInt(123), BigInt::pow(BigInt(10), 13));
  CHECK(q2 == BigInt::pow(BigInt(10), 17));
  CHECK(r2 == BigInt(123));
  CHECK(BigInt::from_decimal("1000000000000000000000000000000") == big);
  CHECK_THROWS_AS(big.to_int64(), ExponentOverflow);
}

TEST_CASE("gcd and fdiv") {
  CHECK(BigInt::gcd(BigInt(12), BigInt(18)) == BigInt(6));
  CHECK(BigInt::gcd(BigInt(-12), BigInt(18)) == BigInt(6));
  CHECK(BigInt::gcd(BigInt(0), BigInt(5)) == BigInt(5));
  CHECK(BigInt::fdiv(BigInt(7), BigInt(2)) == BigInt(3));
  CHECK(BigInt::fdiv(BigInt(-7), BigInt(2)) == BigInt(-4));
  CHECK(BigInt::fdiv(BigInt(7), BigInt(-2)) == BigInt(-4));
}

TEST_CASE("rational normalization and arithmetic") {
  BigRational half(BigInt(2), BigInt(4));
  CHECK(half.num() == BigInt(1));
  CHECK(half.den() == BigInt(2));
  CHECK(half.to_string() == "1/2");
  CHECK((half + half).to_string() == "1");
  CHECK((BigRational(5) / BigRational(6)).to_string() == "5/6");
  CHECK(BigRational(BigInt(3), BigInt(-6)).to_string() == "-1/2");
  CHECK(BigRational::parse("40/48") == BigRational(BigInt(5), BigInt(6)));
  CHECK(BigRational::parse("-3") == BigRational(-3));
  CHECK_THROWS_AS(BigRational::parse("0.5"), ParseError);
  CHECK_THROWS_AS(BigRational(BigInt(1), BigInt(0)), DomainError);
}

TEST_CASE("rational compare, floor, ceil") {
  CHECK(BigRational(BigInt(5), BigInt(7)) < BigRational(BigInt(5), BigInt(6)));
  CHECK(BigRational(BigInt(5), BigInt(6)) <= BigRational(BigInt(35), BigInt(42)));
  CHECK(BigRational(BigInt(7), BigInt(2)).floor() == BigInt(3));
  CHECK(BigRational(BigInt(7), BigInt(2)).ceil() == BigInt(4));
  CHECK(BigRational(BigInt(-7), BigInt(2)).floor() == BigInt(-4));
  CHECK(BigRational(BigInt(-7), BigInt(2)).ceil() == BigInt(-3));
  CHECK(ceil_scaled(BigRational(BigInt(5), BigInt(6)), BigInt(49)) == BigInt(41));
  CHECK(ceil_scaled(BigRational(BigInt(1), BigInt(2)), BigInt(8)) == BigInt(4));
}

TEST_CASE("pow grows past machine words") {
  // 9^20 does not fit a signed 64-bit word
  BigInt v = BigInt::pow(BigInt(9), 20);
  CHECK(v.to_string() == "12157665459056928801");
  CHECK_FALSE(v.fits_int64());
}
