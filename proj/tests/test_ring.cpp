#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fproot/corpus.hpp"
#include "fproot/ring.hpp"

using namespace fproot;

namespace {
Ring R(std::uint64_t p, Order order = Order::grevlex) { return make_ring(p, {"x", "y"}, order); }

Monomial M(std::int64_t a, std::int64_t b) { return Monomial{{a, b}}; }
}  // namespace

TEST_CASE("ring context validation") {
  CHECK_THROWS_AS(make_ring(6, {"x"}), DomainError);
  CHECK_THROWS_AS(make_ring(1, {"x"}), DomainError);
  CHECK_THROWS_AS(make_ring(5, {}), DomainError);
  CHECK_THROWS_AS(make_ring(5, {"x", "x"}), DomainError);
  CHECK(is_prime_u64(2));
  CHECK(is_prime_u64(1000003));
  CHECK_FALSE(is_prime_u64(1000001));  // 101 * 9901
}

TEST_CASE("ring string round trip") {
  Ring r = parse_ring("p=7;vars=x,y");
  CHECK(r->p == 7);
  CHECK(r->vars == std::vector<std::string>{"x", "y"});
  CHECK(r->order == Order::grevlex);
  CHECK(ring_to_string(*r) == "p=7;vars=x,y;order=grevlex");
  Ring lex = parse_ring("p=5;vars=a,b,c;order=lex");
  CHECK(lex->order == Order::lex);
  CHECK_THROWS_AS(parse_ring("p=4;vars=x"), DomainError);
  CHECK_THROWS_AS(parse_ring("vars=x"), ParseError);
  CHECK_THROWS_AS(parse_ring("p=5;vars=x;order=weird"), ParseError);
}

TEST_CASE("monomial order: grevlex") {
  // total degree first
  CHECK(mono_compare(M(2, 0), M(1, 0), Order::grevlex) > 0);
  // tie: rightmost difference, smaller entry wins
  CHECK(mono_compare(M(2, 1), M(1, 2), Order::grevlex) > 0);
  CHECK(mono_compare(M(1, 0), M(0, 1), Order::grevlex) > 0);
  CHECK(mono_compare(M(3, 3), M(3, 3), Order::grevlex) == 0);
}

TEST_CASE("monomial order: lex") {
  CHECK(mono_compare(M(1, 0), M(0, 5), Order::lex) > 0);
  CHECK(mono_compare(M(1, 2), M(1, 1), Order::lex) > 0);
}

TEST_CASE("parse examples") {
  SUBCASE("terms read directly") {
    Polynomial f = parse_poly("x^2+y^3", R(7));
    REQUIRE(f.terms().size() == 2);
    CHECK(f.terms()[0].mono == M(0, 3));  // y^3 leads under grevlex
    CHECK(f.terms()[0].coeff == 1);
    CHECK(f.terms()[1].mono == M(2, 0));
    CHECK(f.terms()[1].coeff == 1);
  }
  SUBCASE("coefficients reduce mod p") {
    CHECK(parse_poly("7*x+1", R(7)).str() == "1");
    CHECK(parse_poly("15*x", R(7)) == parse_poly("x", R(7)));
  }
  SUBCASE("freshman's dream") {
    CHECK(parse_poly("(x+y)^2", R(2)) == parse_poly("x^2+y^2", R(2)));
  }
  SUBCASE("unary minus and subtraction") {
    CHECK(parse_poly("-x", R(3)) == parse_poly("2*x", R(3)));
    CHECK(parse_poly("x-y", R(3)) == parse_poly("x+2*y", R(3)));
  }
  SUBCASE("errors carry positions") {
    CHECK_THROWS_AS(parse_poly("x~", R(5)), ParseError);
    CHECK_THROWS_AS(parse_poly("x+z", R(5)), ParseError);
    CHECK_THROWS_AS(parse_poly("x^", R(5)), ParseError);
    CHECK_THROWS_AS(parse_poly("(x+y", R(5)), ParseError);
    CHECK_THROWS_AS(parse_poly("", R(5)), ParseError);
    try {
      parse_poly("x+q", R(5));
      CHECK(false);
    } catch (const ParseError& e) {
      CHECK(e.position() == 2);
    }
  }
}

TEST_CASE("arithmetic") {
  Ring r3 = R(3);
  CHECK(parse_poly("x+y", r3) * parse_poly("x-y", r3) == parse_poly("x^2+2*y^2", r3));
  CHECK(poly_pow(parse_poly("x^2+y^3", R(7)), 0) == Polynomial::constant(R(7), 1));
  Polynomial zero = Polynomial::zero(r3);
  CHECK((zero * parse_poly("x", r3)).is_zero());
  CHECK(zero + zero == zero);
  CHECK_THROWS_AS(parse_poly("x", R(3)) + parse_poly("x", R(5)), ContextMismatch);
}

TEST_CASE("binomial power keeps the right residue") {
  // C(5,3) = 10 = 3 mod 7, exponents (6, 6)
  Polynomial f = poly_pow(parse_poly("x^2+y^3", R(7)), 5);
  bool found = false;
  for (const auto& t : f.terms())
    if (t.mono == M(6, 6)) {
      found = true;
      CHECK(t.coeff == 3);
    }
  CHECK(found);
}

TEST_CASE("ring axioms on random triples") {
  corpus::Rng rng(16);
  for (int i = 0; i < 40; ++i) {
    Ring r = make_ring(i % 3 == 0 ? 2 : (i % 3 == 1 ? 3 : 7), {"x", "y"});
    Polynomial f = corpus::random_poly(rng, r, 5, 4, false);
    Polynomial g = corpus::random_poly(rng, r, 5, 4, false);
    Polynomial h = corpus::random_poly(rng, r, 5, 4, false);
    CHECK(f + g == g + f);
    CHECK((f + g) + h == f + (g + h));
    CHECK(f * g == g * f);
    CHECK((f * g) * h == f * (g * h));
    CHECK(f * (g + h) == f * g + f * h);
    CHECK(f - f == Polynomial::zero(r));
    CHECK(f * Polynomial::constant(r, 1) == f);
    CHECK((f * Polynomial::zero(r)).is_zero());
  }
}

TEST_CASE("pow matches repeated multiplication") {
  corpus::Rng rng(11);
  for (int i = 0; i < 30; ++i) {
    Ring r = R(i % 2 ? 3 : 5);
    Polynomial f = corpus::random_poly(rng, r, 4, 4, false);
    Polynomial by_mul = Polynomial::constant(r, 1);
    std::int64_t n = static_cast<std::int64_t>(rng.below(12));
    for (std::int64_t k = 0; k < n; ++k) by_mul = by_mul * f;
    CHECK(poly_pow(f, n) == by_mul);
  }
}

TEST_CASE("printing is canonical and parseable") {
  corpus::Rng rng(12);
  for (int i = 0; i < 60; ++i) {
    Ring r = make_ring(i % 2 ? 5 : 2, {"x", "y", "z"});
    Polynomial f = corpus::random_poly(rng, r, 6, 5, false);
    CHECK(parse_poly(f.str(), r) == f);
  }
  CHECK(Polynomial::zero(R(5)).str() == "0");
  CHECK(Polynomial::constant(R(5), 3).str() == "3");
}

TEST_CASE("frobenius decomposition examples") {
  SUBCASE("monomial with q=4") {
    Ring r = R(2);
    auto dec = frobenius_expand(parse_poly("x^3*y^7", r), 4);
    REQUIRE(dec.parts.size() == 1);
    CHECK(dec.parts[0].first == M(3, 3));
    CHECK(dec.parts[0].second == parse_poly("y", r));
  }
  SUBCASE("two terms sharing one basis slot") {
    Ring r = R(2);
    auto dec = frobenius_expand(parse_poly("x^3+x*y^2", r), 2);
    REQUIRE(dec.parts.size() == 1);
    CHECK(dec.parts[0].first == M(1, 0));
    CHECK(dec.parts[0].second == parse_poly("x+y", r));
  }
  SUBCASE("q=1 is the identity slot") {
    Ring r = R(3);
    Polynomial f = parse_poly("x^2+2*y", r);
    auto dec = frobenius_expand(f, 1);
    REQUIRE(dec.parts.size() == 1);
    CHECK(dec.parts[0].first == M(0, 0));
    CHECK(dec.parts[0].second == f);
  }
  SUBCASE("q must be a p-power") {
    CHECK_THROWS_AS(frobenius_expand(parse_poly("x", R(2)), 3), BadPower);
    CHECK_THROWS_AS(frobenius_expand(parse_poly("x", R(2)), 6), BadPower);
  }
}

TEST_CASE("property: reassembly is exact") {
  corpus::Rng rng(13);
  for (int i = 0; i < 80; ++i) {
    std::uint64_t p = i % 3 == 0 ? 2 : (i % 3 == 1 ? 3 : 5);
    Ring r = make_ring(p, {"x", "y"});
    Polynomial f = corpus::random_poly(rng, r, 9, 7, false);
    std::int64_t q = 1;
    std::int64_t e = 1 + static_cast<std::int64_t>(rng.below(3));
    for (int k = 0; k < e; ++k) q *= static_cast<std::int64_t>(p);
    CHECK(reassemble(frobenius_expand(f, q), r) == f);
  }
}

TEST_CASE("property: linearity over q-th powers") {
  // expand(h^q * f) has parts h * u_alpha
  corpus::Rng rng(14);
  for (int i = 0; i < 40; ++i) {
    Ring r = make_ring(i % 2 ? 2 : 3, {"x", "y"});
    Polynomial f = corpus::random_poly(rng, r, 6, 4);
    Polynomial h = corpus::random_poly(rng, r, 3, 3);
    std::int64_t q = static_cast<std::int64_t>(r->p) * static_cast<std::int64_t>(r->p);
    auto base = frobenius_expand(f, q);
    auto shifted = frobenius_expand(frobenius_scale(h, q) * f, q);
    REQUIRE(base.parts.size() == shifted.parts.size());
    for (std::size_t k = 0; k < base.parts.size(); ++k) {
      CHECK(base.parts[k].first == shifted.parts[k].first);
      CHECK(h * base.parts[k].second == shifted.parts[k].second);
    }
  }
}

TEST_CASE("six-variable smoke") {
  Ring r = make_ring(3, {"a", "b", "c", "d", "e", "f"});
  corpus::Rng rng(15);
  for (int i = 0; i < 10; ++i) {
    Polynomial g = corpus::random_poly(rng, r, 5, 6, false);
    Polynomial h = corpus::random_poly(rng, r, 5, 6, false);
    CHECK(parse_poly(g.str(), r) == g);
    CHECK(g * h == h * g);
    CHECK(reassemble(frobenius_expand(g, 9), r) == g);
  }
}

TEST_CASE("characteristic kills everything") {
  Ring r = R(5);
  Polynomial f = parse_poly("x^4+2*x*y+3", r);
  Polynomial acc = Polynomial::zero(r);
  for (int i = 0; i < 5; ++i) acc = acc + f;
  CHECK(acc.is_zero());
}

TEST_CASE("exponent overflow fails loudly") {
  Ring r = R(2);
  Polynomial big = Polynomial::term(r, M(kExponentCap / 2 + 1, 0), 1);
  CHECK_THROWS_AS(big * big, ExponentOverflow);
  CHECK_THROWS_AS(frobenius_scale(big, 4), ExponentOverflow);
  CHECK_THROWS_AS(parse_poly("x^99999999999999999999", r), ExponentOverflow);
}

TEST_CASE("q cap") {
  Ring r = R(2);
  CHECK_THROWS_AS(frobenius_expand(parse_poly("x", r), std::int64_t{1} << 21), CapExceeded);
}
