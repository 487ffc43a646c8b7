#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "fproot/errors.hpp"

namespace fproot {

// Monomial orders. The elim1_* orders compare the first variable's exponent
// before anything else; they exist for internal elimination rings and never
// appear in user-facing context strings.
enum class Order { grevlex, lex, elim1_grevlex, elim1_lex };

struct RingContext {
  std::uint64_t p = 2;
  std::vector<std::string> vars;
  Order order = Order::grevlex;

  std::size_t arity() const { return vars.size(); }
  // index of a variable name, or npos
  std::size_t var_index(std::string_view name) const;
};

using Ring = std::shared_ptr<const RingContext>;

bool is_prime_u64(std::uint64_t n);

// Validates p prime, vars nonempty and pairwise distinct.
Ring make_ring(std::uint64_t p, std::vector<std::string> vars, Order order = Order::grevlex);

// "p=<prime>;vars=<comma list>[;order=grevlex|lex]"
Ring parse_ring(std::string_view text);
std::string ring_to_string(const RingContext& ctx);

bool same_ring(const RingContext& a, const RingContext& b);
void require_same_ring(const Ring& a, const Ring& b);

// ---------------------------------------------------------------------------
// mod-p scalar helpers (p prime, fits a machine word)

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p);
std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t p);
std::uint64_t invmod(std::uint64_t a, std::uint64_t p);

// ---------------------------------------------------------------------------
// Monomials

// Largest exponent we allow; keeps grevlex degree sums far from int64 wrap.
inline constexpr std::int64_t kExponentCap = std::int64_t{1} << 40;

struct Monomial {
  std::vector<std::int64_t> exps;

  static Monomial one(std::size_t arity) { return Monomial{std::vector<std::int64_t>(arity, 0)}; }

  std::int64_t total_degree() const;
  bool is_one() const;
  bool divides(const Monomial& other) const;

  friend bool operator==(const Monomial& a, const Monomial& b) { return a.exps == b.exps; }
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const;
};

Monomial mono_mul(const Monomial& a, const Monomial& b);
Monomial mono_div(const Monomial& a, const Monomial& b);  // requires b | a
Monomial mono_lcm(const Monomial& a, const Monomial& b);
Monomial mono_scale(const Monomial& m, std::int64_t q);      // componentwise *q, checked
Monomial mono_floor_div(const Monomial& m, std::int64_t q);  // componentwise floor
Monomial mono_mod(const Monomial& m, std::int64_t q);        // componentwise remainder

// -1 / 0 / +1 under the given order.
int mono_compare(const Monomial& a, const Monomial& b, Order order);

struct Term {
  Monomial mono;
  std::uint64_t coeff = 0;  // nonzero residue mod p in canonical polynomials
};

// ---------------------------------------------------------------------------
// Polynomials over F_p[x1..xn]

// Canonical form: terms strictly descending under the context order, no zero
// coefficients, coefficients in [1, p-1]. Immutable after construction.
class Polynomial {
 public:
  Polynomial() = default;  // detached zero; most callers want zero(ring)

  static Polynomial zero(Ring ring);
  static Polynomial constant(Ring ring, std::uint64_t c);
  static Polynomial variable(Ring ring, std::size_t var_index);
  static Polynomial term(Ring ring, Monomial m, std::uint64_t c);
  // Folds duplicate monomials, drops zeros, sorts. The one canonicalizing entry point.
  static Polynomial from_terms(Ring ring, std::vector<Term> terms);

  const Ring& ring() const { return ring_; }
  const std::vector<Term>& terms() const { return terms_; }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || terms_[0].mono.is_one(); }
  bool is_unit() const { return !terms_.empty() && terms_[0].mono.is_one(); }
  bool is_monomial() const { return terms_.size() == 1; }
  // true when the constant coefficient vanishes, i.e. f lies in (x1..xn)
  bool in_maximal_ideal() const;

  const Term& leading_term() const;
  std::int64_t total_degree() const;  // -1 for the zero polynomial

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);

  Polynomial scaled(std::uint64_t c) const;                        // c * f
  Polynomial times_term(const Monomial& m, std::uint64_t c) const;  // c*x^m * f
  Polynomial monic() const;  // leading coefficient normalized to 1

  friend bool operator==(const Polynomial& a, const Polynomial& b);
  friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

  std::string str() const;

 private:
  Ring ring_;
  std::vector<Term> terms_;
};

// Total order on canonical polynomials (for deterministic generator lists).
int poly_compare(const Polynomial& a, const Polynomial& b);

Polynomial parse_poly(std::string_view text, const Ring& ring);

// f^n, n >= 0. Splits n in base p and applies the coefficientwise Frobenius
// (c^p = c on the prime field), so only exponents < p are squared out.
Polynomial poly_pow(const Polynomial& f, std::int64_t n);

// f^q for q a p-power: exponents scale by q, coefficients are fixed points.
Polynomial frobenius_scale(const Polynomial& f, std::int64_t q);

// ---------------------------------------------------------------------------
// Frobenius decomposition: f = sum_alpha x^alpha * (u_alpha)^q over the free
// basis {x^alpha : alpha < q componentwise} of R over R^q.

struct FrobeniusDecomposition {
  std::int64_t q = 1;
  // sorted ascending by alpha under the context order; no zero parts
  std::vector<std::pair<Monomial, Polynomial>> parts;
};

FrobeniusDecomposition frobenius_expand(const Polynomial& f, std::int64_t q);
Polynomial reassemble(const FrobeniusDecomposition& dec, const Ring& ring);

// ---------------------------------------------------------------------------
// p-power utilities

// q == p^e with e >= 0? Writes e through e_out when non-null.
bool is_power_of(std::int64_t q, std::uint64_t p, std::int64_t* e_out = nullptr);
// Throws BadPower / CapExceeded as appropriate.
void require_p_power(std::int64_t q, const RingContext& ctx);
std::int64_t checked_pow_i64(std::int64_t base, std::int64_t exp, std::int64_t limit);

// Cap on q (default 2^20); override with the FPROOT_QCAP environment variable.
std::int64_t q_cap();

}  // namespace fproot
