#pragma once

#include <memory>
#include <string>
#include <vector>

#include "fproot/ring.hpp"

namespace fproot {

// Finitely generated ideal of F_p[x1..xn]. Immutable; the reduced Groebner
// basis is computed once on first use and shared between copies.
class Ideal {
 public:
  Ideal(Ring ring, std::vector<Polynomial> gens);

  static Ideal zero(Ring ring) { return Ideal(std::move(ring), {}); }
  static Ideal unit(Ring ring);

  const Ring& ring() const { return ring_; }
  const std::vector<Polynomial>& gens() const { return gens_; }

  // Reduced basis under the context order: pairwise non-divisible monic
  // heads, fully reduced tails, sorted by increasing head monomial.
  const std::vector<Polynomial>& reduced_basis() const;

  bool is_zero() const { return reduced_basis().empty(); }
  bool is_unit() const;

  std::string str() const;  // "(g1, g2, ...)" over the raw generators

 private:
  Ring ring_;
  std::vector<Polynomial> gens_;
  struct Cache;
  std::shared_ptr<Cache> cache_;
};

// The core algorithm, exposed for tests: Buchberger with the coprime-head and
// chain criteria, normal selection by lcm degree, then reduction to the
// canonical reduced basis.
std::vector<Polynomial> buchberger_reduced(const Ring& ring, std::vector<Polynomial> gens);

std::vector<Polynomial> reduced_gb(const Ideal& ideal);

// Remainder of full division by the reduced basis of the ideal.
Polynomial normal_form(const Polynomial& f, const Ideal& ideal);
// Remainder of full division by an explicit divisor list (tried in order).
Polynomial normal_form(const Polynomial& f, const std::vector<Polynomial>& divisors);

bool membership(const Polynomial& f, const Ideal& ideal);
bool ideal_contains(const Ideal& outer, const Ideal& inner);  // inner subset of outer
bool ideal_equals(const Ideal& a, const Ideal& b);

Ideal ideal_sum(const Ideal& a, const Ideal& b);
Ideal ideal_product(const Ideal& a, const Ideal& b);
Ideal ideal_power(const Ideal& a, std::int64_t n);  // n = 0 gives the unit ideal

// Elimination-based intersection: a fresh greatest variable t, generators
// t*I and (1-t)*J, then the t-free part of the basis.
Ideal ideal_intersect(const Ideal& a, const Ideal& b);

// Rabinowitsch: f in rad(I) iff 1 in I + (1 - z*f) with z fresh.
bool radical_membership(const Polynomial& f, const Ideal& ideal);

// Deterministic generator-list hygiene: sort by poly_compare, drop duplicates
// and zeros.
std::vector<Polynomial> canonical_gens(std::vector<Polynomial> gens);

// Internal ring-extension helpers, shared with the frobenius module's tests.
Ring extend_ring_front(const Ring& ring, const std::string& hint);
Polynomial lift_to_extension(const Polynomial& f, const Ring& ext);
Polynomial restrict_from_extension(const Polynomial& f, const Ring& base);

}  // namespace fproot
