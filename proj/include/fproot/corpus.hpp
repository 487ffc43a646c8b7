#pragma once

#include <cstdint>
#include <vector>

#include "fproot/groebner.hpp"

namespace fproot::corpus {

// splitmix64; self-contained so seeded corpora are identical on every
// platform (std::uniform_int_distribution is not portable).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }
  // uniform in [0, n)
  std::uint64_t below(std::uint64_t n) { return n ? next() % n : 0; }

 private:
  std::uint64_t state_;
};

Monomial random_monomial(Rng& rng, std::size_t arity, std::int64_t max_degree);
// nonzero polynomial with up to max_terms terms of degree <= max_degree;
// with allow_zero, may come out zero
Polynomial random_poly(Rng& rng, const Ring& ring, std::int64_t max_degree, int max_terms,
                       bool nonzero = true);
Ideal random_ideal(Rng& rng, const Ring& ring, int max_gens, std::int64_t max_degree,
                   int max_terms);

}  // namespace fproot::corpus
