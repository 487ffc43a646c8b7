#include "fproot/corpus.hpp"

namespace fproot::corpus {

Monomial random_monomial(Rng& rng, std::size_t arity, std::int64_t max_degree) {
  Monomial m = Monomial::one(arity);
  std::int64_t budget = static_cast<std::int64_t>(rng.below(static_cast<std::uint64_t>(max_degree + 1)));
  for (std::int64_t d = 0; d < budget; ++d)
    m.exps[rng.below(arity)] += 1;
  return m;
}

Polynomial random_poly(Rng& rng, const Ring& ring, std::int64_t max_degree, int max_terms,
                       bool nonzero) {
  int terms = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(max_terms)));
  std::vector<Term> raw;
  raw.reserve(static_cast<std::size_t>(terms));
  for (int i = 0; i < terms; ++i) {
    std::uint64_t c = rng.below(ring->p);
    raw.push_back(Term{random_monomial(rng, ring->arity(), max_degree), c});
  }
  Polynomial f = Polynomial::from_terms(ring, std::move(raw));
  if (nonzero && f.is_zero()) {
    // deterministic fallback: a fresh single term with unit coefficient
    return Polynomial::term(ring, random_monomial(rng, ring->arity(), max_degree), 1);
  }
  return f;
}

Ideal random_ideal(Rng& rng, const Ring& ring, int max_gens, std::int64_t max_degree,
                   int max_terms) {
  int count = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(max_gens)));
  std::vector<Polynomial> gens;
  gens.reserve(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) gens.push_back(random_poly(rng, ring, max_degree, max_terms));
  return Ideal(ring, std::move(gens));
}

}  // namespace fproot::corpus
