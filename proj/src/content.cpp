#include "fproot/content.hpp"

#include <algorithm>
#include <map>

#include "fproot/corpus.hpp"
#include "fproot/frobenius.hpp"

namespace fproot {

SplitContext make_split(const Ring& ring, const std::vector<std::string>& base_names) {
  std::vector<bool> is_base(ring->arity(), false);
  for (const auto& name : base_names) {
    std::size_t idx = ring->var_index(name);
    if (idx == static_cast<std::size_t>(-1))
      throw DomainError("base variable '" + name + "' is not in the ring");
    if (is_base[idx]) throw DomainError("base variable '" + name + "' listed twice");
    is_base[idx] = true;
  }
  SplitContext split;
  split.ring = ring;
  for (std::size_t i = 0; i < ring->arity(); ++i)
    (is_base[i] ? split.base_vars : split.ext_vars).push_back(i);
  return split;
}

namespace {

Monomial project(const Monomial& m, const std::vector<std::size_t>& keep, std::size_t arity) {
  Monomial out = Monomial::one(arity);
  for (auto i : keep) out.exps[i] = m.exps[i];
  return out;
}

}  // namespace

ContentIdeal poly_content(const Polynomial& f, const SplitContext& split) {
  require_same_ring(f.ring(), split.ring);
  const Order order = split.ring->order;
  auto less = [order](const Monomial& a, const Monomial& b) {
    return mono_compare(a, b, order) < 0;
  };
  // group terms by their extension-variable part; each group is a coefficient
  std::map<Monomial, std::vector<Term>, decltype(less)> groups(less);
  const std::size_t arity = split.ring->arity();
  for (const auto& t : f.terms()) {
    Monomial ext = project(t.mono, split.ext_vars, arity);
    Monomial base = project(t.mono, split.base_vars, arity);
    groups[std::move(ext)].push_back(Term{std::move(base), t.coeff});
  }
  std::vector<Polynomial> gens;
  gens.reserve(groups.size());
  for (auto& [ext, terms] : groups)
    gens.push_back(Polynomial::from_terms(split.ring, std::move(terms)));
  return ContentIdeal{Ideal(split.ring, canonical_gens(std::move(gens)))};
}

bool content_additivity_check(const std::vector<Polynomial>& gens, const SplitContext& split,
                              std::uint64_t seed, int samples) {
  Ideal sum = Ideal::zero(split.ring);
  for (const auto& g : gens) sum = ideal_sum(sum, poly_content(g, split).ideal);

  // each generator must lie in (sum of contents) * S
  for (const auto& g : gens)
    if (!membership(g, sum)) return false;

  // sampled S-combinations h = sum r_i g_i: c(h) must stay inside the sum
  corpus::Rng rng(seed);
  for (int it = 0; it < samples; ++it) {
    Polynomial h = Polynomial::zero(split.ring);
    for (const auto& g : gens) {
      Polynomial r = corpus::random_poly(rng, split.ring, 2, 3, false);
      h = h + r * g;
    }
    ContentIdeal ch = poly_content(h, split);
    for (const auto& c : ch.ideal.gens())
      if (!membership(c, sum)) return false;
  }
  return true;
}

bool weak_content_check(const Polynomial& f, const Polynomial& g, const SplitContext& split) {
  Ideal prod = ideal_product(poly_content(f, split).ideal, poly_content(g, split).ideal);
  Ideal joint = poly_content(f * g, split).ideal;
  for (const auto& h : prod.gens())
    if (!radical_membership(h, joint)) return false;
  for (const auto& h : joint.gens())
    if (!radical_membership(h, prod)) return false;
  return true;
}

bool gaussian_check(const Polynomial& f, const Polynomial& g, const SplitContext& split) {
  Ideal prod = ideal_product(poly_content(f, split).ideal, poly_content(g, split).ideal);
  Ideal joint = poly_content(f * g, split).ideal;
  return ideal_equals(prod, joint);
}

Ideal frobenius_content(const Polynomial& f, std::int64_t e) {
  if (e < 0) throw DomainError("Frobenius level must be >= 0");
  std::int64_t q = checked_pow_i64(static_cast<std::int64_t>(f.ring()->p), e, q_cap());
  std::vector<Polynomial> gens;
  gens.push_back(f);
  return frobenius_root(Ideal(f.ring(), std::move(gens)), q);
}

}  // namespace fproot
