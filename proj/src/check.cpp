#include "fproot/check.hpp"

#include <functional>

#include "fproot/content.hpp"
#include "fproot/corpus.hpp"
#include "fproot/frobenius.hpp"
#include "fproot/invariants.hpp"

namespace fproot {

namespace {

struct Instance {
  bool ok = true;
  std::string detail;
};

using InstanceFn = std::function<Instance(corpus::Rng&, int)>;

CheckItem run_identity(const std::string& name, std::uint64_t seed, int instances,
                       const InstanceFn& fn) {
  CheckItem item;
  item.name = name;
  std::vector<Instance> results(static_cast<std::size_t>(instances));
  std::hash<std::string> hasher;
  const std::uint64_t name_salt = hasher(name);
#ifdef FPROOT_OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
  for (int i = 0; i < instances; ++i) {
    corpus::Rng rng(seed ^ name_salt ^ (0x51ed2701u + 0x9e3779b9u * static_cast<std::uint64_t>(i)));
    try {
      results[static_cast<std::size_t>(i)] = fn(rng, i);
    } catch (const std::exception& ex) {
      results[static_cast<std::size_t>(i)] = {false, std::string("exception: ") + ex.what()};
    }
  }
  for (const auto& r : results) {
    if (r.ok) {
      ++item.passed;
    } else {
      ++item.failed;
      if (item.first_failure.empty()) item.first_failure = r.detail;
    }
  }
  return item;
}

const std::uint64_t kPrimes[] = {2, 3, 5};

Ring pick_ring(corpus::Rng& rng) {
  std::uint64_t p = kPrimes[rng.below(3)];
  return make_ring(p, {"x", "y"});
}

std::int64_t pick_q(corpus::Rng& rng, std::uint64_t p, int max_e = 3) {
  std::int64_t q = 1;
  std::int64_t e = 1 + static_cast<std::int64_t>(rng.below(static_cast<std::uint64_t>(max_e)));
  for (std::int64_t i = 0; i < e; ++i) q *= static_cast<std::int64_t>(p);
  return q;
}

Ideal principal(const Ring& ring, Polynomial f) {
  std::vector<Polynomial> gens;
  gens.push_back(std::move(f));
  return Ideal(ring, std::move(gens));
}

}  // namespace

std::vector<CheckItem> run_identity_suite(std::uint64_t seed, int instances_per_identity) {
  std::vector<CheckItem> items;
  const int n = instances_per_identity;

  items.push_back(run_identity("frobenius-reassembly", seed, n, [](corpus::Rng& rng, int) {
    Ring ring = pick_ring(rng);
    Polynomial f = corpus::random_poly(rng, ring, 8, 6);
    std::int64_t q = pick_q(rng, ring->p);
    if (reassemble(frobenius_expand(f, q), ring) == f) return Instance{};
    return Instance{false, "f=" + f.str() + " q=" + std::to_string(q)};
  }));

  items.push_back(run_identity("root-defining-containment", seed, n, [](corpus::Rng& rng, int) {
    Ring ring = pick_ring(rng);
    Ideal ideal = corpus::random_ideal(rng, ring, 3, 6, 4);
    std::int64_t q = pick_q(rng, ring->p);
    Ideal bracket = bracket_power(frobenius_root(ideal, q), q);
    for (const auto& g : ideal.gens())
      if (!membership(g, bracket))
        return Instance{false, "I=" + ideal.str() + " q=" + std::to_string(q)};
    return Instance{};
  }));

  items.push_back(run_identity("root-composition", seed, n, [](corpus::Rng& rng, int) {
    Ring ring = pick_ring(rng);
    Ideal ideal = corpus::random_ideal(rng, ring, 3, 8, 4);
    auto p = static_cast<std::int64_t>(ring->p);
    Ideal two_step = frobenius_root(frobenius_root(ideal, p), p);
    Ideal one_step = frobenius_root(ideal, p * p);
    if (ideal_equals(two_step, one_step)) return Instance{};
    return Instance{false, "I=" + ideal.str()};
  }));

  items.push_back(run_identity("root-skew-linearity", seed, n, [](corpus::Rng& rng, int) {
    Ring ring = pick_ring(rng);
    Ideal ideal = corpus::random_ideal(rng, ring, 2, 5, 3);
    Polynomial f = corpus::random_poly(rng, ring, 3, 3);
    std::int64_t q = pick_q(rng, ring->p, 2);
    Ideal lhs = frobenius_root(ideal_product(bracket_power(principal(ring, f), q), ideal), q);
    Ideal rhs = ideal_product(principal(ring, f), frobenius_root(ideal, q));
    if (ideal_equals(lhs, rhs)) return Instance{};
    return Instance{false, "f=" + f.str() + " I=" + ideal.str() + " q=" + std::to_string(q)};
  }));

  items.push_back(run_identity("root-localization-proxy", seed, n, [](corpus::Rng& rng, int) {
    Ring ring = pick_ring(rng);
    Ideal ideal = corpus::random_ideal(rng, ring, 2, 5, 3);
    std::int64_t q = pick_q(rng, ring->p, 2);
    std::size_t var = rng.below(ring->arity());
    std::int64_t m = 1 + static_cast<std::int64_t>(rng.below(2));
    Monomial shift = Monomial::one(ring->arity());
    shift.exps[var] = q * m;
    Ideal lhs = frobenius_root(ideal_product(principal(ring, Polynomial::term(ring, shift, 1)), ideal), q);
    Monomial small = Monomial::one(ring->arity());
    small.exps[var] = m;
    Ideal rhs = ideal_product(principal(ring, Polynomial::term(ring, small, 1)),
                              frobenius_root(ideal, q));
    if (ideal_equals(lhs, rhs)) return Instance{};
    return Instance{false, "I=" + ideal.str() + " q=" + std::to_string(q)};
  }));

  items.push_back(run_identity("intersection-flatness-family", seed, n, [](corpus::Rng& rng, int) {
    Ring ring = pick_ring(rng);
    std::size_t size = 2 + rng.below(3);
    std::vector<Ideal> family;
    for (std::size_t i = 0; i < size; ++i)
      family.push_back(corpus::random_ideal(rng, ring, 2, 4, 3));
    std::int64_t q = pick_q(rng, ring->p, 2);
    if (if_identity_check(family, q)) return Instance{};
    return Instance{false, "family size " + std::to_string(size) + " q=" + std::to_string(q)};
  }));

  items.push_back(run_identity("root-additivity", seed, n, [](corpus::Rng& rng, int) {
    Ring ring = pick_ring(rng);
    Ideal a = corpus::random_ideal(rng, ring, 2, 6, 3);
    Ideal b = corpus::random_ideal(rng, ring, 2, 6, 3);
    std::int64_t q = pick_q(rng, ring->p, 2);
    if (root_additivity_check(a, b, q)) return Instance{};
    return Instance{false, "I=" + a.str() + " J=" + b.str() + " q=" + std::to_string(q)};
  }));

  items.push_back(run_identity("monomial-root-formula", seed, n, [](corpus::Rng& rng, int) {
    Ring ring = pick_ring(rng);
    std::int64_t q = pick_q(rng, ring->p);
    int count = 1 + static_cast<int>(rng.below(3));
    std::vector<Polynomial> gens, floors;
    for (int i = 0; i < count; ++i) {
      Monomial m = corpus::random_monomial(rng, ring->arity(), 12);
      gens.push_back(Polynomial::term(ring, m, 1));
      floors.push_back(Polynomial::term(ring, mono_floor_div(m, q), 1));
    }
    Ideal root = frobenius_root(Ideal(ring, gens), q);
    if (ideal_equals(root, Ideal(ring, floors))) return Instance{};
    return Instance{false, "q=" + std::to_string(q)};
  }));

  items.push_back(run_identity("content-additivity", seed, n, [](corpus::Rng& rng, int idx) {
    Ring ring = make_ring(kPrimes[rng.below(3)], {"u", "v", "x"});
    SplitContext split = make_split(ring, {"u", "v"});
    std::vector<Polynomial> gens;
    std::size_t count = 1 + rng.below(3);
    for (std::size_t i = 0; i < count; ++i) gens.push_back(corpus::random_poly(rng, ring, 4, 4));
    if (content_additivity_check(gens, split, 77777u + static_cast<std::uint64_t>(idx)))
      return Instance{};
    return Instance{false, std::to_string(count) + " generators"};
  }));

  items.push_back(run_identity("weak-content", seed, n, [](corpus::Rng& rng, int) {
    Ring ring = make_ring(kPrimes[rng.below(3)], {"u", "v", "x"});
    SplitContext split = make_split(ring, {"u", "v"});
    Polynomial f = corpus::random_poly(rng, ring, 3, 3);
    Polynomial g = corpus::random_poly(rng, ring, 3, 3);
    if (weak_content_check(f, g, split)) return Instance{};
    return Instance{false, "f=" + f.str() + " g=" + g.str()};
  }));

  items.push_back(run_identity("content-order", seed, n, [](corpus::Rng& rng, int) {
    Ring ring = make_ring(kPrimes[rng.below(3)], {"u", "x"});
    SplitContext split = make_split(ring, {"u"});
    Polynomial f = corpus::random_poly(rng, ring, 4, 4);
    Polynomial g = corpus::random_poly(rng, ring, 4, 4);
    Ideal joint = poly_content(f * g, split).ideal;
    Ideal prod = ideal_product(poly_content(f, split).ideal, poly_content(g, split).ideal);
    if (ideal_contains(prod, joint)) return Instance{};
    return Instance{false, "f=" + f.str() + " g=" + g.str()};
  }));

  items.push_back(run_identity("content-base-scaling", seed, n, [](corpus::Rng& rng, int) {
    Ring ring = make_ring(kPrimes[rng.below(3)], {"u", "v", "x"});
    SplitContext split = make_split(ring, {"u", "v"});
    Polynomial f = corpus::random_poly(rng, ring, 3, 4);
    std::size_t b = split.base_vars[rng.below(split.base_vars.size())];
    Polynomial bvar = Polynomial::variable(ring, b);
    Ideal lhs = poly_content(bvar * f, split).ideal;
    Ideal rhs = ideal_product(principal(ring, bvar), poly_content(f, split).ideal);
    if (ideal_equals(lhs, rhs)) return Instance{};
    return Instance{false, "f=" + f.str()};
  }));

  items.push_back(run_identity("content-frobenius-bridge", seed, n, [](corpus::Rng& rng, int) {
    Ring ring = pick_ring(rng);
    Polynomial f = corpus::random_poly(rng, ring, 6, 5);
    std::int64_t e = 1 + static_cast<std::int64_t>(rng.below(2));
    std::int64_t q = 1;
    for (std::int64_t i = 0; i < e; ++i) q *= static_cast<std::int64_t>(ring->p);
    if (ideal_equals(frobenius_content(f, e), frobenius_root(principal(ring, f), q)))
      return Instance{};
    return Instance{false, "f=" + f.str()};
  }));

  items.push_back(run_identity("characteristic", seed, n, [](corpus::Rng& rng, int) {
    Ring ring = pick_ring(rng);
    Polynomial f = corpus::random_poly(rng, ring, 6, 5, false);
    Polynomial acc = Polynomial::zero(ring);
    for (std::uint64_t i = 0; i < ring->p; ++i) acc = acc + f;
    if (acc.is_zero()) return Instance{};
    return Instance{false, "f=" + f.str()};
  }));

  items.push_back(run_identity("parse-print-roundtrip", seed, n, [](corpus::Rng& rng, int) {
    Ring ring = pick_ring(rng);
    Polynomial f = corpus::random_poly(rng, ring, 7, 6, false);
    if (parse_poly(f.str(), ring) == f) return Instance{};
    return Instance{false, "f=" + f.str()};
  }));

  items.push_back(run_identity("membership-soundness", seed, n, [](corpus::Rng& rng, int) {
    Ring ring = pick_ring(rng);
    Ideal ideal = corpus::random_ideal(rng, ring, 3, 5, 3);
    // explicit combination of generators must be a member
    Polynomial f = Polynomial::zero(ring);
    for (const auto& g : ideal.gens()) f = f + corpus::random_poly(rng, ring, 3, 3, false) * g;
    if (membership(f, ideal)) return Instance{};
    return Instance{false, "I=" + ideal.str()};
  }));

  items.push_back(run_identity("psi-recurrence", seed, n, [](corpus::Rng& rng, int) {
    std::int64_t t = 2 + static_cast<std::int64_t>(rng.below(8));
    std::int64_t s = static_cast<std::int64_t>(rng.below(20));
    BigRational lhs = psi(s + 1, t);
    BigRational rhs = psi(s, t) * BigRational(t) + BigRational(1);
    if (lhs == rhs) return Instance{};
    return Instance{false, "s=" + std::to_string(s) + " t=" + std::to_string(t)};
  }));

  return items;
}

}  // namespace fproot
