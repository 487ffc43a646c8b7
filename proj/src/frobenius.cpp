#include "fproot/frobenius.hpp"

#include <algorithm>
#include <map>

namespace fproot {

Ideal bracket_power(const Ideal& ideal, std::int64_t q) {
  require_p_power(q, *ideal.ring());
  std::vector<Polynomial> gens;
  gens.reserve(ideal.gens().size());
  for (const auto& g : ideal.gens()) gens.push_back(frobenius_scale(g, q));
  return Ideal(ideal.ring(), canonical_gens(std::move(gens)));
}

Ideal frobenius_root(const Ideal& ideal, std::int64_t q) {
  require_p_power(q, *ideal.ring());
  if (q == 1) return ideal;
  const auto& gens = ideal.gens();
  std::vector<std::vector<Polynomial>> per_gen(gens.size());
  // generator expansions are independent; the merge below is order-blind
#ifdef FPROOT_OPENMP
#pragma omp parallel for schedule(dynamic) if (gens.size() > 8)
#endif
  for (std::size_t i = 0; i < gens.size(); ++i) {
    FrobeniusDecomposition dec = frobenius_expand(gens[i], q);
    per_gen[i].reserve(dec.parts.size());
    for (auto& [alpha, part] : dec.parts) per_gen[i].push_back(std::move(part));
  }
  std::vector<Polynomial> collected;
  for (auto& chunk : per_gen)
    for (auto& u : chunk) collected.push_back(std::move(u));
  return Ideal(ideal.ring(), canonical_gens(std::move(collected)));
}

// ---------------------------------------------------------------------------
// free submodules

FreeSubmodule make_submodule(Ring ring, std::size_t rank,
                             std::vector<std::vector<Polynomial>> gens) {
  for (auto& v : gens) {
    if (v.size() != rank) throw ContextMismatch("generator vector has wrong rank");
    for (auto& c : v)
      if (c.ring()) require_same_ring(ring, c.ring());
  }
  std::erase_if(gens, [](const std::vector<Polynomial>& v) {
    return std::all_of(v.begin(), v.end(), [](const Polynomial& c) { return c.is_zero(); });
  });
  auto vec_less = [](const std::vector<Polynomial>& a, const std::vector<Polynomial>& b) {
    for (std::size_t i = 0; i < a.size(); ++i) {
      int c = poly_compare(a[i], b[i]);
      if (c != 0) return c < 0;
    }
    return false;
  };
  std::sort(gens.begin(), gens.end(), vec_less);
  gens.erase(std::unique(gens.begin(), gens.end(),
                         [](const std::vector<Polynomial>& a, const std::vector<Polynomial>& b) {
                           for (std::size_t i = 0; i < a.size(); ++i)
                             if (!(a[i] == b[i])) return false;
                           return true;
                         }),
             gens.end());
  return FreeSubmodule{std::move(ring), rank, std::move(gens)};
}

bool submodule_gens_equal(const FreeSubmodule& a, const FreeSubmodule& b) {
  if (a.rank != b.rank || a.gens.size() != b.gens.size()) return false;
  for (std::size_t i = 0; i < a.gens.size(); ++i)
    for (std::size_t j = 0; j < a.rank; ++j)
      if (!(a.gens[i][j] == b.gens[i][j])) return false;
  return true;
}

FreeSubmodule bracket_power_module(const FreeSubmodule& mod, std::int64_t q) {
  require_p_power(q, *mod.ring);
  std::vector<std::vector<Polynomial>> gens;
  gens.reserve(mod.gens.size());
  for (const auto& v : mod.gens) {
    std::vector<Polynomial> w;
    w.reserve(v.size());
    for (const auto& c : v) w.push_back(frobenius_scale(c, q));
    gens.push_back(std::move(w));
  }
  return make_submodule(mod.ring, mod.rank, std::move(gens));
}

FreeSubmodule frobenius_root_module(const FreeSubmodule& mod, std::int64_t q) {
  require_p_power(q, *mod.ring);
  if (q == 1) return mod;
  const Order order = mod.ring->order;
  auto mono_less = [order](const Monomial& a, const Monomial& b) {
    return mono_compare(a, b, order) < 0;
  };
  std::vector<std::vector<Polynomial>> out;
  for (const auto& v : mod.gens) {
    // alpha -> extracted coefficient vector; components decompose independently
    std::map<Monomial, std::vector<Polynomial>, decltype(mono_less)> rows(mono_less);
    for (std::size_t j = 0; j < mod.rank; ++j) {
      if (v[j].is_zero()) continue;
      FrobeniusDecomposition dec = frobenius_expand(v[j], q);
      for (auto& [alpha, part] : dec.parts) {
        auto it = rows.find(alpha);
        if (it == rows.end()) {
          std::vector<Polynomial> row;
          row.reserve(mod.rank);
          for (std::size_t k = 0; k < mod.rank; ++k) row.push_back(Polynomial::zero(mod.ring));
          it = rows.emplace(alpha, std::move(row)).first;
        }
        it->second[j] = std::move(part);
      }
    }
    for (auto& [alpha, row] : rows) out.push_back(std::move(row));
  }
  return make_submodule(mod.ring, mod.rank, std::move(out));
}

bool module_root_reassembles(const FreeSubmodule& mod, std::int64_t q) {
  // Componentwise identity v_j = sum_alpha x^alpha * (u_{alpha,j})^q, checked
  // exactly; this witnesses L \subseteq root(L)^[q] without module bases.
  for (const auto& v : mod.gens) {
    for (std::size_t j = 0; j < mod.rank; ++j) {
      FrobeniusDecomposition dec = frobenius_expand(v[j], q);
      if (!(reassemble(dec, mod.ring) == v[j])) return false;
    }
  }
  return true;
}

// ---------------------------------------------------------------------------
// psi

BigInt psi_int(std::int64_t s, const BigInt& t) {
  if (s < 0) throw DomainError("psi needs s >= 0");
  if (t < BigInt(2)) throw DomainError("psi needs t >= 2");
  BigInt acc(0);
  for (std::int64_t i = 0; i < s; ++i) acc = acc * t + BigInt(1);
  return acc;
}

BigRational psi(std::int64_t s, std::int64_t t) { return BigRational(psi_int(s, BigInt(t))); }

// ---------------------------------------------------------------------------
// identity checkers

bool if_identity_check(const std::vector<Ideal>& family, std::int64_t q) {
  if (family.empty()) throw DomainError("intersection-flatness check needs a nonempty family");
  for (const auto& ideal : family) require_same_ring(family[0].ring(), ideal.ring());
  require_p_power(q, *family[0].ring());
  Ideal meet = family[0];
  for (std::size_t i = 1; i < family.size(); ++i) meet = ideal_intersect(meet, family[i]);
  Ideal lhs = bracket_power(meet, q);
  Ideal rhs = bracket_power(family[0], q);
  for (std::size_t i = 1; i < family.size(); ++i)
    rhs = ideal_intersect(rhs, bracket_power(family[i], q));
  return ideal_equals(lhs, rhs);
}

bool root_additivity_check(const Ideal& a, const Ideal& b, std::int64_t q) {
  Ideal lhs = frobenius_root(ideal_sum(a, b), q);
  Ideal rhs = ideal_sum(frobenius_root(a, q), frobenius_root(b, q));
  return ideal_equals(lhs, rhs);
}

}  // namespace fproot
