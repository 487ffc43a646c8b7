#include "fproot/groebner.hpp"

#include <algorithm>
#include <mutex>
#include <set>
#include <sstream>

namespace fproot {

// ---------------------------------------------------------------------------
// Ideal

struct Ideal::Cache {
  std::once_flag once;
  std::vector<Polynomial> basis;
};

Ideal::Ideal(Ring ring, std::vector<Polynomial> gens)
    : ring_(std::move(ring)), cache_(std::make_shared<Cache>()) {
  for (auto& g : gens) {
    if (g.ring()) require_same_ring(ring_, g.ring());
    if (!g.is_zero()) gens_.push_back(std::move(g));
  }
}

Ideal Ideal::unit(Ring ring) {
  Polynomial one = Polynomial::constant(ring, 1);
  std::vector<Polynomial> gens;
  gens.push_back(std::move(one));
  return Ideal(std::move(ring), std::move(gens));
}

const std::vector<Polynomial>& Ideal::reduced_basis() const {
  std::call_once(cache_->once, [this] { cache_->basis = buchberger_reduced(ring_, gens_); });
  return cache_->basis;
}

bool Ideal::is_unit() const {
  const auto& b = reduced_basis();
  return b.size() == 1 && b[0].is_unit();
}

std::string Ideal::str() const {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < gens_.size(); ++i) {
    if (i) os << ", ";
    os << gens_[i].str();
  }
  os << ")";
  return os.str();
}

std::vector<Polynomial> canonical_gens(std::vector<Polynomial> gens) {
  std::erase_if(gens, [](const Polynomial& g) { return g.is_zero(); });
  std::sort(gens.begin(), gens.end(),
            [](const Polynomial& a, const Polynomial& b) { return poly_compare(a, b) < 0; });
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  return gens;
}

std::vector<Polynomial> reduced_gb(const Ideal& ideal) { return ideal.reduced_basis(); }

// ---------------------------------------------------------------------------
// division

Polynomial normal_form(const Polynomial& f, const std::vector<Polynomial>& divisors) {
  if (f.is_zero() || divisors.empty()) return f;
  const Ring& ring = f.ring();
  const std::uint64_t p = ring->p;
  Polynomial h = f;
  std::vector<Term> remainder;
  while (!h.is_zero()) {
    const Term& lt = h.leading_term();
    const Polynomial* hit = nullptr;
    for (const auto& d : divisors) {
      if (d.leading_term().mono.divides(lt.mono)) {
        hit = &d;
        break;
      }
    }
    if (hit) {
      std::uint64_t factor = mulmod(lt.coeff, invmod(hit->leading_term().coeff, p), p);
      Monomial shift = mono_div(lt.mono, hit->leading_term().mono);
      h = h - hit->times_term(shift, factor);
    } else {
      remainder.push_back(lt);
      h = h - Polynomial::term(ring, lt.mono, lt.coeff);
    }
  }
  return Polynomial::from_terms(ring, std::move(remainder));
}

Polynomial normal_form(const Polynomial& f, const Ideal& ideal) {
  require_same_ring(f.ring(), ideal.ring());
  return normal_form(f, ideal.reduced_basis());
}

// ---------------------------------------------------------------------------
// Buchberger

namespace {

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g) {
  const Ring& ring = f.ring();
  const std::uint64_t p = ring->p;
  Monomial lcm = mono_lcm(f.leading_term().mono, g.leading_term().mono);
  Polynomial left = f.times_term(mono_div(lcm, f.leading_term().mono),
                                 invmod(f.leading_term().coeff, p));
  Polynomial right = g.times_term(mono_div(lcm, g.leading_term().mono),
                                  invmod(g.leading_term().coeff, p));
  return left - right;
}

struct PairKey {
  std::int64_t lcm_degree;
  Monomial lcm;
  std::size_t i, j;
};

struct PairLess {
  Order order;
  bool operator()(const PairKey& a, const PairKey& b) const {
    if (a.lcm_degree != b.lcm_degree) return a.lcm_degree < b.lcm_degree;
    int c = mono_compare(a.lcm, b.lcm, order);
    if (c != 0) return c < 0;
    if (a.i != b.i) return a.i < b.i;
    return a.j < b.j;
  }
};

}  // namespace

std::vector<Polynomial> buchberger_reduced(const Ring& ring, std::vector<Polynomial> input) {
  const Order order = ring->order;

  std::vector<Polynomial> basis;
  for (auto& g : input) {
    if (g.is_zero()) continue;
    basis.push_back(g.monic());
  }
  std::sort(basis.begin(), basis.end(),
            [](const Polynomial& a, const Polynomial& b) { return poly_compare(a, b) < 0; });
  basis.erase(std::unique(basis.begin(), basis.end()), basis.end());

  if (basis.empty()) return {};
  for (const auto& g : basis)
    if (g.is_unit()) return {Polynomial::constant(ring, 1)};

  std::set<PairKey, PairLess> queue(PairLess{order});
  std::set<std::pair<std::size_t, std::size_t>> pending;
  auto push_pair = [&](std::size_t i, std::size_t j) {
    Monomial lcm = mono_lcm(basis[i].leading_term().mono, basis[j].leading_term().mono);
    queue.insert(PairKey{lcm.total_degree(), std::move(lcm), i, j});
    pending.insert({i, j});
  };
  for (std::size_t j = 1; j < basis.size(); ++j)
    for (std::size_t i = 0; i < j; ++i) push_pair(i, j);

  while (!queue.empty()) {
    PairKey pair = *queue.begin();
    queue.erase(queue.begin());
    pending.erase({pair.i, pair.j});

    const Monomial& lt_i = basis[pair.i].leading_term().mono;
    const Monomial& lt_j = basis[pair.j].leading_term().mono;

    // coprime-head criterion
    if (mono_mul(lt_i, lt_j) == pair.lcm) continue;

    // chain criterion: some k with lt_k | lcm and both mixed pairs already handled
    bool skip = false;
    for (std::size_t k = 0; k < basis.size() && !skip; ++k) {
      if (k == pair.i || k == pair.j) continue;
      if (!basis[k].leading_term().mono.divides(pair.lcm)) continue;
      auto ik = std::minmax(pair.i, k);
      auto jk = std::minmax(pair.j, k);
      if (!pending.count({ik.first, ik.second}) && !pending.count({jk.first, jk.second}))
        skip = true;
    }
    if (skip) continue;

    Polynomial h = normal_form(s_polynomial(basis[pair.i], basis[pair.j]), basis);
    if (h.is_zero()) continue;
    h = h.monic();
    if (h.is_unit()) return {Polynomial::constant(ring, 1)};
    basis.push_back(std::move(h));
    for (std::size_t i = 0; i + 1 < basis.size(); ++i) push_pair(i, basis.size() - 1);
  }

  // minimalize: drop polynomials whose head is divisible by another head
  std::vector<Polynomial> minimal;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < basis.size() && !redundant; ++j) {
      if (i == j) continue;
      const Monomial& mi = basis[i].leading_term().mono;
      const Monomial& mj = basis[j].leading_term().mono;
      if (mj.divides(mi) && (!(mi == mj) || j < i)) redundant = true;
    }
    if (!redundant) minimal.push_back(basis[i]);
  }

  // interreduce tails until stable
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < minimal.size(); ++i) {
      std::vector<Polynomial> others;
      others.reserve(minimal.size() - 1);
      for (std::size_t j = 0; j < minimal.size(); ++j)
        if (j != i) others.push_back(minimal[j]);
      Polynomial reduced = normal_form(minimal[i], others).monic();
      if (!(reduced == minimal[i])) {
        minimal[i] = std::move(reduced);
        changed = true;
      }
    }
  }

  std::sort(minimal.begin(), minimal.end(), [order](const Polynomial& a, const Polynomial& b) {
    return mono_compare(a.leading_term().mono, b.leading_term().mono, order) < 0;
  });
  return minimal;
}

// ---------------------------------------------------------------------------
// decision procedures

bool membership(const Polynomial& f, const Ideal& ideal) {
  require_same_ring(f.ring(), ideal.ring());
  return normal_form(f, ideal.reduced_basis()).is_zero();
}

bool ideal_contains(const Ideal& outer, const Ideal& inner) {
  require_same_ring(outer.ring(), inner.ring());
  for (const auto& g : inner.gens())
    if (!membership(g, outer)) return false;
  return true;
}

bool ideal_equals(const Ideal& a, const Ideal& b) {
  require_same_ring(a.ring(), b.ring());
  const auto& ba = a.reduced_basis();
  const auto& bb = b.reduced_basis();
  if (ba.size() != bb.size()) return false;
  for (std::size_t i = 0; i < ba.size(); ++i)
    if (!(ba[i] == bb[i])) return false;
  return true;
}

// ---------------------------------------------------------------------------
// arithmetic

Ideal ideal_sum(const Ideal& a, const Ideal& b) {
  require_same_ring(a.ring(), b.ring());
  std::vector<Polynomial> gens = a.gens();
  gens.insert(gens.end(), b.gens().begin(), b.gens().end());
  return Ideal(a.ring(), canonical_gens(std::move(gens)));
}

Ideal ideal_product(const Ideal& a, const Ideal& b) {
  require_same_ring(a.ring(), b.ring());
  std::vector<Polynomial> gens;
  gens.reserve(a.gens().size() * b.gens().size());
  for (const auto& f : a.gens())
    for (const auto& g : b.gens()) gens.push_back(f * g);
  return Ideal(a.ring(), canonical_gens(std::move(gens)));
}

Ideal ideal_power(const Ideal& a, std::int64_t n) {
  if (n < 0) throw DomainError("negative ideal power");
  if (n == 0) return Ideal::unit(a.ring());
  if (a.gens().size() == 1) {
    std::vector<Polynomial> gens;
    gens.push_back(poly_pow(a.gens()[0], n));
    return Ideal(a.ring(), std::move(gens));
  }
  if (n == 1) return a;
  Ideal half = ideal_power(a, n / 2);
  Ideal sq = ideal_product(half, half);
  return (n % 2) ? ideal_product(sq, a) : sq;
}

// ---------------------------------------------------------------------------
// ring extension helpers

Ring extend_ring_front(const Ring& ring, const std::string& hint) {
  std::string fresh = hint;
  int counter = 0;
  while (ring->var_index(fresh) != static_cast<std::size_t>(-1))
    fresh = hint + std::to_string(counter++);
  std::vector<std::string> vars;
  vars.reserve(ring->vars.size() + 1);
  vars.push_back(fresh);
  vars.insert(vars.end(), ring->vars.begin(), ring->vars.end());
  auto ctx = std::make_shared<RingContext>();
  ctx->p = ring->p;
  ctx->vars = std::move(vars);
  ctx->order = ring->order == Order::lex ? Order::elim1_lex : Order::elim1_grevlex;
  return ctx;
}

Polynomial lift_to_extension(const Polynomial& f, const Ring& ext) {
  std::vector<Term> terms = f.terms();
  for (auto& t : terms) t.mono.exps.insert(t.mono.exps.begin(), 0);
  return Polynomial::from_terms(ext, std::move(terms));
}

Polynomial restrict_from_extension(const Polynomial& f, const Ring& base) {
  std::vector<Term> terms = f.terms();
  for (auto& t : terms) {
    if (t.mono.exps[0] != 0) throw DomainError("polynomial involves the elimination variable");
    t.mono.exps.erase(t.mono.exps.begin());
  }
  return Polynomial::from_terms(base, std::move(terms));
}

Ideal ideal_intersect(const Ideal& a, const Ideal& b) {
  require_same_ring(a.ring(), b.ring());
  const Ring& ring = a.ring();
  Ring ext = extend_ring_front(ring, "_t");
  Polynomial t = Polynomial::variable(ext, 0);
  Polynomial one_minus_t = Polynomial::constant(ext, 1) - t;
  std::vector<Polynomial> gens;
  gens.reserve(a.gens().size() + b.gens().size());
  for (const auto& f : a.gens()) gens.push_back(t * lift_to_extension(f, ext));
  for (const auto& g : b.gens()) gens.push_back(one_minus_t * lift_to_extension(g, ext));
  std::vector<Polynomial> basis = buchberger_reduced(ext, std::move(gens));
  std::vector<Polynomial> kept;
  for (const auto& g : basis)
    if (g.leading_term().mono.exps[0] == 0)  // head t-free => whole polynomial t-free
      kept.push_back(restrict_from_extension(g, ring));
  return Ideal(ring, canonical_gens(std::move(kept)));
}

bool radical_membership(const Polynomial& f, const Ideal& ideal) {
  require_same_ring(f.ring(), ideal.ring());
  if (f.is_zero()) return true;
  const Ring& ring = ideal.ring();
  Ring ext = extend_ring_front(ring, "_z");
  Polynomial z = Polynomial::variable(ext, 0);
  std::vector<Polynomial> gens;
  gens.reserve(ideal.gens().size() + 1);
  for (const auto& g : ideal.gens()) gens.push_back(lift_to_extension(g, ext));
  gens.push_back(Polynomial::constant(ext, 1) - z * lift_to_extension(f, ext));
  std::vector<Polynomial> basis = buchberger_reduced(ext, std::move(gens));
  return basis.size() == 1 && basis[0].is_unit();
}

}  // namespace fproot
