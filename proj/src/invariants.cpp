#include "fproot/invariants.hpp"

#include <algorithm>
#include <set>

namespace fproot {

// ---------------------------------------------------------------------------
// nu

namespace {

// membership in the bracket of the maximal ideal: every term must have some
// exponent >= q
bool in_frobenius_max_ideal(const Polynomial& f, std::int64_t q) {
  for (const auto& t : f.terms()) {
    bool covered = false;
    for (auto e : t.mono.exps) {
      if (e >= q) {
        covered = true;
        break;
      }
    }
    if (!covered) return false;
  }
  return true;
}

void require_nu_input(const Polynomial& g) {
  if (g.is_zero()) throw DomainError("nu of the zero polynomial");
  if (g.is_unit()) throw DomainError("nu of a unit");
  if (!g.in_maximal_ideal())
    throw DomainError("nu needs g in the maximal ideal (zero constant term)");
}

// largest r in [known_out, known_in) with g^r outside, given the bracket
std::int64_t nu_search(const Polynomial& g, std::int64_t q, std::int64_t known_out,
                       std::int64_t known_in) {
  std::int64_t lo = known_out;  // g^lo outside
  std::int64_t hi = known_in;   // g^hi inside
  while (hi - lo > 1) {
    std::int64_t mid = lo + (hi - lo) / 2;
    if (in_frobenius_max_ideal(poly_pow(g, mid), q))
      hi = mid;
    else
      lo = mid;
  }
  return lo;
}

}  // namespace

std::vector<std::int64_t> nu_sequence(const Polynomial& g, std::int64_t e_max) {
  require_nu_input(g);
  if (e_max < 1) throw DomainError("nu needs e >= 1");
  const auto p = static_cast<std::int64_t>(g.ring()->p);
  const auto n = static_cast<std::int64_t>(g.ring()->arity());
  std::vector<std::int64_t> out;
  std::int64_t q = 1;
  std::int64_t prev = 0;
  for (std::int64_t e = 1; e <= e_max; ++e) {
    q *= p;
    if (q > q_cap()) throw CapExceeded("p^e exceeds the configured cap at e=" + std::to_string(e));
    // p*nu_e <= nu_{e+1} <= p*nu_e + p - 1, so the window is one p-block
    std::int64_t known_out = e == 1 ? 0 : prev * p;
    std::int64_t known_in = e == 1 ? n * (q - 1) + 1 : prev * p + p;
    prev = nu_search(g, q, known_out, known_in);
    out.push_back(prev);
  }
  return out;
}

std::int64_t nu(const Polynomial& g, std::int64_t e) { return nu_sequence(g, e).back(); }

// ---------------------------------------------------------------------------
// chain driver

ChainReport run_chain(const std::function<Ideal(std::int64_t)>& step, std::int64_t first_label,
                      std::int64_t last_label, ChainDirection direction, ChainStop stop) {
  ChainReport report;
  report.direction = direction;
  report.first_label = first_label;
  for (std::int64_t label = first_label; label <= last_label; ++label) {
    Ideal current = step(label);
    if (!report.ideals.empty()) {
      const Ideal& prev = report.ideals.back();
      if (direction == ChainDirection::ascending) {
        if (!ideal_contains(current, prev))
          throw DomainError("ascending chain violated at step " + std::to_string(label));
        report.containment_ok.push_back(true);
      } else if (direction == ChainDirection::descending) {
        if (!ideal_contains(prev, current))
          throw DomainError("descending chain violated at step " + std::to_string(label));
        report.containment_ok.push_back(true);
      } else {
        report.containment_ok.push_back(false);
      }
    }
    report.ideals.push_back(std::move(current));
    std::size_t n = report.ideals.size();
    if (stop == ChainStop::first_run && n >= 3 && !report.stabilized()) {
      if (ideal_equals(report.ideals[n - 3], report.ideals[n - 2]) &&
          ideal_equals(report.ideals[n - 2], report.ideals[n - 1])) {
        report.stabilization_index = first_label + static_cast<std::int64_t>(n) - 3;
        report.overshoot = 1;
        break;
      }
    }
  }
  if (stop == ChainStop::tail_run) {
    // longest constant suffix; accepted only with at least one equality plus
    // one confirmation (run of three)
    std::size_t n = report.ideals.size();
    std::size_t run = 1;
    while (run < n && ideal_equals(report.ideals[n - 1 - run], report.ideals[n - run])) ++run;
    if (run >= 3) {
      report.stabilization_index = first_label + static_cast<std::int64_t>(n - run);
      report.overshoot = static_cast<std::int64_t>(run) - 2;
    }
  }
  return report;
}

// ---------------------------------------------------------------------------
// BMS test ideals

namespace {

std::int64_t ceil_t_q(const BigRational& t, std::int64_t q) {
  return ceil_scaled(t, BigInt(q)).to_int64();
}

std::int64_t p_power_capped(std::uint64_t p, std::int64_t e) {
  try {
    return checked_pow_i64(static_cast<std::int64_t>(p), e, q_cap());
  } catch (const ExponentOverflow&) {
    throw CapExceeded("p^e exceeds the configured cap at e=" + std::to_string(e));
  }
}

Ideal bms_step(const Ideal& a, const BigRational& t, std::int64_t e) {
  std::int64_t q = p_power_capped(a.ring()->p, e);
  return frobenius_root(ideal_power(a, ceil_t_q(t, q)), q);
}

}  // namespace

BmsResult bms_test_ideal(const Ideal& a, const BigRational& t, std::int64_t e_max) {
  if (t < BigRational(0)) throw DomainError("test ideal exponent must be >= 0");
  if (e_max < 2) throw DomainError("bms_test_ideal needs e_max >= 2");
  ChainReport chain = run_chain([&](std::int64_t e) { return bms_step(a, t, e); }, 1, e_max,
                                ChainDirection::ascending, ChainStop::tail_run);
  if (!chain.stabilized())
    throw Unstabilized("test-ideal chain did not stabilize by e_max=" + std::to_string(e_max),
                       std::move(chain));
  std::size_t idx = static_cast<std::size_t>(*chain.stabilization_index - chain.first_label);
  return BmsResult{chain.ideals[idx], std::move(chain)};
}

// ---------------------------------------------------------------------------
// jumping numbers

namespace {

// Left-limit chain root((g^(ceil(t p^e) - 1)), p^e). Early steps can
// overshoot before settling, so no direction is declared.
Ideal left_step(const Polynomial& g, const BigRational& t, std::int64_t e) {
  std::int64_t q = p_power_capped(g.ring()->p, e);
  std::int64_t n = ceil_t_q(t, q) - 1;
  std::vector<Polynomial> gens;
  gens.push_back(poly_pow(g, n));
  return frobenius_root(Ideal(g.ring(), std::move(gens)), q);
}

Ideal stable_value(const ChainReport& chain, const std::string& what) {
  if (!chain.stabilized()) throw Unstabilized(what, chain);
  std::size_t idx = static_cast<std::size_t>(*chain.stabilization_index - chain.first_label);
  return chain.ideals[idx];
}

}  // namespace

Ideal tau_principal(const Polynomial& g, const BigRational& t, std::int64_t e_max) {
  if (g.is_zero()) throw DomainError("test ideal of the zero polynomial");
  if (t.is_zero()) return Ideal::unit(g.ring());
  std::vector<Polynomial> gens;
  gens.push_back(g);
  return bms_test_ideal(Ideal(g.ring(), std::move(gens)), t, e_max).tau;
}

Ideal tau_principal_left(const Polynomial& g, const BigRational& t, std::int64_t e_max) {
  if (g.is_zero()) throw DomainError("test ideal of the zero polynomial");
  if (t <= BigRational(0)) throw DomainError("left limit needs t > 0");
  ChainReport chain = run_chain([&](std::int64_t e) { return left_step(g, t, e); }, 1, e_max,
                                ChainDirection::none, ChainStop::tail_run);
  return stable_value(chain, "left-limit chain did not stabilize by e_max=" +
                                 std::to_string(e_max));
}

JumpDecision is_jumping(const Polynomial& g, const BigRational& t, std::int64_t e_max) {
  if (t <= BigRational(0)) throw DomainError("jumping numbers are positive");
  Ideal at = tau_principal(g, t, e_max);
  Ideal left = tau_principal_left(g, t, e_max);
  bool jumping = !ideal_equals(at, left);
  return JumpDecision{jumping, std::move(at), std::move(left), e_max};
}

// Depth needed to separate a candidate with denominator d from every other
// rational with denominator <= bound: two such values differ by at least
// 1/(d*bound), and a spurious plateau of the tau chain breaks once
// p^e > 2*d*bound. Clamped so p^e stays under the q cap.
static std::int64_t certification_level(std::uint64_t p, std::int64_t e_max,
                                        std::int64_t cand_den, std::int64_t den_bound) {
  unsigned __int128 wide = static_cast<unsigned __int128>(2) *
                           static_cast<unsigned __int128>(cand_den) *
                           static_cast<unsigned __int128>(den_bound);
  std::int64_t target = wide > static_cast<unsigned __int128>(q_cap())
                            ? q_cap()
                            : static_cast<std::int64_t>(wide);
  std::int64_t e = 1;
  std::int64_t power = static_cast<std::int64_t>(p);
  while (power < target && power <= q_cap() / static_cast<std::int64_t>(p)) {
    power *= static_cast<std::int64_t>(p);
    ++e;
  }
  return std::max(e_max, e);
}

// ---------------------------------------------------------------------------
// F-pure threshold

std::vector<std::int64_t> default_fpt_denominators(std::uint64_t p) {
  // 1..24 plus p^i (p^j - 1) for small i, j. The family must stay small: the
  // nu bracket narrows like p^-e_max, so ever-larger denominators would always
  // fit spurious candidates whose chains plateau before their true value.
  constexpr std::int64_t kDenCap = 120;
  std::set<std::int64_t> dens;
  for (std::int64_t d = 1; d <= 24; ++d) dens.insert(d);
  for (int i = 0; i <= 2; ++i) {
    for (int j = 1; j <= 3; ++j) {
      std::int64_t d = 1;
      bool ok = true;
      for (int k = 0; k < i && ok; ++k) {
        d *= static_cast<std::int64_t>(p);
        ok = d <= kDenCap;
      }
      std::int64_t pj = 1;
      for (int k = 0; k < j && ok; ++k) {
        pj *= static_cast<std::int64_t>(p);
        ok = pj <= kDenCap + 1;
      }
      if (ok && d * (pj - 1) >= 1 && d * (pj - 1) <= kDenCap) dens.insert(d * (pj - 1));
    }
  }
  return {dens.begin(), dens.end()};
}

ThresholdResult fpt(const Polynomial& g, std::int64_t e_max) {
  return fpt(g, e_max, default_fpt_denominators(g.ring()->p));
}

ThresholdResult fpt(const Polynomial& g, std::int64_t e_max,
                    const std::vector<std::int64_t>& denominators) {
  require_nu_input(g);
  if (e_max < 2) throw DomainError("fpt needs e_max >= 2");
  const auto p = static_cast<std::int64_t>(g.ring()->p);
  std::vector<std::int64_t> nus = nu_sequence(g, e_max);

  ThresholdResult result;
  result.e_used = e_max;
  result.lower = BigRational(0);
  result.upper = BigRational(1);
  bool first = true;
  std::int64_t q = 1;
  for (std::int64_t e = 1; e <= e_max; ++e) {
    q *= p;
    BigRational lo(BigInt(nus[static_cast<std::size_t>(e - 1)]), BigInt(q));
    BigRational hi(BigInt(nus[static_cast<std::size_t>(e - 1)] + 1), BigInt(q));
    if (first || lo > result.lower) result.lower = lo;
    if (first || hi < result.upper) result.upper = hi;
    first = false;
  }
  if (result.lower >= result.upper)
    throw DomainError("inconsistent nu brackets (implementation bug)");

  // candidates: reduced fractions k/d inside (lower, upper]
  std::set<std::pair<std::string, std::string>> seen;
  std::vector<BigRational> candidates;
  for (std::int64_t d : denominators) {
    if (d < 1) continue;
    BigInt k = (result.lower * BigRational(d)).floor() + BigInt(1);
    BigInt kend = (result.upper * BigRational(d)).floor();
    for (; k <= kend; k += BigInt(1)) {
      BigRational cand(k, BigInt(d));
      if (cand <= result.lower || cand > result.upper) continue;
      auto key = std::make_pair(cand.num().to_string(), cand.den().to_string());
      if (seen.insert(key).second) candidates.push_back(cand);
    }
  }
  std::sort(candidates.begin(), candidates.end());
  result.candidates = candidates;

  std::int64_t den_bound = 1;
  for (std::int64_t d : denominators) den_bound = std::max(den_bound, d);

  std::optional<BigRational> unique_pass;
  std::optional<JumpDecision> unique_cert;
  for (const auto& cand : candidates) {
    std::int64_t level = certification_level(g.ring()->p, e_max, cand.den().to_int64(),
                                             den_bound);
    result.e_used = std::max(result.e_used, level);
    std::optional<JumpDecision> decision;
    try {
      decision = is_jumping(g, cand, level);
    } catch (const Unstabilized&) {
      // cannot decide this candidate: certification is off the table
      return result;
    }
    if (decision->jumping) {
      if (unique_pass) {
        // two passing candidates: ambiguous, report the interval only
        return result;
      }
      unique_pass = cand;
      unique_cert = std::move(decision);
    }
  }
  if (unique_pass) {
    result.certified = unique_pass;
    result.certificate = unique_cert;
  }
  return result;
}

// ---------------------------------------------------------------------------
// jumping-number scan

JumpScan jumping_numbers(const Polynomial& g, const BigRational& lo, const BigRational& hi,
                         std::int64_t e_max, std::int64_t denom_bound) {
  if (lo < BigRational(0) || hi <= lo) throw DomainError("need 0 <= lo < hi");
  if (denom_bound < 1) throw DomainError("denominator bound must be >= 1");
  JumpScan scan;

  std::set<std::pair<std::string, std::string>> seen;
  std::vector<BigRational> candidates;
  for (std::int64_t d = 1; d <= denom_bound; ++d) {
    BigInt k = (lo * BigRational(d)).floor() + BigInt(1);
    BigInt kend = (hi * BigRational(d)).floor();
    for (; k <= kend; k += BigInt(1)) {
      BigRational cand(k, BigInt(d));
      if (cand <= lo || cand > hi) continue;
      auto key = std::make_pair(cand.num().to_string(), cand.den().to_string());
      if (seen.insert(key).second) candidates.push_back(cand);
    }
  }
  std::sort(candidates.begin(), candidates.end());

  bool all_decided = true;
  for (const auto& cand : candidates) {
    std::int64_t level =
        certification_level(g.ring()->p, e_max, cand.den().to_int64(), denom_bound);
    try {
      if (is_jumping(g, cand, level).jumping) scan.jumps.push_back(cand);
    } catch (const Unstabilized&) {
      all_decided = false;
      scan.notes.push_back("undecided candidate " + cand.to_string() +
                           " (chain unstabilized)");
    }
  }

  // Constancy between consecutive certified jumps (and the boundary
  // segments). tau is constant on [a, b) iff no jump lies in (a, b); the
  // left limit at b detects any missed jump exactly, and the midpoint value
  // is checked as well.
  bool segments_ok = true;
  try {
    std::vector<BigRational> bounds;
    bounds.push_back(lo);
    for (const auto& j : scan.jumps) bounds.push_back(j);
    if (scan.jumps.empty() || scan.jumps.back() != hi) bounds.push_back(hi);
    auto level_for = [&](const BigRational& value) {
      return certification_level(g.ring()->p, e_max, value.den().to_int64(), denom_bound);
    };
    for (std::size_t i = 0; i + 1 < bounds.size(); ++i) {
      const BigRational& a = bounds[i];
      const BigRational& b = bounds[i + 1];
      Ideal tau_a = tau_principal(g, a, level_for(a));
      BigRational mid = (a + b) / BigRational(2);
      if (!ideal_equals(tau_principal(g, mid, level_for(mid)), tau_a)) {
        segments_ok = false;
        scan.notes.push_back("tau not constant at midpoint of (" + a.to_string() + ", " +
                             b.to_string() + ")");
        continue;
      }
      bool b_certified_jump =
          std::find(scan.jumps.begin(), scan.jumps.end(), b) != scan.jumps.end();
      Ideal tau_b_side = b_certified_jump ? tau_principal_left(g, b, level_for(b))
                                          : tau_principal(g, b, level_for(b));
      if (!ideal_equals(tau_b_side, tau_a)) {
        segments_ok = false;
        scan.notes.push_back("uncertified jump detected inside (" + a.to_string() + ", " +
                             b.to_string() + (b_certified_jump ? ")" : "]"));
      }
    }
  } catch (const Unstabilized&) {
    segments_ok = false;
    scan.notes.push_back("segment check chain unstabilized by e_max");
  }

  scan.complete = all_decided && segments_ok;
  return scan;
}

}  // namespace fproot
