#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "fproot/frobenius.hpp"
#include "fproot/groebner.hpp"
#include "fproot/rational.hpp"

namespace fproot {

enum class ChainDirection { ascending, descending, none };

// A computed chain of ideals with its stabilization bookkeeping. Labels are
// the natural indices of the construction (e for tau chains, s for HSL).
struct ChainReport {
  ChainDirection direction = ChainDirection::none;
  std::int64_t first_label = 0;
  std::vector<Ideal> ideals;
  // containment_ok[i]: step i+1 vs step i, verified by membership when a
  // direction is declared (always true on success; a violation throws)
  std::vector<bool> containment_ok;
  std::optional<std::int64_t> stabilization_index;  // label s with I_s == I_{s+1}
  std::int64_t overshoot = 0;  // extra confirmed-equal steps beyond the first equality

  bool stabilized() const { return stabilization_index.has_value(); }
  std::int64_t last_label() const {
    return first_label + static_cast<std::int64_t>(ideals.size()) - 1;
  }
};

// A chain failed to stabilize within its budget; carries the partial chain.
class Unstabilized : public DomainError {
 public:
  Unstabilized(const std::string& what, ChainReport partial)
      : DomainError(what), partial_(std::move(partial)) {}
  const ChainReport& partial() const { return partial_; }

 private:
  ChainReport partial_;
};

// nu_g(p^e): largest r >= 0 with g^r outside (x1^{p^e}, ..., xn^{p^e}).
// Monomial-ideal membership only, no Groebner bases. Requires g in the
// maximal ideal (nonzero, nonunit, zero constant term).
std::int64_t nu(const Polynomial& g, std::int64_t e);
std::vector<std::int64_t> nu_sequence(const Polynomial& g, std::int64_t e_max);

struct BmsResult {
  Ideal tau;
  ChainReport chain;
};

// BMS test ideal tau(a^t): stable value of root(a^ceil(t p^e), p^e), an
// ascending chain; every containment is re-verified before reporting.
// Throws Unstabilized when no confirmed stable step exists by e_max.
BmsResult bms_test_ideal(const Ideal& a, const BigRational& t, std::int64_t e_max);

struct JumpDecision {
  bool jumping = false;
  Ideal tau_at;    // tau(g^t)
  Ideal tau_left;  // tau(g^(t-)), the left limit
  std::int64_t e_used = 0;
};

// t > 0 is an F-jumping number of g iff tau(g^(t-)) != tau(g^t); the left
// limit is the stable value of root((g^(ceil(t p^e) - 1)), p^e).
JumpDecision is_jumping(const Polynomial& g, const BigRational& t, std::int64_t e_max);

struct ThresholdResult {
  BigRational lower;  // exclusive
  BigRational upper;  // inclusive
  std::optional<BigRational> certified;
  std::optional<JumpDecision> certificate;
  std::vector<BigRational> candidates;  // every bracketed candidate that was tested
  std::int64_t e_used = 0;
};

// F-pure threshold of g: nu-brackets (nu_e/p^e, (nu_e+1)/p^e] intersected
// over e <= e_max; a candidate is certified only if it is the unique
// bounded-denominator rational in the bracket that passes is_jumping.
ThresholdResult fpt(const Polynomial& g, std::int64_t e_max);
ThresholdResult fpt(const Polynomial& g, std::int64_t e_max,
                    const std::vector<std::int64_t>& denominators);

// Default certification denominators: 1..24 plus p^i*(p^j - 1) for small i, j.
std::vector<std::int64_t> default_fpt_denominators(std::uint64_t p);

struct JumpScan {
  std::vector<BigRational> jumps;  // certified, sorted
  bool complete = false;           // every inter-jump segment confirmed constant
  std::vector<std::string> notes;
};

// Certified jumping numbers of g in (lo, hi]: candidates k/d with
// d <= denom_bound filtered by is_jumping; completeness holds only when tau
// is confirmed constant between consecutive certified jumps (midpoint value
// and left-limit both checked).
JumpScan jumping_numbers(const Polynomial& g, const BigRational& lo, const BigRational& hi,
                         std::int64_t e_max, std::int64_t denom_bound);

// Stabilization detection policy.
//  - first_run: stop at the first confirmed equality (I_s == I_{s+1} and
//    I_{s+1} == I_{s+2}). Sound only when one equal step implies global
//    stabilization, as it does for the HSL kernel chains.
//  - tail_run: compute every step, then accept only a suffix of >= 3 equal
//    ideals. Test-ideal chains need this: root((g^ceil(t p^e)))^[1/p^e]
//    can plateau at small e before reaching its stable value (for example
//    g = x, p = 2, t = 16/17 sits at (x) until p^e > 17).
enum class ChainStop { first_run, tail_run };

// Shared chain driver. Directionality, when declared, is verified by
// membership at every computed step; a violation throws.
ChainReport run_chain(const std::function<Ideal(std::int64_t)>& step, std::int64_t first_label,
                      std::int64_t last_label, ChainDirection direction, ChainStop stop);

// tau(g^t) for principal g with t >= 0, unit ideal when t == 0.
Ideal tau_principal(const Polynomial& g, const BigRational& t, std::int64_t e_max);
// tau(g^(t-)) for t > 0.
Ideal tau_principal_left(const Polynomial& g, const BigRational& t, std::int64_t e_max);

}  // namespace fproot
