#pragma once

#include "fproot/invariants.hpp"

namespace fproot {

// Frobenius action [x] -> u^a [x^(p^beta)] on the top local cohomology.
// Hypersurface preset for R = S/(f): u = f^(p-1), a = 1, beta = 1.
struct FrobeniusActionSpec {
  Polynomial u;
  std::int64_t a_exp = 1;
  std::int64_t beta = 1;
};

FrobeniusActionSpec hypersurface_action(const Polynomial& f);

// Descending chain I_s = root((u^(a * psi_s(p^beta))), p^(s*beta)) for
// s = 0..s_max, every containment verified; I_0 = (1). Powers reuse the
// recurrence E_{s+1} = p^beta * E_s + a instead of fresh exponentiation.
ChainReport hsl_chain(const FrobeniusActionSpec& spec, std::int64_t s_max);

struct HslResult {
  std::int64_t number = 0;
  ChainReport chain;
};

// Stabilization index of the hypersurface chain: 0 means the Frobenius
// action is injective (I_0 = (1) corresponds to N_0 = 0).
HslResult hsl_compute(const Polynomial& f, std::int64_t s_max);
std::int64_t hsl_number(const Polynomial& f, std::int64_t s_max);

}  // namespace fproot
