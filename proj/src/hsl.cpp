#include "fproot/hsl.hpp"

namespace fproot {

FrobeniusActionSpec hypersurface_action(const Polynomial& f) {
  if (f.is_zero() || f.is_unit()) throw DomainError("hypersurface needs f nonzero and nonunit");
  const auto p = static_cast<std::int64_t>(f.ring()->p);
  return FrobeniusActionSpec{poly_pow(f, p - 1), 1, 1};
}

ChainReport hsl_chain(const FrobeniusActionSpec& spec, std::int64_t s_max) {
  if (s_max < 1) throw DomainError("hsl_chain needs s_max >= 1");
  if (spec.beta < 1) throw DomainError("beta must be >= 1");
  if (spec.a_exp < 0) throw DomainError("a must be >= 0");
  const Ring& ring = spec.u.ring();
  const auto p = static_cast<std::int64_t>(ring->p);
  const std::int64_t qstep = checked_pow_i64(p, spec.beta, q_cap());

  // P_s = u^(a * psi_s(p^beta)) via P_{s+1} = P_s^(p^beta) * u^a
  Polynomial u_a = poly_pow(spec.u, spec.a_exp);
  Polynomial power = Polynomial::constant(ring, 1);  // s = 0: psi_0 = 0
  std::int64_t q = 1;                                // p^(s*beta)
  std::int64_t computed_to = -1;

  auto step = [&](std::int64_t s) {
    if (s != computed_to + 1) throw DomainError("hsl chain steps must advance sequentially");
    if (s > 0) {
      if (q > q_cap() / qstep)
        throw CapExceeded("p^(s*beta) exceeds the configured cap at s=" + std::to_string(s));
      q *= qstep;
      try {
        power = frobenius_scale(power, qstep) * u_a;
      } catch (const ExponentOverflow&) {
        throw CapExceeded("multiplier exponent exceeds the cap at s=" + std::to_string(s));
      }
    }
    computed_to = s;
    std::vector<Polynomial> gens;
    gens.push_back(power);
    return frobenius_root(Ideal(ring, std::move(gens)), q);
  };
  // first confirmed equality is global here: the Matlis-dual kernels satisfy
  // ker == ker at one step implies ker stabilized at every later step
  return run_chain(step, 0, s_max, ChainDirection::descending, ChainStop::first_run);
}

HslResult hsl_compute(const Polynomial& f, std::int64_t s_max) {
  ChainReport chain = hsl_chain(hypersurface_action(f), s_max);
  if (!chain.stabilized())
    throw Unstabilized("HSL chain did not stabilize by s_max=" + std::to_string(s_max),
                       std::move(chain));
  return HslResult{*chain.stabilization_index, std::move(chain)};
}

std::int64_t hsl_number(const Polynomial& f, std::int64_t s_max) {
  return hsl_compute(f, s_max).number;
}

}  // namespace fproot
