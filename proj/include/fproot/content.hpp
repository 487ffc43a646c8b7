#pragma once

#include <vector>

#include "fproot/groebner.hpp"

namespace fproot {

// Partition of the ring variables into a base block R and an extension block,
// so the full ring is S = R[extension vars]. The base block may be empty
// (R = F_p); content ideals are represented inside the full ring with
// generators that involve base variables only.
struct SplitContext {
  Ring ring;
  std::vector<std::size_t> base_vars;  // sorted indices
  std::vector<std::size_t> ext_vars;   // sorted indices, complement
};

SplitContext make_split(const Ring& ring, const std::vector<std::string>& base_names);

struct ContentIdeal {
  Ideal ideal;  // generators involve only base variables
};

// Ohm-Rush content for the free extension: the ideal of R generated by the
// coefficients of f as a polynomial in the extension variables.
ContentIdeal poly_content(const Polynomial& f, const SplitContext& split);

// c(ideal generated by gens as an S-ideal) == sum of c(gen_i): the sum is
// checked to contain each generator exactly (f in c(f)S), and sampled
// S-combinations of the generators must keep their content inside the sum.
bool content_additivity_check(const std::vector<Polynomial>& gens, const SplitContext& split,
                              std::uint64_t seed = 2026, int samples = 8);

// rad(c(f)c(g)) == rad(c(fg)), via mutual radical membership of generators.
bool weak_content_check(const Polynomial& f, const Polynomial& g, const SplitContext& split);

// c(fg) == c(f)c(g) exactly; a genuine predicate that can fail.
bool gaussian_check(const Polynomial& f, const Polynomial& g, const SplitContext& split);

// Content with respect to the e-fold Frobenius algebra: coincides with
// frobenius_root((f), p^e).
Ideal frobenius_content(const Polynomial& f, std::int64_t e);

}  // namespace fproot
