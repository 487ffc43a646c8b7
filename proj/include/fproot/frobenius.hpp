#pragma once

#include <vector>

#include "fproot/groebner.hpp"
#include "fproot/rational.hpp"
#include "fproot/ring.hpp"

namespace fproot {

// I^[q]: ideal generated by q-th powers of the generators; independent of the
// generating set because Frobenius is flat on the polynomial ring.
Ideal bracket_power(const Ideal& ideal, std::int64_t q);

// The smallest ideal K with I contained in K^[q]: union of the Frobenius
// coefficients u_alpha over every generator. frobenius_root(I, 1) == I.
Ideal frobenius_root(const Ideal& ideal, std::int64_t q);

// ---------------------------------------------------------------------------
// submodules of a free module

struct FreeSubmodule {
  Ring ring;
  std::size_t rank = 0;
  // generator vectors of length `rank`; canonical: sorted, deduplicated,
  // zero vectors dropped
  std::vector<std::vector<Polynomial>> gens;
};

FreeSubmodule make_submodule(Ring ring, std::size_t rank,
                             std::vector<std::vector<Polynomial>> gens);
bool submodule_gens_equal(const FreeSubmodule& a, const FreeSubmodule& b);

// componentwise q-th powers of the generators (the module bracket power)
FreeSubmodule bracket_power_module(const FreeSubmodule& mod, std::int64_t q);

// Smallest K with L contained in K^[q], by componentwise coefficient
// extraction over the basis {x^alpha : alpha < q}.
FreeSubmodule frobenius_root_module(const FreeSubmodule& mod, std::int64_t q);

// Exact witness of L \subseteq root(L)^[q]: each generator reassembles from
// its extracted coefficient vectors.
bool module_root_reassembles(const FreeSubmodule& mod, std::int64_t q);

// ---------------------------------------------------------------------------
// psi and the finite-family identity checkers

// psi_s(t) = (t^s - 1)/(t - 1) = 1 + t + ... + t^(s-1), integer t >= 2.
BigRational psi(std::int64_t s, std::int64_t t);
BigInt psi_int(std::int64_t s, const BigInt& t);

// (cap I_k)^[q] == cap (I_k^[q]) for a finite family; a theorem under
// flatness, so `false` means an implementation bug, not a property of the
// input.
bool if_identity_check(const std::vector<Ideal>& family, std::int64_t q);

// root(I + J, q) == root(I, q) + root(J, q).
bool root_additivity_check(const Ideal& a, const Ideal& b, std::int64_t q);

}  // namespace fproot
