#pragma once

#include <cstdint>
#include <vector>

#include "fproot/ring.hpp"

namespace fproot::kernels {

// Kernels come in pairs: a plain serial reference and an OpenMP variant.
// Both produce the identical canonical term vector -- arithmetic is exact
// mod p, so merge order cannot change the result. The dispatching wrappers
// pick the OpenMP path for large inputs when it is compiled in and enabled.

bool parallel_enabled();
void set_parallel(bool on);
bool openmp_compiled();

// term-by-term product accumulation; output is canonical (descending, no zeros)
std::vector<Term> multiply_serial(const std::vector<Term>& a, const std::vector<Term>& b,
                                  std::uint64_t p, Order order);
std::vector<Term> multiply_parallel(const std::vector<Term>& a, const std::vector<Term>& b,
                                    std::uint64_t p, Order order);
std::vector<Term> multiply(const std::vector<Term>& a, const std::vector<Term>& b,
                           std::uint64_t p, Order order);

}  // namespace fproot::kernels
