#include "fproot/kernels.hpp"

#include <algorithm>
#include <atomic>
#include <unordered_map>

#ifdef FPROOT_OPENMP
#include <omp.h>
#endif

namespace fproot::kernels {

namespace {
std::atomic<bool> g_parallel{true};

using TermMap = std::unordered_map<Monomial, std::uint64_t, MonomialHash>;

std::vector<Term> finalize(TermMap&& acc, Order order) {
  std::vector<Term> out;
  out.reserve(acc.size());
  for (auto& [m, c] : acc)
    if (c != 0) out.push_back(Term{m, c});
  std::sort(out.begin(), out.end(),
            [order](const Term& a, const Term& b) { return mono_compare(a.mono, b.mono, order) > 0; });
  return out;
}

void accumulate_block(TermMap& acc, const std::vector<Term>& a, std::size_t lo, std::size_t hi,
                      const std::vector<Term>& b, std::uint64_t p) {
  for (std::size_t i = lo; i < hi; ++i) {
    for (const auto& tb : b) {
      Monomial m = mono_mul(a[i].mono, tb.mono);
      std::uint64_t c = mulmod(a[i].coeff, tb.coeff, p);
      auto [it, inserted] = acc.emplace(std::move(m), c);
      if (!inserted) it->second = (it->second + c) % p;
    }
  }
}
}  // namespace

bool parallel_enabled() { return g_parallel.load(std::memory_order_relaxed); }
void set_parallel(bool on) { g_parallel.store(on, std::memory_order_relaxed); }

bool openmp_compiled() {
#ifdef FPROOT_OPENMP
  return true;
#else
  return false;
#endif
}

std::vector<Term> multiply_serial(const std::vector<Term>& a, const std::vector<Term>& b,
                                  std::uint64_t p, Order order) {
  TermMap acc;
  acc.reserve(a.size() * 2);
  accumulate_block(acc, a, 0, a.size(), b, p);
  return finalize(std::move(acc), order);
}

std::vector<Term> multiply_parallel(const std::vector<Term>& a, const std::vector<Term>& b,
                                    std::uint64_t p, Order order) {
#ifdef FPROOT_OPENMP
  int threads = omp_get_max_threads();
  if (threads <= 1) return multiply_serial(a, b, p, order);
  std::vector<TermMap> partial(static_cast<std::size_t>(threads));
#pragma omp parallel num_threads(threads)
  {
    int tid = omp_get_thread_num();
    std::size_t chunk = (a.size() + static_cast<std::size_t>(threads) - 1) /
                        static_cast<std::size_t>(threads);
    std::size_t lo = std::min(a.size(), chunk * static_cast<std::size_t>(tid));
    std::size_t hi = std::min(a.size(), lo + chunk);
    accumulate_block(partial[static_cast<std::size_t>(tid)], a, lo, hi, b, p);
  }
  // merge is order-insensitive: addition mod p is exact
  TermMap acc = std::move(partial[0]);
  for (std::size_t t = 1; t < partial.size(); ++t) {
    for (auto& [m, c] : partial[t]) {
      auto [it, inserted] = acc.emplace(m, c);
      if (!inserted) it->second = (it->second + c) % p;
    }
  }
  return finalize(std::move(acc), order);
#else
  return multiply_serial(a, b, p, order);
#endif
}

std::vector<Term> multiply(const std::vector<Term>& a, const std::vector<Term>& b, std::uint64_t p,
                           Order order) {
  // parallelism only pays off past a work threshold
  constexpr std::size_t kParallelCutoff = 1 << 14;
  if (openmp_compiled() && parallel_enabled() && a.size() * b.size() >= kParallelCutoff)
    return multiply_parallel(a, b, p, order);
  return multiply_serial(a, b, p, order);
}

}  // namespace fproot::kernels
