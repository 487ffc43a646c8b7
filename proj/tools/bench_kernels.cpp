// Benchmark comparing the serial reference kernels against the OpenMP
// variants on representative workloads: dense-ish products, big principal
// powers, and many-generator Frobenius roots.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>

#include "fproot/corpus.hpp"
#include "fproot/frobenius.hpp"
#include "fproot/kernels.hpp"

using namespace fproot;

namespace {

double time_ms(const std::function<void()>& fn, int reps) {
  auto start = std::chrono::steady_clock::now();
  for (int i = 0; i < reps; ++i) fn();
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
             .count() /
         reps;
}

void row(const std::string& name, double serial_ms, double parallel_ms) {
  std::printf("%-34s %10.2f ms %10.2f ms %8.2fx\n", name.c_str(), serial_ms, parallel_ms,
              parallel_ms > 0 ? serial_ms / parallel_ms : 0.0);
}

}  // namespace

int main(int argc, char** argv) {
  bool quick = argc > 1 && std::string(argv[1]) == "--quick";
  const int reps = quick ? 1 : 3;
  const std::int64_t degree = quick ? 24 : 60;

  std::printf("OpenMP compiled: %s\n", kernels::openmp_compiled() ? "yes" : "no");
  std::printf("%-34s %13s %13s %9s\n", "workload", "serial", "parallel", "speedup");

  Ring ring = make_ring(5, {"x", "y", "z"});
  corpus::Rng rng(42);
  // dense-ish operands with a guaranteed term count
  auto dense_poly = [&](int terms) {
    std::vector<Term> ts;
    for (int i = 0; i < terms; ++i) {
      Monomial m = corpus::random_monomial(rng, 3, degree);
      m.exps[0] += i;  // distinct monomials
      ts.push_back(Term{std::move(m), 1 + rng.below(4)});
    }
    return Polynomial::from_terms(ring, std::move(ts));
  };
  Polynomial a = dense_poly(quick ? 60 : 400);
  Polynomial b = dense_poly(quick ? 60 : 400);

  {
    std::vector<Term> out_serial, out_parallel;
    double s = time_ms(
        [&] { out_serial = kernels::multiply_serial(a.terms(), b.terms(), ring->p, ring->order); },
        reps);
    double p = time_ms(
        [&] {
          out_parallel = kernels::multiply_parallel(a.terms(), b.terms(), ring->p, ring->order);
        },
        reps);
    row("poly multiply (" + std::to_string(a.terms().size()) + "x" +
            std::to_string(b.terms().size()) + " terms)",
        s, p);
    if (out_serial.size() != out_parallel.size()) {
      std::fprintf(stderr, "kernel mismatch!\n");
      return 1;
    }
  }

  {
    Ring r2 = make_ring(7, {"x", "y"});
    Polynomial g = parse_poly("x^2+y^3", r2);
    std::int64_t n = quick ? 400 : 2400;
    kernels::set_parallel(false);
    double s = time_ms([&] { (void)poly_pow(g, n); }, reps);
    kernels::set_parallel(true);
    double p = time_ms([&] { (void)poly_pow(g, n); }, reps);
    row("principal power g^" + std::to_string(n), s, p);
  }

  {
    Ring r2 = make_ring(2, {"x", "y"});
    corpus::Rng rng2(7);
    std::vector<Polynomial> gens;
    for (int i = 0; i < (quick ? 40 : 160); ++i)
      gens.push_back(corpus::random_poly(rng2, r2, 40, 30));
    Ideal ideal(r2, gens);
    kernels::set_parallel(false);
    double s = time_ms([&] { (void)frobenius_root(ideal, 4); }, reps);
    kernels::set_parallel(true);
    double p = time_ms([&] { (void)frobenius_root(ideal, 4); }, reps);
    row("frobenius root, " + std::to_string(gens.size()) + " generators", s, p);
  }

  return 0;
}
