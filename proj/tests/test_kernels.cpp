#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fproot/corpus.hpp"
#include "fproot/kernels.hpp"

using namespace fproot;

TEST_CASE("parallel multiply matches the serial reference") {
  corpus::Rng rng(101);
  for (int i = 0; i < 40; ++i) {
    std::uint64_t p = i % 2 ? 3 : 5;
    Ring r = make_ring(p, {"x", "y", "z"});
    Polynomial a = corpus::random_poly(rng, r, 10, 40, false);
    Polynomial b = corpus::random_poly(rng, r, 10, 40, false);
    auto serial = kernels::multiply_serial(a.terms(), b.terms(), p, r->order);
    auto parallel = kernels::multiply_parallel(a.terms(), b.terms(), p, r->order);
    REQUIRE(serial.size() == parallel.size());
    for (std::size_t k = 0; k < serial.size(); ++k) {
      CHECK(serial[k].mono == parallel[k].mono);
      CHECK(serial[k].coeff == parallel[k].coeff);
    }
  }
}

TEST_CASE("parallel path on a large product") {
  // past the dispatch cutoff: > 16k term pairs
  Ring r = make_ring(2, {"x", "y"});
  corpus::Rng rng(102);
  Polynomial a = corpus::random_poly(rng, r, 40, 200, false);
  Polynomial b = corpus::random_poly(rng, r, 40, 200, false);
  auto serial = kernels::multiply_serial(a.terms(), b.terms(), r->p, r->order);
  auto parallel = kernels::multiply_parallel(a.terms(), b.terms(), r->p, r->order);
  CHECK(serial.size() == parallel.size());
  CHECK(Polynomial::from_terms(r, std::move(serial)) ==
        Polynomial::from_terms(r, std::move(parallel)));
}

TEST_CASE("dispatch honors the runtime switch") {
  Ring r = make_ring(3, {"x", "y"});
  corpus::Rng rng(103);
  Polynomial a = corpus::random_poly(rng, r, 30, 150, false);
  Polynomial b = corpus::random_poly(rng, r, 30, 150, false);
  kernels::set_parallel(false);
  Polynomial off = a * b;
  kernels::set_parallel(true);
  Polynomial on = a * b;
  CHECK(off == on);
}

TEST_CASE("multiplication is deterministic across repeats") {
  Ring r = make_ring(5, {"x", "y", "z"});
  corpus::Rng rng(104);
  Polynomial a = corpus::random_poly(rng, r, 20, 120, false);
  Polynomial b = corpus::random_poly(rng, r, 20, 120, false);
  Polynomial first = a * b;
  for (int i = 0; i < 5; ++i) CHECK(a * b == first);
}

TEST_CASE("zero and cancellation handling") {
  Ring r = make_ring(2, {"x", "y"});
  Polynomial f = parse_poly("x+y", r);
  // (x+y)^2 = x^2 + y^2 in characteristic 2: the cross terms cancel inside
  // the accumulation map
  auto out = kernels::multiply_serial(f.terms(), f.terms(), 2, r->order);
  CHECK(out.size() == 2);
  auto par = kernels::multiply_parallel(f.terms(), f.terms(), 2, r->order);
  CHECK(par.size() == 2);
}
