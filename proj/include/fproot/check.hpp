#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace fproot {

struct CheckItem {
  std::string name;
  int passed = 0;
  int failed = 0;
  std::string first_failure;  // witness of the first failing instance, if any

  bool ok() const { return failed == 0; }
};

// The identity suite behind the `check` subcommand: runs the content- and
// Frobenius-function identities over a seeded random corpus and reports one
// line per identity. Instances are independent and run in parallel; results
// merge in instance order, so output is schedule-independent.
std::vector<CheckItem> run_identity_suite(std::uint64_t seed, int instances_per_identity = 24);

}  // namespace fproot
