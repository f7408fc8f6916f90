#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace hklat {

struct SelftestOptions {
  int grid_max = 8;          // (d, m) grids run over [2, grid_max]^2
  int degree_max = 200;      // isotropic brute-force: even degrees up to this
  int coeff_bound = 100;     // ... with coefficients |a|, |b| up to this
  int samples = 300;         // random vectors per randomized property
  std::uint64_t seed = 20260826;
  bool inject_fault = false;  // deliberately break one check (test the tester)
};

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct SelftestReport {
  std::vector<CheckResult> checks;
  bool all_pass = false;
};

// Re-derives the pinned identities and compares solver output against
// brute-force oracles; deterministic for a fixed seed.
SelftestReport run_selftest(const SelftestOptions& opt);

}  // namespace hklat
