#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace greendecay {

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

/// Runs the structural invariants on a seeded ensemble of random dominant
/// banded matrices and compares every structured result with the dense
/// oracle: factorization, inverse reconstruction, elimination vector and
/// pivot bounds, Schur complement dominance, generator suffixes, the trailing
/// generator cross-check, and LU / Varah bound soundness.
std::vector<CheckResult> run_invariant_suite(std::uint64_t seed,
                                             std::size_t instances);

}  // namespace greendecay
