// Exhaustive and randomized verification of the structural results the
// library implements, one named check per theorem.
#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace kings {

struct VerifyOptions {
  int max_n = -1;              // -1 selects the per-check default
  int jobs = 1;                // parallelism across independent instances
  std::uint64_t seed = 1709;   // randomized checks only
  bool full_filter = false;    // extend the no-prince filter past n = 8
};

struct VerificationReport {
  std::string theorem_id;
  std::string range;   // what was swept, e.g. "n=4..8"
  std::uint64_t checked = 0;
  std::vector<std::string> failures; // counterexample descriptors
  double elapsed_seconds = 0.0;

  bool ok() const { return failures.empty(); }
};

// The accepted theorem ids, in canonical order.
const std::vector<std::string>& verification_ids();

// Runs one check; failures stay empty on success. Unknown ids throw.
VerificationReport run_verification(const std::string& id, const VerifyOptions& opts = {});

} // namespace kings
