#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace entmeter {

struct VerifyOptions {
  std::uint64_t seed = 1;
  int trials = 20;
  /// Added to every closed-form total variance; non-zero only for fault-injection runs.
  double closed_variance_offset = 0.0;
};

struct InvariantOutcome {
  std::string name;
  bool passed = true;
  int cases = 0;
  /// Single-line JSON describing the first failing input.
  std::string counterexample;
};

struct VerifyReport {
  std::vector<InvariantOutcome> outcomes;
  bool all_passed() const;
  std::string render() const;
};

/// Runs every library invariant on seeded random inputs.
VerifyReport run_verify(const VerifyOptions& options);

}  // namespace entmeter
