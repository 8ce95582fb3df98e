#pragma once

// Acceptance checks: worked examples, the lift and pattern-avoidance
// theorems over exhaustive ranges, the two sortability predicates against
// each other, algebraic property suites and the pinned census.

#include <array>
#include <chrono>
#include <cstdint>
#include <string>
#include <vector>

namespace pdsort {

// Stretch-stack-sortable counts in P_0..P_5 as produced by exhaustive
// enumeration. Computed here, not taken from any published table.
inline constexpr std::array<std::uint64_t, 6> kComputedSortableCounts = {1, 1, 3, 12, 56, 297};

struct VerifyOptions {
  bool deep = false;  // extend the predicate equivalence and census to P_5
  int jobs = 1;
};

struct CriterionResult {
  int id = 0;
  std::string name;
  std::vector<std::string> failures;
  std::chrono::milliseconds elapsed{0};
  std::chrono::milliseconds budget{0};

  bool passed() const { return failures.empty() && elapsed <= budget; }
};

CriterionResult check_golden_examples();
CriterionResult check_lift_theorem();
CriterionResult check_knuth_theorem();
CriterionResult check_two_stack_counts();
CriterionResult check_predicate_equivalence(const VerifyOptions& options);
CriterionResult check_property_suites();
CriterionResult check_census(const VerifyOptions& options);

std::vector<CriterionResult> run_acceptance(const VerifyOptions& options);

// "[PASS] 3 knuth: ... (12 ms / budget 5000 ms)" plus one indented line per failure.
std::string format_result(const CriterionResult& r);

}  // namespace pdsort
