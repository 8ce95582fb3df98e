#pragma once

#include <chrono>
#include <cstdint>
#include <optional>

#include "pdsort/diagram.hpp"
#include "pdsort/word.hpp"

namespace pdsort {

// Positions i < j < k with p(k) < p(i) < p(j). Requires a permutation.
bool contains_231(const Word& p);

// s applied t times yields the increasing permutation.
bool is_t_stack_sortable(const Word& p, int t);

// sort_diagram(d) is a Stretch of an identity diagram.
bool is_sss_direct(const PartitionDiagram& d);

// Block-structure characterization: all blocks propagating, balanced and
// with an interval of bottom indices, and no decomposition event of the
// sort sends a block with smaller bottom interval to a later region
// (L < M_1 < ... < M_mu < R) than a block with larger bottom interval.
bool is_sss_theorem(const PartitionDiagram& d);

std::uint64_t count_t_stack_sortable(int n, int t);
inline std::uint64_t count_1_stack_sortable(int n) { return count_t_stack_sortable(n, 1); }

struct CensusOptions {
  bool check = false;  // cross-check both predicates on every diagram
  int jobs = 1;
};

struct CensusRow {
  int n = 0;
  std::uint64_t total = 0;
  std::uint64_t sortable = 0;
  std::uint64_t mismatches = 0;  // only counted with CensusOptions::check
  std::optional<PartitionDiagram> first_mismatch;
  std::chrono::milliseconds elapsed{0};
};

// Exhaustive count of stretch-stack-sortable diagrams in P_n. Results do not
// depend on the number of jobs.
CensusRow census_stretch_sortable(int n, const CensusOptions& options = {});

}  // namespace pdsort
