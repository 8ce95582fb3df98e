#pragma once

// Slow, independent reference computations used to check the fast paths.
// Nothing here calls the sorting or predicate code it is meant to check.

#include <cstdint>
#include <vector>

#include "pdsort/diagram.hpp"
#include "pdsort/stretch.hpp"
#include "pdsort/word.hpp"

namespace pdsort::oracle {

// Bell numbers via the Bell triangle.
std::uint64_t bell(int m);

// Every set-partition of {0..m-1}, generated by filtering all maps
// {0..m-1} -> {0..m-1} down to first-occurrence labelings. m <= 7.
std::vector<std::vector<int>> set_partitions_by_filter(int m);

// Single pass through one stack: pop while the top is smaller than the
// incoming letter, then push; drain at the end.
Word stack_sort(const Word& w);

// Triple loop over i < j < k.
bool contains_231(const Word& p);

// Graph search over the stacked 3n-node graph.
struct Composite {
  PartitionDiagram diagram;
  int middle_count = 0;
};
Composite compose(const PartitionDiagram& d1, const PartitionDiagram& d2);

// Searches all set-compositions alpha of subsets of {1..n} for
// d == stretch_map(alpha, n, identity_diagram(length(alpha))).
bool is_stretch_of_identity_by_search(const PartitionDiagram& d);

std::vector<SetComposition> set_compositions_of_subsets(int n);

// n-th Catalan number and the two-stack-sortable count 2(3n)!/((n+1)!(2n+1)!).
std::uint64_t catalan(int n);
std::uint64_t two_stack_sortable(int n);

}  // namespace pdsort::oracle
