#pragma once

// West's stack-sorting map on words and its lift to partition diagrams.
//
// The lift picks the propagating block B holding the largest bottom node,
// splits the remaining blocks into a left part, middle groups and a right
// part, sorts each part recursively, and glues the resulting factors back
// together with fresh consecutive top labels (propagating blocks first)
// while bottom labels of non-singleton blocks are kept.

#include <span>
#include <string>
#include <vector>

#include "pdsort/diagram.hpp"
#include "pdsort/word.hpp"

namespace pdsort {

// s(L n R) = s(L) s(R) n, with s(empty) = empty.
Word sort_word(const Word& w);

enum class Region : std::uint8_t { Left, Middle, Right };

struct Assignment {
  Block block;
  Region region = Region::Left;
  int group = 0;  // 1-based middle group index; 0 for Left/Right

  friend bool operator==(const Assignment&, const Assignment&) = default;
};

struct Decomposition {
  Block chosen;                         // B
  PartitionDiagram left;                // L
  std::vector<PartitionDiagram> middle;  // M_1 < ... < M_mu
  PartitionDiagram right;               // R
  PartitionDiagram chosen_diagram;      // B plus singletons
  std::vector<Assignment> assignment;   // every non-singleton block except B

  int middle_count() const { return static_cast<int>(middle.size()); }
};

// Requires at least one propagating block; throws DomainError otherwise.
Decomposition decompose(const PartitionDiagram& d);

struct DecomposeEvent {
  Block chosen;
  std::vector<Assignment> assignment;
};

struct SortTrace {
  std::vector<DecomposeEvent> events;  // in depth-first, left-to-right order
};

PartitionDiagram sort_diagram(const PartitionDiagram& d);

struct TracedSort {
  PartitionDiagram result;
  SortTrace trace;
};

TracedSort sort_diagram_traced(const PartitionDiagram& d);

// Glues a factor list of non-propagating diagrams and single-propagating-
// block diagrams into one diagram of the given order.
PartitionDiagram odot_assemble(std::span<const PartitionDiagram> factors, int order);

// Flattened factor list produced by fully expanding the recursion; the
// input of odot_assemble. All-singleton factors are dropped.
std::vector<PartitionDiagram> sort_factors(const PartitionDiagram& d,
                                           SortTrace* trace = nullptr);

// "B={7'} L=[{1,2},{4,3'}] M1=[...] R=[]"
std::string format_event(const DecomposeEvent& e);

}  // namespace pdsort
