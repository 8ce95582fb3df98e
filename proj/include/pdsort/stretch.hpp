#pragma once

#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

#include "pdsort/diagram.hpp"

namespace pdsort {

// Ordered sequence of pairwise disjoint nonempty sets of positive integers.
class SetComposition {
 public:
  SetComposition() = default;
  explicit SetComposition(std::vector<IndexMask> parts);
  SetComposition(std::initializer_list<std::initializer_list<int>> parts);

  // "1,2|3|5,6,7|4"
  static SetComposition parse(std::string_view text);

  int length() const { return static_cast<int>(parts_.size()); }
  IndexMask part(int i) const { return parts_[static_cast<std::size_t>(i - 1)]; }  // 1-based
  const std::vector<IndexMask>& parts() const { return parts_; }
  IndexMask cover() const;
  int max_element() const;  // 0 when empty

  friend bool operator==(const SetComposition&, const SetComposition&) = default;

  std::string to_string() const;

 private:
  std::vector<IndexMask> parts_;
};

// Adds {i, i'} for each i <= k not already covered. The partial blocks must
// cover the same index set S on both rows, with k >= max(S).
PartitionDiagram delta_k(const std::vector<Block>& partial, int k);

// Replaces index i by the set alpha_i on both rows, then pads with delta_k.
// Requires d.order() == alpha.length() and k >= max of alpha's cover.
PartitionDiagram stretch_map(const SetComposition& alpha, int k, const PartitionDiagram& d);

// True iff every block has equal top and bottom index sets, i.e. the diagram
// is a Stretch image of an identity diagram.
bool is_stretch_of_identity(const PartitionDiagram& d);

}  // namespace pdsort
