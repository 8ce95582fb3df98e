#pragma once

// Partition diagrams: set-partitions of {1..n} ∪ {1'..n'}.
//
// Blocks are stored as a pair of bit masks (bit i-1 set <=> index i present)
// so the supported order is at most kMaxOrder. A diagram always lists every
// one of its 2n nodes; missing nodes are padded as singleton blocks and the
// block list is kept sorted by each block's minimal node under the storage
// order 1 < 2 < ... < n < 1' < 2' < ... < n'.

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <utility>
#include <vector>

namespace pdsort {

inline constexpr int kMaxOrder = 64;

using IndexMask = std::uint64_t;

enum class Row : std::uint8_t { Top, Bottom };

struct NodeId {
  Row row = Row::Top;
  int index = 1;

  // Storage order: all top nodes before all bottom nodes.
  friend constexpr auto operator<=>(const NodeId&, const NodeId&) = default;
};

constexpr NodeId top(int i) { return {Row::Top, i}; }
constexpr NodeId bottom(int i) { return {Row::Bottom, i}; }

constexpr IndexMask index_bit(int i) { return IndexMask{1} << (i - 1); }

// Mask with bits for indices lo..hi inclusive; empty when hi < lo.
constexpr IndexMask index_range(int lo, int hi) {
  if (hi < lo) return 0;
  const int len = hi - lo + 1;
  const IndexMask ones = len >= 64 ? ~IndexMask{0} : (IndexMask{1} << len) - 1;
  return ones << (lo - 1);
}

constexpr int lowest_index(IndexMask m) { return std::countr_zero(m) + 1; }
constexpr int highest_index(IndexMask m) { return 64 - std::countl_zero(m); }

std::vector<int> indices_of(IndexMask m);

struct Block {
  IndexMask top = 0;
  IndexMask bottom = 0;

  bool empty() const { return top == 0 && bottom == 0; }
  bool propagating() const { return top != 0 && bottom != 0; }
  int top_size() const { return std::popcount(top); }
  int bottom_size() const { return std::popcount(bottom); }
  int size() const { return top_size() + bottom_size(); }
  bool singleton() const { return size() == 1; }

  // Minimal node under the storage order.
  NodeId min_node() const {
    return top != 0 ? NodeId{Row::Top, lowest_index(top)}
                    : NodeId{Row::Bottom, lowest_index(bottom)};
  }

  bool contains(NodeId v) const {
    return ((v.row == Row::Top ? top : bottom) & index_bit(v.index)) != 0;
  }

  std::vector<NodeId> nodes() const;

  friend constexpr bool operator==(const Block&, const Block&) = default;
};

Block make_block(std::span<const NodeId> nodes);

class PartitionDiagram {
 public:
  PartitionDiagram() = default;

  // Validates disjointness and index range, pads missing nodes with
  // singletons and canonicalizes. Throws DomainError.
  PartitionDiagram(int order, std::vector<Block> blocks);

  static PartitionDiagram from_nodes(
      int order, const std::vector<std::vector<NodeId>>& raw_blocks);

  int order() const { return order_; }
  std::span<const Block> blocks() const { return blocks_; }
  std::size_t block_count() const { return blocks_.size(); }

  // Block containing the given node.
  const Block& block_of(NodeId v) const;

  friend bool operator==(const PartitionDiagram&,
                         const PartitionDiagram&) = default;
  friend std::strong_ordering operator<=>(const PartitionDiagram& a,
                                          const PartitionDiagram& b);

  std::size_t hash() const;

 private:
  struct Trusted {};
  PartitionDiagram(Trusted, int order, std::vector<Block> blocks)
      : order_(order), blocks_(std::move(blocks)) {}

  friend PartitionDiagram diagram_from_canonical(int order,
                                                 std::vector<Block> blocks);

  int order_ = 0;
  std::vector<Block> blocks_;
};

// Skips validation; `blocks` must already be a canonical covering.
PartitionDiagram diagram_from_canonical(int order, std::vector<Block> blocks);

PartitionDiagram canonicalize(const std::vector<std::vector<NodeId>>& raw_blocks,
                              int order);

PartitionDiagram identity_diagram(int n);

int propagation_number(const PartitionDiagram& d);

struct Composite {
  PartitionDiagram diagram;
  int middle_count = 0;  // components lying entirely in the middle row
};

// Stacks d1 on top of d2 and removes the middle row.
Composite compose(const PartitionDiagram& d1, const PartitionDiagram& d2);

}  // namespace pdsort

template <>
struct std::hash<pdsort::PartitionDiagram> {
  std::size_t operator()(const pdsort::PartitionDiagram& d) const noexcept {
    return d.hash();
  }
};
