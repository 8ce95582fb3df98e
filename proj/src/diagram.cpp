#include "pdsort/diagram.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "pdsort/error.hpp"

namespace pdsort {

namespace {

// Sort key realizing the storage order of a block's minimal node.
int min_key(const Block& b) {
  return b.top != 0 ? lowest_index(b.top) : kMaxOrder + lowest_index(b.bottom);
}

void sort_blocks(std::vector<Block>& blocks) {
  std::sort(blocks.begin(), blocks.end(), [](const Block& a, const Block& b) {
    return min_key(a) < min_key(b);
  });
}

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n) {
    std::iota(parent_.begin(), parent_.end(), std::size_t{0});
  }

  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent_[std::max(a, b)] = std::min(a, b);
  }

 private:
  std::vector<std::size_t> parent_;
};

}  // namespace

std::vector<int> indices_of(IndexMask m) {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(std::popcount(m)));
  while (m != 0) {
    out.push_back(lowest_index(m));
    m &= m - 1;
  }
  return out;
}

std::vector<NodeId> Block::nodes() const {
  std::vector<NodeId> out;
  for (int i : indices_of(top)) out.push_back(pdsort::top(i));
  for (int i : indices_of(bottom)) out.push_back(pdsort::bottom(i));
  return out;
}

Block make_block(std::span<const NodeId> nodes) {
  Block b;
  for (const NodeId& v : nodes) {
    if (v.index < 1 || v.index > kMaxOrder) {
      throw DomainError("node index " + std::to_string(v.index) +
                        " out of range");
    }
    IndexMask& row = v.row == Row::Top ? b.top : b.bottom;
    if (row & index_bit(v.index)) {
      throw DomainError("duplicate node " + std::to_string(v.index) +
                        (v.row == Row::Bottom ? "'" : ""));
    }
    row |= index_bit(v.index);
  }
  return b;
}

PartitionDiagram::PartitionDiagram(int order, std::vector<Block> blocks)
    : order_(order) {
  if (order < 0 || order > kMaxOrder) {
    throw DomainError("diagram order " + std::to_string(order) +
                      " outside 0.." + std::to_string(kMaxOrder));
  }
  const IndexMask all = index_range(1, order);
  IndexMask seen_top = 0;
  IndexMask seen_bottom = 0;
  blocks_.reserve(2 * static_cast<std::size_t>(order));
  for (const Block& b : blocks) {
    if (b.empty()) throw DomainError("empty block");
    if ((b.top | b.bottom) & ~all) {
      throw DomainError("node index exceeds diagram order " +
                        std::to_string(order));
    }
    if ((b.top & seen_top) || (b.bottom & seen_bottom)) {
      throw DomainError("blocks overlap");
    }
    seen_top |= b.top;
    seen_bottom |= b.bottom;
    blocks_.push_back(b);
  }
  for (int i : indices_of(all & ~seen_top)) blocks_.push_back({index_bit(i), 0});
  for (int i : indices_of(all & ~seen_bottom)) blocks_.push_back({0, index_bit(i)});
  sort_blocks(blocks_);
}

PartitionDiagram PartitionDiagram::from_nodes(
    int order, const std::vector<std::vector<NodeId>>& raw_blocks) {
  std::vector<Block> blocks;
  blocks.reserve(raw_blocks.size());
  for (const auto& nodes : raw_blocks) {
    if (nodes.empty()) throw DomainError("empty block");
    for (const NodeId& v : nodes) {
      if (v.index < 1 || v.index > order) {
        throw DomainError("node index " + std::to_string(v.index) +
                          " out of range 1.." + std::to_string(order));
      }
    }
    blocks.push_back(make_block(nodes));
  }
  return PartitionDiagram(order, std::move(blocks));
}

PartitionDiagram diagram_from_canonical(int order, std::vector<Block> blocks) {
  return PartitionDiagram(PartitionDiagram::Trusted{}, order, std::move(blocks));
}

const Block& PartitionDiagram::block_of(NodeId v) const {
  for (const Block& b : blocks_) {
    if (b.contains(v)) return b;
  }
  throw DomainError("node not in diagram");
}

std::strong_ordering operator<=>(const PartitionDiagram& a,
                                 const PartitionDiagram& b) {
  if (auto c = a.order_ <=> b.order_; c != 0) return c;
  return std::lexicographical_compare_three_way(
      a.blocks_.begin(), a.blocks_.end(), b.blocks_.begin(), b.blocks_.end(),
      [](const Block& x, const Block& y) {
        if (auto c = x.top <=> y.top; c != 0) return c;
        return x.bottom <=> y.bottom;
      });
}

std::size_t PartitionDiagram::hash() const {
  std::uint64_t h = 0xcbf29ce484222325ULL ^ static_cast<std::uint64_t>(order_);
  auto mix = [&h](std::uint64_t v) {
    h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  };
  for (const Block& b : blocks_) {
    mix(b.top);
    mix(b.bottom);
  }
  return static_cast<std::size_t>(h);
}

PartitionDiagram canonicalize(const std::vector<std::vector<NodeId>>& raw_blocks,
                              int order) {
  return PartitionDiagram::from_nodes(order, raw_blocks);
}

PartitionDiagram identity_diagram(int n) {
  if (n < 0 || n > kMaxOrder) throw DomainError("bad order");
  std::vector<Block> blocks;
  blocks.reserve(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) blocks.push_back({index_bit(i), index_bit(i)});
  return diagram_from_canonical(n, std::move(blocks));
}

int propagation_number(const PartitionDiagram& d) {
  return static_cast<int>(std::count_if(
      d.blocks().begin(), d.blocks().end(),
      [](const Block& b) { return b.propagating(); }));
}

Composite compose(const PartitionDiagram& d1, const PartitionDiagram& d2) {
  if (d1.order() != d2.order()) {
    throw DomainError("cannot compose diagrams of order " +
                      std::to_string(d1.order()) + " and " +
                      std::to_string(d2.order()));
  }
  const int n = d1.order();
  const auto un = static_cast<std::size_t>(n);
  // Node layout: [0,n) top of d1, [n,2n) middle row, [2n,3n) bottom of d2.
  UnionFind uf(3 * un);
  auto link = [&uf](const Block& b, std::size_t top_base,
                    std::size_t bottom_base) {
    std::size_t first = SIZE_MAX;
    auto attach = [&](std::size_t v) {
      if (first == SIZE_MAX) {
        first = v;
      } else {
        uf.unite(first, v);
      }
    };
    for (int i : indices_of(b.top)) attach(top_base + static_cast<std::size_t>(i - 1));
    for (int i : indices_of(b.bottom)) attach(bottom_base + static_cast<std::size_t>(i - 1));
  };
  for (const Block& b : d1.blocks()) link(b, 0, un);
  for (const Block& b : d2.blocks()) link(b, un, 2 * un);

  // Per root: projected block and whether the component touches an outer row.
  std::vector<Block> by_root(3 * un);
  std::vector<bool> outer(3 * un, false);
  std::vector<bool> used(3 * un, false);
  for (std::size_t v = 0; v < 3 * un; ++v) {
    const std::size_t r = uf.find(v);
    used[r] = true;
    const int idx = static_cast<int>(v % un) + 1;
    if (v < un) {
      by_root[r].top |= index_bit(idx);
      outer[r] = true;
    } else if (v >= 2 * un) {
      by_root[r].bottom |= index_bit(idx);
      outer[r] = true;
    }
  }
  Composite out;
  std::vector<Block> blocks;
  for (std::size_t r = 0; r < 3 * un; ++r) {
    if (!used[r]) continue;
    if (outer[r]) {
      blocks.push_back(by_root[r]);
    } else {
      ++out.middle_count;
    }
  }
  sort_blocks(blocks);
  out.diagram = diagram_from_canonical(n, std::move(blocks));
  return out;
}

}  // namespace pdsort
