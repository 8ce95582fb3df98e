#include "pdsort/enumerate.hpp"

#include <algorithm>

namespace pdsort {

std::vector<RgsPrefix> rgs_prefixes(int n, int length) {
  length = std::clamp(length, 0, 2 * n);
  std::vector<RgsPrefix> out;
  RgsPrefix current;
  auto extend = [&](auto& self, int max_label) -> void {
    if (static_cast<int>(current.size()) == length) {
      out.push_back(current);
      return;
    }
    for (int label = 0; label <= max_label + 1; ++label) {
      current.push_back(static_cast<std::uint8_t>(label));
      self(self, std::max(max_label, label));
      current.pop_back();
    }
  };
  extend(extend, -1);
  return out;
}

std::vector<PartitionDiagram> enumerate_diagrams(int n) {
  std::vector<PartitionDiagram> out;
  for_each_diagram(n, [&out](PartitionDiagram d) { out.push_back(std::move(d)); });
  return out;
}

PartitionDiagram random_diagram(int n, std::mt19937_64& rng) {
  std::vector<Block> blocks;
  for (int pos = 0; pos < 2 * n; ++pos) {
    std::uniform_int_distribution<std::size_t> pick(0, blocks.size());
    const std::size_t label = pick(rng);
    if (label == blocks.size()) blocks.emplace_back();
    Block& b = blocks[label];
    if (pos < n) {
      b.top |= index_bit(pos + 1);
    } else {
      b.bottom |= index_bit(pos - n + 1);
    }
  }
  return diagram_from_canonical(n, std::move(blocks));
}

}  // namespace pdsort
