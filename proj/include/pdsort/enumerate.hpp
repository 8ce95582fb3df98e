#pragma once

// Exhaustive enumeration of P_n through restricted growth strings over the
// 2n nodes taken in storage order (1..n then 1'..n'). Block labels of an RGS
// appear in order of first occurrence, which is already the canonical block
// order, so each string maps to a diagram without re-sorting.

#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

#include "pdsort/diagram.hpp"
#include "pdsort/error.hpp"

namespace pdsort {

using RgsPrefix = std::vector<std::uint8_t>;

namespace detail {

class RgsWalker {
 public:
  explicit RgsWalker(int n)
      : n_(n),
        length_(2 * n),
        blocks_(static_cast<std::size_t>(2 * n)) {}

  // Fixes the first prefix.size() labels, then walks every completion.
  template <typename Fn>
  void run(const RgsPrefix& prefix, Fn& fn) {
    int max_label = -1;
    for (std::size_t i = 0; i < prefix.size(); ++i) {
      const int label = prefix[i];
      if (label > max_label + 1) throw DomainError("invalid RGS prefix");
      place(static_cast<int>(i), label);
      max_label = std::max(max_label, label);
    }
    walk(static_cast<int>(prefix.size()), max_label, fn);
    for (std::size_t i = prefix.size(); i-- > 0;) unplace(static_cast<int>(i), prefix[i]);
  }

 private:
  void place(int pos, int label) {
    Block& b = blocks_[static_cast<std::size_t>(label)];
    if (pos < n_) {
      b.top |= index_bit(pos + 1);
    } else {
      b.bottom |= index_bit(pos - n_ + 1);
    }
  }

  void unplace(int pos, int label) {
    Block& b = blocks_[static_cast<std::size_t>(label)];
    if (pos < n_) {
      b.top &= ~index_bit(pos + 1);
    } else {
      b.bottom &= ~index_bit(pos - n_ + 1);
    }
  }

  template <typename Fn>
  void walk(int pos, int max_label, Fn& fn) {
    if (pos == length_) {
      const auto count = static_cast<std::size_t>(max_label + 1);
      fn(diagram_from_canonical(
          n_, std::vector<Block>(blocks_.begin(),
                                 blocks_.begin() + static_cast<std::ptrdiff_t>(count))));
      return;
    }
    for (int label = 0; label <= max_label + 1; ++label) {
      place(pos, label);
      walk(pos + 1, std::max(max_label, label), fn);
      unplace(pos, label);
    }
  }

  int n_;
  int length_;
  std::vector<Block> blocks_;
};

}  // namespace detail

// All valid RGS prefixes of the given length (clamped to 2n), in
// lexicographic order. Their completions partition P_n.
std::vector<RgsPrefix> rgs_prefixes(int n, int length);

// Visits every diagram of P_n whose RGS starts with `prefix`.
template <typename Fn>
void for_each_diagram_with_prefix(int n, const RgsPrefix& prefix, Fn&& fn) {
  if (n < 0 || n > kMaxOrder / 2) throw DomainError("enumeration order out of range");
  if (prefix.size() > static_cast<std::size_t>(2 * n)) throw DomainError("RGS prefix too long");
  detail::RgsWalker walker(n);
  walker.run(prefix, fn);
}

// Visits every diagram of P_n exactly once (Bell(2n) diagrams).
template <typename Fn>
void for_each_diagram(int n, Fn&& fn) {
  for_each_diagram_with_prefix(n, RgsPrefix{}, fn);
}

std::vector<PartitionDiagram> enumerate_diagrams(int n);

// Random diagram of P_n: each node joins a uniformly chosen existing block or
// opens a new one. Not uniform over P_n.
PartitionDiagram random_diagram(int n, std::mt19937_64& rng);

}  // namespace pdsort
