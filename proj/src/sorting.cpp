#include "pdsort/sorting.hpp"

#include <algorithm>
#include <iterator>

#include "pdsort/error.hpp"
#include "pdsort/text.hpp"

namespace pdsort {

Word sort_word(const Word& w) {
  if (w.empty()) return w;
  const auto letters = w.letters();
  const auto peak = std::max_element(letters.begin(), letters.end());
  std::vector<int> out;
  out.reserve(letters.size());
  const Word left(std::vector<int>(letters.begin(), peak));
  const Word right(std::vector<int>(std::next(peak), letters.end()));
  const Word sorted_left = sort_word(left);
  const Word sorted_right = sort_word(right);
  for (int x : sorted_left.letters()) out.push_back(x);
  for (int x : sorted_right.letters()) out.push_back(x);
  out.push_back(*peak);
  return Word(std::move(out));
}

namespace {

// Positions in the order 1' < ... < n' < 1 < ... < n used for middle groups.
struct Extent {
  int lo;
  int hi;
};

Extent extent(const Block& b, int n) {
  const int lo = b.bottom != 0 ? lowest_index(b.bottom) - 1 : n + lowest_index(b.top) - 1;
  const int hi = b.top != 0 ? n + highest_index(b.top) - 1 : highest_index(b.bottom) - 1;
  return {lo, hi};
}

Region classify(const Block& beta, const Block& chosen) {
  if (beta.top != 0) {
    if (highest_index(beta.top) < lowest_index(chosen.top)) return Region::Left;
    if (lowest_index(beta.top) > highest_index(chosen.top)) return Region::Right;
  } else {
    if (highest_index(beta.bottom) < lowest_index(chosen.bottom)) return Region::Left;
    if (lowest_index(beta.bottom) > highest_index(chosen.bottom)) return Region::Right;
  }
  return Region::Middle;
}

const Block* chosen_block(const PartitionDiagram& d) {
  const Block* best = nullptr;
  for (const Block& b : d.blocks()) {
    if (b.propagating() && (best == nullptr || highest_index(b.bottom) > highest_index(best->bottom))) {
      best = &b;
    }
  }
  return best;
}

}  // namespace

Decomposition decompose(const PartitionDiagram& d) {
  const Block* chosen = chosen_block(d);
  if (chosen == nullptr) throw DomainError("decompose requires a propagating block");
  const int n = d.order();

  std::vector<Block> left;
  std::vector<Block> right;
  std::vector<Block> middle;
  for (const Block& b : d.blocks()) {
    if (b == *chosen || b.singleton()) continue;
    switch (classify(b, *chosen)) {
      case Region::Left: left.push_back(b); break;
      case Region::Right: right.push_back(b); break;
      case Region::Middle: middle.push_back(b); break;
    }
  }

  // Middle groups: connected components of overlapping extents, ordered by
  // their minimal element.
  std::sort(middle.begin(), middle.end(), [n](const Block& a, const Block& b) {
    return extent(a, n).lo < extent(b, n).lo;
  });
  std::vector<std::vector<Block>> groups;
  int reach = -1;
  for (const Block& b : middle) {
    const Extent e = extent(b, n);
    if (groups.empty() || e.lo > reach) {
      groups.emplace_back();
      reach = e.hi;
    } else {
      reach = std::max(reach, e.hi);
    }
    groups.back().push_back(b);
  }

  Decomposition out{
      .chosen = *chosen,
      .left = PartitionDiagram(n, left),
      .middle = {},
      .right = PartitionDiagram(n, right),
      .chosen_diagram = PartitionDiagram(n, {*chosen}),
      .assignment = {},
  };
  for (const Block& b : left) out.assignment.push_back({b, Region::Left, 0});
  for (std::size_t j = 0; j < groups.size(); ++j) {
    for (const Block& b : groups[j]) {
      out.assignment.push_back({b, Region::Middle, static_cast<int>(j) + 1});
    }
    out.middle.emplace_back(n, std::move(groups[j]));
  }
  for (const Block& b : right) out.assignment.push_back({b, Region::Right, 0});
  return out;
}

std::vector<PartitionDiagram> sort_factors(const PartitionDiagram& d, SortTrace* trace) {
  struct Item {
    PartitionDiagram diagram;
    bool settled;  // already a B' factor; no further expansion
  };
  std::vector<PartitionDiagram> factors;
  std::vector<Item> stack;
  stack.push_back({d, false});
  while (!stack.empty()) {
    Item item = std::move(stack.back());
    stack.pop_back();
    if (item.settled) {
      factors.push_back(std::move(item.diagram));
      continue;
    }
    if (propagation_number(item.diagram) == 0) {
      const auto blocks = item.diagram.blocks();
      if (!std::all_of(blocks.begin(), blocks.end(), [](const Block& b) { return b.singleton(); })) {
        factors.push_back(std::move(item.diagram));
      }
      continue;
    }
    Decomposition parts = decompose(item.diagram);
    if (trace != nullptr) trace->events.push_back({parts.chosen, parts.assignment});
    // Reverse push so that L is expanded first.
    stack.push_back({std::move(parts.chosen_diagram), true});
    stack.push_back({std::move(parts.right), false});
    for (auto it = parts.middle.rbegin(); it != parts.middle.rend(); ++it) {
      stack.push_back({std::move(*it), false});
    }
    stack.push_back({std::move(parts.left), false});
  }
  return factors;
}

PartitionDiagram odot_assemble(std::span<const PartitionDiagram> factors, int order) {
  std::vector<Block> blocks;
  IndexMask used_bottom = 0;
  int next_top = 1;
  auto take_top = [&](int count) {
    if (next_top + count - 1 > order) throw DomainError("factors need more than " + std::to_string(order) + " top labels");
    const IndexMask m = index_range(next_top, next_top + count - 1);
    next_top += count;
    return m;
  };
  auto keep_bottom = [&](IndexMask bottom) {
    if (used_bottom & bottom) throw DomainError("bottom label collision between factors");
    used_bottom |= bottom;
  };

  for (const PartitionDiagram& f : factors) {
    if (f.order() != order) throw DomainError("factor order mismatch");
    const int prop = propagation_number(f);
    if (prop > 1) throw DomainError("factor has more than one propagating block");
    if (prop == 1) {
      for (const Block& b : f.blocks()) {
        if (!b.propagating() && !b.singleton()) {
          throw DomainError("propagating factor carries a non-singleton side block");
        }
      }
    }
  }

  // Propagating blocks, factor order, left to right.
  for (const PartitionDiagram& f : factors) {
    for (const Block& b : f.blocks()) {
      if (!b.propagating()) continue;
      keep_bottom(b.bottom);
      blocks.push_back({take_top(b.top_size()), b.bottom});
    }
  }
  // Then non-propagating top blocks of size > 1, factor order, and by minimal
  // original top node inside a factor (the canonical block order already is).
  for (const PartitionDiagram& f : factors) {
    if (propagation_number(f) != 0) continue;
    for (const Block& b : f.blocks()) {
      if (b.singleton()) continue;
      if (b.top != 0) {
        blocks.push_back({take_top(b.top_size()), 0});
      } else {
        keep_bottom(b.bottom);
        blocks.push_back(b);
      }
    }
  }
  return PartitionDiagram(order, std::move(blocks));
}

PartitionDiagram sort_diagram(const PartitionDiagram& d) {
  if (propagation_number(d) == 0) return d;
  const auto factors = sort_factors(d);
  return odot_assemble(factors, d.order());
}

TracedSort sort_diagram_traced(const PartitionDiagram& d) {
  TracedSort out;
  if (propagation_number(d) == 0) {
    out.result = d;
    return out;
  }
  const auto factors = sort_factors(d, &out.trace);
  out.result = odot_assemble(factors, d.order());
  return out;
}

std::string format_event(const DecomposeEvent& e) {
  std::string out = "B={" + format_block({0, e.chosen.bottom}) + "}";
  auto list = [&](const std::string& name, Region region, int group) {
    out += ' ' + name + "=[";
    bool first = true;
    for (const Assignment& a : e.assignment) {
      if (a.region != region || a.group != group) continue;
      if (!first) out += ',';
      first = false;
      out += '{' + format_block(a.block) + '}';
    }
    out += ']';
  };
  int groups = 0;
  for (const Assignment& a : e.assignment) groups = std::max(groups, a.group);
  list("L", Region::Left, 0);
  for (int j = 1; j <= groups; ++j) list("M" + std::to_string(j), Region::Middle, j);
  list("R", Region::Right, 0);
  return out;
}

}  // namespace pdsort
