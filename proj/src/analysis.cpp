#include "pdsort/analysis.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <thread>
#include <vector>

#include "pdsort/enumerate.hpp"
#include "pdsort/error.hpp"
#include "pdsort/sorting.hpp"
#include "pdsort/stretch.hpp"

namespace pdsort {

bool contains_231(const Word& p) {
  if (!p.is_permutation()) throw DomainError("'" + p.to_string() + "' is not a permutation");
  // For each middle position j, look for p(i) < p(j) on the left and some
  // later p(k) below that p(i). Taking the largest such p(i) suffices.
  const auto letters = p.letters();
  const std::size_t n = letters.size();
  for (std::size_t j = 1; j + 1 < n; ++j) {
    int best = 0;
    for (std::size_t i = 0; i < j; ++i) {
      if (letters[i] < letters[j]) best = std::max(best, letters[i]);
    }
    if (best == 0) continue;
    for (std::size_t k = j + 1; k < n; ++k) {
      if (letters[k] < best) return true;
    }
  }
  return false;
}

bool is_t_stack_sortable(const Word& p, int t) {
  Word w = p;
  for (int i = 0; i < t && !w.is_increasing(); ++i) w = sort_word(w);
  return w.is_increasing();
}

bool is_sss_direct(const PartitionDiagram& d) {
  return is_stretch_of_identity(sort_diagram(d));
}

namespace {

bool is_interval(IndexMask m) {
  if (m == 0) return true;
  const IndexMask shifted = m >> (lowest_index(m) - 1);
  return (shifted & (shifted + 1)) == 0;
}

// Left < M_1 < M_2 < ... < Right.
int region_rank(const Assignment& a) {
  switch (a.region) {
    case Region::Left: return 0;
    case Region::Middle: return a.group;
    case Region::Right: return std::numeric_limits<int>::max();
  }
  return 0;
}

}  // namespace

bool is_sss_theorem(const PartitionDiagram& d) {
  for (const Block& b : d.blocks()) {
    if (!b.propagating()) return false;
    if (b.top_size() != b.bottom_size()) return false;
    if (!is_interval(b.bottom)) return false;
  }
  const SortTrace trace = sort_diagram_traced(d).trace;
  for (const DecomposeEvent& e : trace.events) {
    for (const Assignment& lower : e.assignment) {
      for (const Assignment& upper : e.assignment) {
        // lower carries D_1', upper carries D_2'; both sit below B's D_3'.
        if (highest_index(lower.block.bottom) >= lowest_index(upper.block.bottom)) continue;
        if (region_rank(upper) < region_rank(lower)) return false;
      }
    }
  }
  return true;
}

std::uint64_t count_t_stack_sortable(int n, int t) {
  if (n < 1) throw DomainError("count requires n >= 1");
  std::uint64_t count = 0;
  for_each_permutation(n, [&](const Word& p) {
    if (is_t_stack_sortable(p, t)) ++count;
  });
  return count;
}

CensusRow census_stretch_sortable(int n, const CensusOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  const int prefix_length = std::min(2 * n, 6);
  const std::vector<RgsPrefix> prefixes = rgs_prefixes(n, prefix_length);

  struct Partial {
    std::uint64_t total = 0;
    std::uint64_t sortable = 0;
    std::uint64_t mismatches = 0;
    std::optional<PartitionDiagram> first_mismatch;
  };
  std::vector<Partial> partials(prefixes.size());
  std::atomic<std::size_t> next{0};

  auto worker = [&] {
    for (std::size_t i = next++; i < prefixes.size(); i = next++) {
      Partial& part = partials[i];
      for_each_diagram_with_prefix(n, prefixes[i], [&](const PartitionDiagram& d) {
        ++part.total;
        const bool direct = is_sss_direct(d);
        if (direct) ++part.sortable;
        if (options.check && direct != is_sss_theorem(d)) {
          if (part.mismatches++ == 0) part.first_mismatch = d;
        }
      });
    }
  };

  const int jobs = std::max(1, options.jobs);
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(static_cast<std::size_t>(jobs));
    for (int j = 0; j < jobs; ++j) pool.emplace_back(worker);
  }

  CensusRow row;
  row.n = n;
  for (Partial& part : partials) {
    row.total += part.total;
    row.sortable += part.sortable;
    row.mismatches += part.mismatches;
    if (!row.first_mismatch && part.first_mismatch) row.first_mismatch = std::move(part.first_mismatch);
  }
  row.elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
      std::chrono::steady_clock::now() - start);
  return row;
}

}  // namespace pdsort
