#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <unordered_set>

#include "pdsort/enumerate.hpp"
#include "pdsort/oracles.hpp"
#include "pdsort/text.hpp"

using namespace pdsort;

TEST_CASE("Bell triangle oracle") {
  const std::uint64_t bells[] = {1, 1, 2, 5, 15, 52, 203, 877, 4140, 21147, 115975};
  for (int m = 0; m <= 10; ++m) CHECK(oracle::bell(m) == bells[m]);
  for (int m = 0; m <= 6; ++m) CHECK(oracle::set_partitions_by_filter(m).size() == oracle::bell(m));
}

TEST_CASE("P_1 has two diagrams") {
  const auto all = enumerate_diagrams(1);
  REQUIRE(all.size() == 2);
  CHECK(format_diagram(all[0]) == "{1,1'}");
  CHECK(format_diagram(all[1]) == "{1|1'}");
}

TEST_CASE("enumeration yields Bell(2n) distinct canonical diagrams") {
  for (int n = 0; n <= 4; ++n) {
    std::unordered_set<PartitionDiagram> seen;
    std::size_t count = 0;
    for_each_diagram(n, [&](const PartitionDiagram& d) {
      ++count;
      seen.insert(d);
      // Re-canonicalizing through the validating constructor changes nothing.
      CHECK(PartitionDiagram(n, std::vector<Block>(d.blocks().begin(), d.blocks().end())) == d);
    });
    CHECK(count == oracle::bell(2 * n));
    CHECK(seen.size() == count);
  }
}

TEST_CASE("enumeration matches the filtered set-partition generator") {
  for (int n = 1; n <= 3; ++n) {
    std::unordered_set<PartitionDiagram> from_filter;
    for (const auto& labels : oracle::set_partitions_by_filter(2 * n)) {
      std::vector<std::vector<NodeId>> raw(static_cast<std::size_t>(2 * n));
      for (int pos = 0; pos < 2 * n; ++pos) {
        raw[static_cast<std::size_t>(labels[static_cast<std::size_t>(pos)])].push_back(
            pos < n ? top(pos + 1) : bottom(pos - n + 1));
      }
      std::erase_if(raw, [](const auto& b) { return b.empty(); });
      from_filter.insert(canonicalize(raw, n));
    }
    const auto all = enumerate_diagrams(n);
    CHECK(std::unordered_set<PartitionDiagram>(all.begin(), all.end()) == from_filter);
  }
}

TEST_CASE("prefix partition covers P_n exactly once") {
  const int n = 3;
  for (int len : {0, 1, 3, 6}) {
    std::unordered_set<PartitionDiagram> seen;
    std::size_t count = 0;
    for (const RgsPrefix& prefix : rgs_prefixes(n, len)) {
      for_each_diagram_with_prefix(n, prefix, [&](const PartitionDiagram& d) {
        ++count;
        seen.insert(d);
      });
    }
    CHECK(count == 203);
    CHECK(seen.size() == 203);
  }
  CHECK(rgs_prefixes(3, 6).size() == 203);
  CHECK_THROWS_AS(for_each_diagram_with_prefix(2, RgsPrefix{1}, [](const PartitionDiagram&) {}), DomainError);
}
