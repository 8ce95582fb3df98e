#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>

#include "pdsort/enumerate.hpp"
#include "pdsort/error.hpp"
#include "pdsort/oracles.hpp"
#include "pdsort/stretch.hpp"
#include "pdsort/text.hpp"

using namespace pdsort;

namespace {

PartitionDiagram D(const char* text, int n) { return parse_diagram(text, n); }

}  // namespace

TEST_CASE("set-composition construction and parsing") {
  const SetComposition alpha = SetComposition::parse("1,2|3|5,6,7|4");
  CHECK(alpha == SetComposition{{1, 2}, {3}, {5, 6, 7}, {4}});
  CHECK(alpha.length() == 4);
  CHECK(alpha.max_element() == 7);
  CHECK(alpha.to_string() == "1,2|3|5,6,7|4");
  CHECK(SetComposition::parse("").length() == 0);
  CHECK_THROWS_AS(SetComposition::parse("1||2"), DomainError);
  CHECK_THROWS_AS(SetComposition::parse("1,1"), DomainError);
  CHECK_THROWS_AS((SetComposition{{1}, {1, 2}}), DomainError);
  CHECK_THROWS_AS(SetComposition(std::vector<IndexMask>{0}), DomainError);
}

TEST_CASE("delta_k pads identity pairs") {
  CHECK(delta_k({Block{index_range(1, 2), index_range(1, 2)}}, 3) == D("{1,2,1',2'|3,3'}", 3));
  CHECK(delta_k({}, 2) == identity_diagram(2));
  CHECK_THROWS_AS(delta_k({Block{index_bit(4), index_bit(4)}}, 3), DomainError);
  CHECK_THROWS_AS(delta_k({Block{index_bit(1), index_bit(2)}}, 3), DomainError);
}

TEST_CASE("stretch map examples") {
  const SetComposition alpha{{1, 2}, {3}, {5, 6, 7}, {4}};
  const auto image = stretch_map(alpha, 7, identity_diagram(4));
  CHECK(image == D("{1,2,1',2'|3,3'|4,4'|5,6,7,5',6',7'}", 7));
  // Every index 1..7 is already covered by alpha, so delta_7 adds nothing.
  CHECK(alpha.cover() == index_range(1, 7));

  CHECK(stretch_map(SetComposition{{1, 3}, {2}}, 3, identity_diagram(2)) == D("{1,3,1',3'|2,2'}", 3));

  // Non-identity input: blocks are stretched on both rows independently.
  CHECK(stretch_map(SetComposition{{1, 3}, {2}}, 4, D("{1,2'|2,1'}", 2)) == D("{1,3,2'|2,1',3'|4,4'}", 4));
}

TEST_CASE("stretch map errors") {
  CHECK_THROWS_AS(stretch_map(SetComposition{{1}}, 2, identity_diagram(2)), DomainError);
  CHECK_THROWS_AS(stretch_map(SetComposition{{1}, {5}}, 4, identity_diagram(2)), DomainError);
}

TEST_CASE("the singleton composition is the identity map, n <= 3") {
  for (int n = 0; n <= 3; ++n) {
    std::vector<IndexMask> parts;
    for (int i = 1; i <= n; ++i) parts.push_back(index_bit(i));
    const SetComposition trivial(parts);
    for_each_diagram(n, [&](const PartitionDiagram& d) { CHECK(stretch_map(trivial, n, d) == d); });
  }
}

TEST_CASE("is_stretch_of_identity examples") {
  CHECK(is_stretch_of_identity(D("{1,1'|2,3,2',3'|4,4'}", 4)));
  CHECK_FALSE(is_stretch_of_identity(D("{1,2'|2,1'}", 2)));
  CHECK_FALSE(is_stretch_of_identity(D("{1,2,3,4',5',6'|4,5,6,1',2',3'|7,8,9,7',8',9'}", 9)));
  CHECK_FALSE(is_stretch_of_identity(D("{1,1'|2|2'}", 2)));
  CHECK(is_stretch_of_identity(identity_diagram(0)));
}

TEST_CASE("stretch images of identities satisfy the predicate") {
  std::mt19937_64 rng(13);
  std::uniform_int_distribution<int> pick(0, 6);
  for (int sample = 0; sample < 1000; ++sample) {
    std::vector<IndexMask> parts(7, 0);
    for (int i = 1; i <= 6; ++i) {
      const int l = pick(rng);
      if (l > 0) parts[static_cast<std::size_t>(l)] |= index_bit(i);
    }
    std::vector<IndexMask> used;
    for (std::size_t j = 1; j < parts.size(); ++j)
      if (parts[j] != 0) used.push_back(parts[j]);
    std::shuffle(used.begin(), used.end(), rng);
    const SetComposition alpha(used);
    const int k = alpha.max_element() + sample % 3;
    REQUIRE(is_stretch_of_identity(stretch_map(alpha, k, identity_diagram(alpha.length()))));
  }
}

TEST_CASE("predicate matches exhaustive search over compositions, n <= 3") {
  CHECK(oracle::set_compositions_of_subsets(2).size() == 1 + 2 + 3);  // ordered set partitions of every subset of {1,2}
  for (int n = 0; n <= 3; ++n) {
    int positives = 0;
    for_each_diagram(n, [&](const PartitionDiagram& d) {
      const bool fast = is_stretch_of_identity(d);
      positives += fast ? 1 : 0;
      REQUIRE(fast == oracle::is_stretch_of_identity_by_search(d));
    });
    // Stretches of identities in P_n are exactly the set-partitions of {1..n}.
    const std::uint64_t bell_n[] = {1, 1, 2, 5};
    CHECK(static_cast<std::uint64_t>(positives) == bell_n[n]);
  }
}
