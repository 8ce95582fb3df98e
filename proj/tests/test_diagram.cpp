#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>

#include "pdsort/diagram.hpp"
#include "pdsort/enumerate.hpp"
#include "pdsort/error.hpp"
#include "pdsort/oracles.hpp"
#include "pdsort/text.hpp"
#include "pdsort/word.hpp"

using namespace pdsort;

namespace {

PartitionDiagram example1() {
  return canonicalize({{top(1), top(4)}, {top(2), top(3), bottom(4), bottom(5)}, {bottom(1), bottom(3)}}, 5);
}

}  // namespace

TEST_CASE("canonicalize pads singletons and sorts blocks") {
  const auto d = canonicalize({{top(1), bottom(2)}}, 2);
  CHECK(format_diagram(d) == "{1,2'|2|1'}");

  CHECK(format_diagram(example1()) == "{1,4|2,3,4',5'|5|1',3'|2'}");

  const PartitionDiagram empty = canonicalize(std::vector<std::vector<NodeId>>{}, 0);
  CHECK(empty.order() == 0);
  CHECK(empty.block_count() == 0);
}

TEST_CASE("canonicalize is idempotent and order-insensitive") {
  const auto a = canonicalize({{bottom(3), bottom(1)}, {top(4), top(1)}, {bottom(5), top(2), bottom(4), top(3)}}, 5);
  CHECK(a == example1());
  std::vector<std::vector<NodeId>> raw;
  for (const Block& b : a.blocks()) raw.push_back(b.nodes());
  CHECK(canonicalize(raw, 5) == a);
}

TEST_CASE("canonicalize rejects overlap and out-of-range nodes") {
  CHECK_THROWS_AS(canonicalize({{top(1), bottom(1)}, {top(1)}}, 2), DomainError);
  CHECK_THROWS_AS(canonicalize({{top(3)}}, 2), DomainError);
  CHECK_THROWS_AS(canonicalize({{bottom(0)}}, 2), DomainError);
  CHECK_THROWS_AS(canonicalize({{}}, 2), DomainError);
}

TEST_CASE("propagation number") {
  CHECK(propagation_number(example1()) == 1);
  CHECK(propagation_number(identity_diagram(5)) == 5);
  CHECK(propagation_number(canonicalize(std::vector<std::vector<NodeId>>{}, 4)) == 0);
}

TEST_CASE("identity diagram") {
  CHECK(identity_diagram(0).block_count() == 0);
  CHECK(format_diagram(identity_diagram(1)) == "{1,1'}");
  CHECK(format_diagram(identity_diagram(3)) == "{1,1'|2,2'|3,3'}");
}

TEST_CASE("compose: worked example and loop count") {
  const auto d2 = canonicalize({{top(1), top(3)}, {top(2), top(4), bottom(3)}, {top(5), bottom(4), bottom(5)}}, 5);
  const auto c = compose(example1(), d2);
  CHECK(format_diagram(c.diagram) == "{1,4|2,3,3',4',5'|5|1'|2'}");
  CHECK(c.middle_count == 1);

  const auto o = oracle::compose(example1(), d2);
  CHECK(o.diagram == c.diagram);
  CHECK(o.middle_count == 1);
}

TEST_CASE("compose agrees with graph-search oracle on random pairs") {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 500; ++i) {
    const int n = 1 + i % 6;
    const auto a = random_diagram(n, rng);
    const auto b = random_diagram(n, rng);
    const auto fast = compose(a, b);
    const auto slow = oracle::compose(a, b);
    REQUIRE(fast.diagram == slow.diagram);
    REQUIRE(fast.middle_count == slow.middle_count);
  }
}

TEST_CASE("compose: identity laws hold exhaustively for n <= 3") {
  for (int n = 0; n <= 3; ++n) {
    const auto id = identity_diagram(n);
    for_each_diagram(n, [&](const PartitionDiagram& d) {
      const auto l = compose(id, d);
      const auto r = compose(d, id);
      CHECK(l.diagram == d);
      CHECK(l.middle_count == 0);
      CHECK(r.diagram == d);
      CHECK(r.middle_count == 0);
    });
  }
}

TEST_CASE("compose: associativity with loop bookkeeping") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 1000; ++i) {
    const int n = 1 + i % 4;
    const auto a = random_diagram(n, rng);
    const auto b = random_diagram(n, rng);
    const auto c = random_diagram(n, rng);
    const auto ab = compose(a, b);
    const auto bc = compose(b, c);
    const auto left = compose(ab.diagram, c);
    const auto right = compose(a, bc.diagram);
    REQUIRE(left.diagram == right.diagram);
    REQUIRE(ab.middle_count + left.middle_count == bc.middle_count + right.middle_count);
  }
}

TEST_CASE("compose rejects order mismatch") {
  CHECK_THROWS_AS(compose(identity_diagram(2), identity_diagram(3)), DomainError);
}

TEST_CASE("all-singleton diagrams compose with a loop per middle node") {
  const auto s = canonicalize(std::vector<std::vector<NodeId>>{}, 3);
  const auto c = compose(s, s);
  CHECK(c.diagram == s);
  CHECK(c.middle_count == 3);
}

TEST_CASE("embed_permutation") {
  CHECK(format_diagram(embed_permutation(Word{2, 3, 1})) == "{1,2'|2,3'|3,1'}");
  CHECK(format_diagram(embed_permutation(Word{3, 1, 2})) == "{1,3'|2,1'|3,2'}");
  CHECK(embed_permutation(identity_permutation(4)) == identity_diagram(4));
  CHECK_THROWS_AS(embed_permutation(Word{1, 3}), DomainError);
}

TEST_CASE("embed_permutation is injective with full propagation") {
  for (int n = 1; n <= 5; ++n) {
    std::set<PartitionDiagram> images;
    std::size_t count = 0;
    for_each_permutation(n, [&](const Word& p) {
      const auto d = embed_permutation(p);
      CHECK(propagation_number(d) == n);
      images.insert(d);
      ++count;
    });
    CHECK(images.size() == count);
  }
}

TEST_CASE("diagram hashing follows equality") {
  std::hash<PartitionDiagram> h;
  CHECK(h(example1()) == h(parse_diagram("{2,3,4',5'|1,4|1',3'}", 5)));
  CHECK(example1() != identity_diagram(5));
}

TEST_CASE("words") {
  CHECK_THROWS_AS(Word({1, 2, 1}), DomainError);
  CHECK(Word::parse("543216") == Word{5, 4, 3, 2, 1, 6});
  CHECK(Word::parse("10,2,1").size() == 3);
  CHECK_FALSE(Word{2, 3}.is_permutation());
  CHECK(Word{}.is_increasing());
}
