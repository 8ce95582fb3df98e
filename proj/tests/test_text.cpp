#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "pdsort/enumerate.hpp"
#include "pdsort/error.hpp"
#include "pdsort/text.hpp"

using namespace pdsort;

TEST_CASE("parse canonical and padded text") {
  const auto d = parse_diagram("{1,4|2,3,4',5'|5|1',3'|2'}", 5);
  CHECK(d == parse_diagram("{1,4|2,3,4',5'|1',3'}", 5));
  CHECK(format_diagram(d) == "{1,4|2,3,4',5'|5|1',3'|2'}");

  CHECK(format_diagram(parse_diagram("{}", 2)) == "{1|2|1'|2'}");
  CHECK(parse_diagram("{1,1'|2,2'}", 2) == identity_diagram(2));
  CHECK(parse_diagram("{}", 0).block_count() == 0);
}

TEST_CASE("whitespace and the minus notation for bottom nodes") {
  const auto a = parse_diagram(" { 1 , 2 | 3 , 5 , 7 , -2 , -4 , -6 | 4 , -3 | 6 , -7 | -5 , -8 } ", 8);
  const auto b = parse_diagram("{1,2|3,5,7,2',4',6'|4,3'|6,7'|5',8'}", 8);
  CHECK(a == b);
}

TEST_CASE("parse errors") {
  CHECK_THROWS_AS(parse_diagram("{1,2", 2), ParseError);
  CHECK_THROWS_AS(parse_diagram("1,2}", 2), ParseError);
  CHECK_THROWS_AS(parse_diagram("{1,1}", 2), ParseError);
  CHECK_THROWS_AS(parse_diagram("{1|1}", 2), ParseError);
  CHECK_THROWS_AS(parse_diagram("{3}", 2), ParseError);
  CHECK_THROWS_AS(parse_diagram("{0'}", 2), ParseError);
  CHECK_THROWS_AS(parse_diagram("{1,}", 2), ParseError);
  CHECK_THROWS_AS(parse_diagram("{1||2}", 2), ParseError);
  CHECK_THROWS_AS(parse_diagram("{-1'}", 2), ParseError);
  CHECK_THROWS_AS(parse_diagram("{1} x", 2), ParseError);
  CHECK_THROWS_AS(parse_diagram("{99999999999}", 2), ParseError);
}

TEST_CASE("format then parse is the identity") {
  std::mt19937_64 rng(5);
  for (int n = 1; n <= 5; ++n) {
    for (int i = 0; i < 1000; ++i) {
      const auto d = random_diagram(n, rng);
      REQUIRE(parse_diagram(format_diagram(d), n) == d);
    }
  }
}

TEST_CASE("DOT output has two ranked rows and one chain per block") {
  const auto dot = to_dot(parse_diagram("{1,2,2'|1'}", 2));
  CHECK(dot.find("graph diagram {") == 0);
  CHECK(dot.find("{ rank=same; t1 [label=\"1\"]; t2 [label=\"2\"]; }") != std::string::npos);
  CHECK(dot.find("{ rank=same; b1 [label=\"1'\"]; b2 [label=\"2'\"]; }") != std::string::npos);
  CHECK(dot.find("  t1 -- t2;\n") != std::string::npos);
  CHECK(dot.find("  t2 -- b2;\n") != std::string::npos);
  CHECK(dot.rfind("}\n") == dot.size() - 2);
}
