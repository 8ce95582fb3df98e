#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "pdsort/algebra.hpp"
#include "pdsort/enumerate.hpp"
#include "pdsort/error.hpp"
#include "pdsort/text.hpp"

using namespace pdsort;

TEST_CASE("polynomial arithmetic") {
  const Polynomial xi = Polynomial::monomial(1, 1);
  const Polynomial p = xi * xi + Polynomial(3) * xi + Polynomial(-2);
  CHECK(p.degree() == 2);
  CHECK(p.coeff(1) == 3);
  CHECK(p.to_string() == "xi^2 + 3*xi - 2");
  CHECK((p + Polynomial::monomial(-1, 2) + Polynomial::monomial(-3, 1) + Polynomial(2)).is_zero());
  CHECK(Polynomial(0).is_zero());
  CHECK((Polynomial(5) * Polynomial()).is_zero());
}

TEST_CASE("polynomial overflow is reported") {
  const Polynomial big(std::int64_t{1} << 62);
  CHECK_THROWS_AS(big * Polynomial(4), std::overflow_error);
}

TEST_CASE("algebra product carries xi^l") {
  const auto d1 = parse_diagram("{1,4|2,3,4',5'|1',3'}", 5);
  const auto d2 = parse_diagram("{1,3|2,4,3'|5,4',5'}", 5);
  const auto product = AlgebraElement(d1) * AlgebraElement(d2);
  CHECK(product.terms().size() == 1);
  const auto composite = parse_diagram("{1,4|2,3,3',4',5'}", 5);
  CHECK(product.coeff(composite) == Polynomial::monomial(1, 1));
}

TEST_CASE("identity squared has exponent zero") {
  const auto id = identity_diagram(3);
  CHECK(AlgebraElement(id) * AlgebraElement(id) == AlgebraElement(id));
}

TEST_CASE("bilinearity spot value") {
  const auto d1 = parse_diagram("{1,4|2,3,4',5'|1',3'}", 5);
  const auto d2 = parse_diagram("{1,3|2,4,3'|5,4',5'}", 5);
  const auto id = identity_diagram(5);
  const auto lhs = (AlgebraElement(d1) + AlgebraElement(id)) * AlgebraElement(d2);
  AlgebraElement want(5);
  want.add_term(compose(d1, d2).diagram, Polynomial::monomial(1, 1));
  want.add_term(d2, 1);
  CHECK(lhs == want);
}

TEST_CASE("terms cancel to zero") {
  const auto id = identity_diagram(2);
  AlgebraElement e(id, 3);
  e.add_term(id, -3);
  CHECK(e.is_zero());
  CHECK(to_string(e) == "0");
}

TEST_CASE("algebra associativity on random elements") {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<int> coeff(-3, 3);
  for (int i = 0; i < 200; ++i) {
    const int n = 1 + i % 3;
    auto random_element = [&] {
      AlgebraElement e(n);
      for (int t = 0; t < 3; ++t) e.add_term(random_diagram(n, rng), coeff(rng));
      return e;
    };
    const auto a = random_element();
    const auto b = random_element();
    const auto c = random_element();
    REQUIRE((a * b) * c == a * (b * c));
  }
}

TEST_CASE("order mismatch") {
  CHECK_THROWS_AS(AlgebraElement(identity_diagram(2)) * AlgebraElement(identity_diagram(3)), DomainError);
  AlgebraElement e(2);
  CHECK_THROWS_AS(e.add_term(identity_diagram(1), 1), DomainError);
}
