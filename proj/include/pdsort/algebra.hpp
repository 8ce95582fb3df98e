#pragma once

#include <map>
#include <string>

#include "pdsort/diagram.hpp"
#include "pdsort/polynomial.hpp"

namespace pdsort {

// Element of the partition algebra: a finite linear combination of diagrams
// of one order with coefficients in Z[xi]. Zero terms are never stored.
class AlgebraElement {
 public:
  using Terms = std::map<PartitionDiagram, Polynomial>;

  explicit AlgebraElement(int order) : order_(order) {}
  AlgebraElement(const PartitionDiagram& d, Polynomial coeff = 1);

  int order() const { return order_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  // Coefficient of d; zero when absent.
  Polynomial coeff(const PartitionDiagram& d) const;

  void add_term(const PartitionDiagram& d, const Polynomial& coeff);

  AlgebraElement& operator+=(const AlgebraElement& rhs);
  friend AlgebraElement operator+(AlgebraElement a, const AlgebraElement& b) {
    return a += b;
  }
  friend bool operator==(const AlgebraElement&, const AlgebraElement&) = default;

 private:
  int order_;
  Terms terms_;
};

// Bilinear extension of d1 * d2 = xi^l (d1 o d2).
AlgebraElement algebra_multiply(const AlgebraElement& a, const AlgebraElement& b);

inline AlgebraElement operator*(const AlgebraElement& a, const AlgebraElement& b) {
  return algebra_multiply(a, b);
}

std::string to_string(const AlgebraElement& e);

}  // namespace pdsort
