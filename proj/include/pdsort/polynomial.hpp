#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace pdsort {

// Univariate polynomial in the loop parameter xi with exact int64
// coefficients. Arithmetic throws std::overflow_error rather than wrap.
class Polynomial {
 public:
  Polynomial() = default;
  Polynomial(std::int64_t constant);  // NOLINT(google-explicit-constructor)

  static Polynomial monomial(std::int64_t coeff, int exponent);

  bool is_zero() const { return coeffs_.empty(); }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  std::int64_t coeff(int exponent) const;

  Polynomial& operator+=(const Polynomial& rhs);
  Polynomial& operator*=(const Polynomial& rhs);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator*(Polynomial a, const Polynomial& b) { return a *= b; }
  friend bool operator==(const Polynomial&, const Polynomial&) = default;

  std::string to_string() const;

 private:
  void trim();

  std::vector<std::int64_t> coeffs_;  // ascending powers, no trailing zeros
};

}  // namespace pdsort
