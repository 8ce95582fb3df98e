#include "pdsort/algebra.hpp"

#include "pdsort/error.hpp"
#include "pdsort/text.hpp"

namespace pdsort {

AlgebraElement::AlgebraElement(const PartitionDiagram& d, Polynomial coeff)
    : order_(d.order()) {
  add_term(d, coeff);
}

Polynomial AlgebraElement::coeff(const PartitionDiagram& d) const {
  auto it = terms_.find(d);
  return it == terms_.end() ? Polynomial{} : it->second;
}

void AlgebraElement::add_term(const PartitionDiagram& d, const Polynomial& coeff) {
  if (d.order() != order_) {
    throw DomainError("term order " + std::to_string(d.order()) +
                      " does not match element order " + std::to_string(order_));
  }
  if (coeff.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(d, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

AlgebraElement& AlgebraElement::operator+=(const AlgebraElement& rhs) {
  if (rhs.order_ != order_) throw DomainError("order mismatch in sum");
  for (const auto& [d, c] : rhs.terms_) add_term(d, c);
  return *this;
}

AlgebraElement algebra_multiply(const AlgebraElement& a, const AlgebraElement& b) {
  if (a.order() != b.order()) {
    throw DomainError("cannot multiply elements of order " +
                      std::to_string(a.order()) + " and " +
                      std::to_string(b.order()));
  }
  AlgebraElement out(a.order());
  for (const auto& [da, ca] : a.terms()) {
    for (const auto& [db, cb] : b.terms()) {
      auto [d, loops] = compose(da, db);
      out.add_term(d, ca * cb * Polynomial::monomial(1, loops));
    }
  }
  return out;
}

std::string to_string(const AlgebraElement& e) {
  if (e.is_zero()) return "0";
  std::string out;
  for (const auto& [d, c] : e.terms()) {
    if (!out.empty()) out += " + ";
    out += "(" + c.to_string() + ")*" + format_diagram(d);
  }
  return out;
}

}  // namespace pdsort
