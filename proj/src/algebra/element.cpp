#include "tcconf/element.hpp"

#include <stdexcept>

namespace tcconf {

Element::Element(AlgebraPtr algebra) : algebra_(std::move(algebra)), terms_(algebra_->field()) {}

Element::Element(AlgebraPtr algebra, SparseVector terms)
    : algebra_(std::move(algebra)), terms_(std::move(terms)) {
  if (terms_.field() != algebra_->field()) throw std::invalid_argument("field mismatch");
  if (!terms_.is_zero() && terms_.entries().back().index >= algebra_->dimension()) {
    throw std::out_of_range("monomial index outside the algebra");
  }
}

Element Element::one(AlgebraPtr algebra) {
  const MonomialIndex u = algebra->unit();
  return monomial(std::move(algebra), u);
}

Element Element::monomial(AlgebraPtr algebra, MonomialIndex m) {
  const Field f = algebra->field();
  return monomial(std::move(algebra), m, Scalar::one(f));
}

Element Element::monomial(AlgebraPtr algebra, MonomialIndex m, const Scalar& coeff) {
  const Field f = algebra->field();
  return Element(std::move(algebra), SparseVector::from_unsorted(f, {{m, coeff}}));
}

std::set<int> Element::degrees() const {
  std::set<int> out;
  for (const auto& e : terms_) out.insert(algebra_->degree(e.index));
  return out;
}

int Element::degree() const {
  const auto d = degrees();
  if (d.size() != 1) throw std::logic_error("degree of a zero or inhomogeneous element");
  return *d.begin();
}

void Element::check_same(const Element& rhs) const {
  if (algebra_ != rhs.algebra_) throw std::invalid_argument("elements of different algebras");
}

Element Element::operator-() const {
  Element r = *this;
  r.terms_.scale(-Scalar::one(field()));
  return r;
}

Element& Element::operator+=(const Element& rhs) {
  check_same(rhs);
  terms_ += rhs.terms_;
  return *this;
}

Element& Element::operator-=(const Element& rhs) {
  check_same(rhs);
  terms_ -= rhs.terms_;
  return *this;
}

Element& Element::operator*=(const Scalar& c) {
  terms_.scale(c);
  return *this;
}

Element multiply(const Element& lhs, const Element& rhs) {
  if (lhs.algebra_ptr() != rhs.algebra_ptr()) {
    throw std::invalid_argument("elements of different algebras");
  }
  const ProductAlgebra& alg = lhs.algebra();
  const Field f = alg.field();
  std::vector<SparseVector::Entry> acc;
  acc.reserve(lhs.terms().size() * rhs.terms().size());
  for (const auto& a : lhs.terms()) {
    for (const auto& b : rhs.terms()) {
      const SignedMonomial p = alg.multiply(a.index, b.index);
      if (p.sign == 0) continue;
      acc.push_back({p.index, Scalar(p.sign, f) * a.coeff * b.coeff});
    }
  }
  return Element(lhs.algebra_ptr(), SparseVector::from_unsorted(f, std::move(acc)));
}

Element operator*(const Element& lhs, const Element& rhs) { return multiply(lhs, rhs); }

bool operator==(const Element& lhs, const Element& rhs) {
  return lhs.algebra_ == rhs.algebra_ && lhs.terms_ == rhs.terms_;
}

Element product(AlgebraPtr algebra, std::span<const Element> factors) {
  Element acc = Element::one(std::move(algebra));
  for (const auto& f : factors) acc = acc * f;
  return acc;
}

}  // namespace tcconf
