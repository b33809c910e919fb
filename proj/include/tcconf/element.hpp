#pragma once

#include <set>
#include <span>
#include <string>

#include "tcconf/product_algebra.hpp"

namespace tcconf {

/// Sparse linear combination of basis monomials of one ProductAlgebra.
/// Elements need not be homogeneous.
class Element {
 public:
  explicit Element(AlgebraPtr algebra);
  Element(AlgebraPtr algebra, SparseVector terms);

  static Element zero(AlgebraPtr algebra) { return Element(std::move(algebra)); }
  static Element one(AlgebraPtr algebra);
  static Element monomial(AlgebraPtr algebra, MonomialIndex m);
  static Element monomial(AlgebraPtr algebra, MonomialIndex m, const Scalar& coeff);

  const ProductAlgebra& algebra() const { return *algebra_; }
  const AlgebraPtr& algebra_ptr() const { return algebra_; }
  Field field() const { return algebra_->field(); }
  const SparseVector& terms() const { return terms_; }
  bool is_zero() const { return terms_.is_zero(); }
  Scalar coefficient(MonomialIndex m) const { return terms_.coefficient(m); }

  /// Set of degrees that occur; empty for zero.
  std::set<int> degrees() const;
  bool is_homogeneous() const { return degrees().size() <= 1; }
  /// Degree of a nonzero homogeneous element; throws std::logic_error otherwise.
  int degree() const;

  Element operator-() const;
  Element& operator+=(const Element& rhs);
  Element& operator-=(const Element& rhs);
  Element& operator*=(const Scalar& c);
  friend Element operator+(Element lhs, const Element& rhs) { return lhs += rhs; }
  friend Element operator-(Element lhs, const Element& rhs) { return lhs -= rhs; }
  friend Element operator*(const Scalar& c, Element e) { return e *= c; }
  friend Element operator*(const Element& lhs, const Element& rhs);
  friend bool operator==(const Element& lhs, const Element& rhs);

 private:
  void check_same(const Element& rhs) const;

  AlgebraPtr algebra_;
  SparseVector terms_;
};

/// Bilinear extension of the signed monomial product. Throws
/// std::invalid_argument when the operands live in different algebras.
Element multiply(const Element& lhs, const Element& rhs);

/// Product of the elements in order, starting from 1.
Element product(AlgebraPtr algebra, std::span<const Element> factors);

}  // namespace tcconf
