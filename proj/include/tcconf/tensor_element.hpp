#pragma once

#include <set>
#include <span>

#include "tcconf/element.hpp"
#include "tcconf/parallel.hpp"
#include "tcconf/tensor_terms.hpp"

namespace tcconf {

/// Element of A^{(x)s} for a ProductAlgebra A, as a sparse combination of
/// s-tuples of basis monomials. Terms are kept canonical (see TensorTerms).
class TensorElement {
 public:
  /// Placeholder with no algebra; only assignment and destruction are valid.
  TensorElement() = default;
  TensorElement(AlgebraPtr algebra, int arity);
  /// Terms in any order; they are canonicalized and validated.
  TensorElement(AlgebraPtr algebra, int arity, std::vector<TensorTerm> terms);

  static TensorElement unit(AlgebraPtr algebra, int arity);
  /// e_1 (x) e_2 (x) ... (x) e_s.
  static TensorElement from_slots(std::span<const Element> slots);
  /// u placed in (0-based) `slot`, 1 in every other slot.
  static TensorElement embed(const Element& u, int slot, int arity);

  const ProductAlgebra& algebra() const { return *algebra_; }
  const AlgebraPtr& algebra_ptr() const { return algebra_; }
  Field field() const { return algebra_->field(); }
  int arity() const { return arity_; }
  const TensorTerms& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  Scalar coefficient(const TensorWord& word) const;
  std::vector<TensorWord> support() const;
  /// Total degrees that occur.
  std::set<int> degrees() const;

  TensorElement operator-() const;
  TensorElement& operator+=(const TensorElement& rhs);
  TensorElement& operator-=(const TensorElement& rhs);
  TensorElement& operator*=(const Scalar& c);
  friend TensorElement operator+(TensorElement lhs, const TensorElement& rhs) { return lhs += rhs; }
  friend TensorElement operator-(TensorElement lhs, const TensorElement& rhs) { return lhs -= rhs; }
  friend TensorElement operator*(const Scalar& c, TensorElement t) { return t *= c; }
  friend bool operator==(const TensorElement& lhs, const TensorElement& rhs);

 private:
  void check_compatible(const TensorElement& rhs) const;

  AlgebraPtr algebra_;
  int arity_ = 1;
  TensorTerms terms_;
};

/// Product in A^{(x)s} with Koszul signs. Throws std::invalid_argument on an
/// arity or algebra mismatch.
TensorElement tensor_multiply(const TensorElement& lhs, const TensorElement& rhs,
                              Execution exec = Execution::Parallel);

/// Iterated multiplication mu_s(a_1 (x) ... (x) a_s) = a_1 a_2 ... a_s.
Element mu(const TensorElement& t);

}  // namespace tcconf
