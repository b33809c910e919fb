#pragma once

#include <span>
#include <string>
#include <vector>

#include "tcconf/graded_subspace.hpp"
#include "tcconf/surface.hpp"
#include "tcconf/tensor_element.hpp"

namespace tcconf {

enum class QuotientLabel { EInfinity, AG, BG, Custom };

std::string_view to_string(QuotientLabel label);

/// Linear span of the ideal generated by homogeneous elements: the span of
/// m * r over basis monomials m and generators r. Zero generators are
/// ignored; inhomogeneous ones throw std::invalid_argument. Frozen on return.
GradedSubspace ideal_span(const AlgebraPtr& algebra, std::span<const Element> generators,
                          Execution exec = Execution::Parallel);

/// A finite-dimensional algebra modulo a homogeneous ideal, represented by
/// the ideal's row-reduced span. Elements of the quotient are parent
/// elements in normal form, i.e. supported on standard (non-pivot) monomials.
class QuotientAlgebra {
 public:
  QuotientAlgebra(AlgebraPtr parent, GradedSubspace ideal, QuotientLabel label,
                  Execution exec = Execution::Parallel);

  const AlgebraPtr& parent() const { return parent_; }
  const GradedSubspace& ideal() const { return ideal_; }
  QuotientLabel label() const { return label_; }
  Execution execution() const { return exec_; }

  Element normal_form(const Element& e) const;
  bool is_zero(const Element& e) const { return normal_form(e).is_zero(); }
  Element multiply(const Element& lhs, const Element& rhs) const;
  /// Normal form of one monomial.
  const SparseVector& monomial_normal_form(MonomialIndex m) const { return monomial_nf_.at(m); }

  TensorElement tensor_normal_form(const TensorElement& t) const;
  /// Normal form of lhs * rhs in the tensor power of the quotient.
  TensorElement tensor_multiply(const TensorElement& lhs, const TensorElement& rhs) const;
  /// mu_s followed by the normal form.
  Element mu(const TensorElement& t) const;

  std::vector<MonomialIndex> standard_basis(int degree) const;
  std::size_t dimension() const;
  std::vector<long long> poincare_polynomial() const;

 private:
  void check_parent(const AlgebraPtr& alg) const;

  AlgebraPtr parent_;
  GradedSubspace ideal_;
  QuotientLabel label_;
  Execution exec_;
  std::vector<SparseVector> monomial_nf_;
};

/// The algebra itself, as a quotient by the zero ideal.
QuotientAlgebra trivial_quotient(const AlgebraPtr& algebra, Execution exec = Execution::Parallel);

/// E(g)_inf^{*,0} = H*(Sigma_g^{x n}) / (Totaro relations).
QuotientAlgebra e_infinity(const SurfacePower& model, Execution exec = Execution::Parallel);
/// A_g = H*(Sigma_g^{x n}) / (BUNCH16). For g = 1 this is the whole algebra.
QuotientAlgebra a_quotient(const SurfacePower& model, Execution exec = Execution::Parallel);
/// B_g = A_g / J_g, built in one step as H*(Sigma_g^{x n}) / (BUNCH16 + J_G).
QuotientAlgebra b_quotient(const SurfacePower& model, Execution exec = Execution::Parallel);

/// Rank of the matrix whose rows are the given vectors (same field).
std::size_t rank_of(std::span<const SparseVector> rows, Field field);
/// Rank of the images of the elements in the quotient.
std::size_t rank_in(const QuotientAlgebra& q, std::span<const Element> elements);

struct ChainCheck {
  int source_genus = 0;
  int target_genus = 0;
  std::string relation;
  bool vanishes = false;
};

struct ChainReport {
  int genus = 0;
  int points = 0;
  std::vector<ChainCheck> checks;
  bool passed() const;
};

/// For h = 1..g-1, maps every defining relation of B_h into B_{h+1} via the
/// identity on letters and checks that its image vanishes there.
ChainReport verify_subalgebra_chain(int genus, int points, Execution exec = Execution::Parallel);

}  // namespace tcconf
