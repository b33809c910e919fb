#pragma once

#include <span>
#include <vector>

#include "tcconf/graded_subspace.hpp"
#include "tcconf/parallel.hpp"
#include "tcconf/tensor_terms.hpp"

namespace tcconf::kernels {

// Every kernel exists twice: a plain serial reference and an OpenMP version.
// Both return canonical output, so results compare equal term by term.

/// Product in A^{(x)s} with the Koszul sign
///   (a_1 (x) .. (x) a_s)(b_1 (x) .. (x) b_s)
///     = (-1)^{sum_{k<l} deg b_k deg a_l} a_1 b_1 (x) .. (x) a_s b_s.
TensorTerms tensor_product_serial(const ProductAlgebra& alg, const TensorTerms& lhs,
                                  const TensorTerms& rhs);
TensorTerms tensor_product_omp(const ProductAlgebra& alg, const TensorTerms& lhs,
                               const TensorTerms& rhs);

/// Replaces every slot monomial m by monomial_nf[m] and expands.
TensorTerms slotwise_normal_form_serial(Field field, std::span<const SparseVector> monomial_nf,
                                        const TensorTerms& terms);
TensorTerms slotwise_normal_form_omp(Field field, std::span<const SparseVector> monomial_nf,
                                     const TensorTerms& terms);

/// Normal form of every ambient basis vector modulo a frozen subspace.
std::vector<SparseVector> normal_form_table_serial(const GradedSubspace& space);
std::vector<SparseVector> normal_form_table_omp(const GradedSubspace& space);

struct DegreeVector {
  int degree = 0;
  SparseVector vector;
};

/// All nonzero products m * r for basis monomials m and homogeneous generators r,
/// ordered generator-major then by monomial index.
std::vector<DegreeVector> ideal_products_serial(const ProductAlgebra& alg,
                                                std::span<const SparseVector> generators);
std::vector<DegreeVector> ideal_products_omp(const ProductAlgebra& alg,
                                             std::span<const SparseVector> generators);

inline TensorTerms tensor_product(const ProductAlgebra& alg, const TensorTerms& lhs,
                                  const TensorTerms& rhs, Execution exec) {
  return exec == Execution::Serial ? tensor_product_serial(alg, lhs, rhs)
                                   : tensor_product_omp(alg, lhs, rhs);
}

inline TensorTerms slotwise_normal_form(Field field, std::span<const SparseVector> monomial_nf,
                                        const TensorTerms& terms, Execution exec) {
  return exec == Execution::Serial ? slotwise_normal_form_serial(field, monomial_nf, terms)
                                   : slotwise_normal_form_omp(field, monomial_nf, terms);
}

inline std::vector<SparseVector> normal_form_table(const GradedSubspace& space, Execution exec) {
  return exec == Execution::Serial ? normal_form_table_serial(space) : normal_form_table_omp(space);
}

inline std::vector<DegreeVector> ideal_products(const ProductAlgebra& alg,
                                                std::span<const SparseVector> generators,
                                                Execution exec) {
  return exec == Execution::Serial ? ideal_products_serial(alg, generators)
                                   : ideal_products_omp(alg, generators);
}

}  // namespace tcconf::kernels
