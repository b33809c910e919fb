#pragma once

#include <cstddef>
#include <map>
#include <span>
#include <vector>

#include "tcconf/sparse_vector.hpp"

namespace tcconf {

/// A subspace of a graded ambient space with a fixed, enumerated basis,
/// stored degree by degree in reduced row echelon form.
///
/// Each row is normalized so its pivot (its lowest basis index) has
/// coefficient 1, and no row carries a nonzero entry in another row's pivot
/// column. reduce() therefore needs one pass and no divisions, and its result
/// is supported on non-pivot columns only; that result is the unique normal
/// form of the coset v + span.
///
/// Mutable while being built (single writer). After freeze() the object is
/// read-only and may be shared between threads.
class GradedSubspace {
 public:
  GradedSubspace() = default;
  /// ambient_degrees[i] is the degree of basis vector i.
  GradedSubspace(Field field, std::vector<int> ambient_degrees);

  Field field() const { return field_; }
  int max_degree() const { return max_degree_; }
  std::size_t ambient_dimension() const { return ambient_degrees_.size(); }
  std::span<const int> ambient_degrees() const { return ambient_degrees_; }
  std::span<const BasisIndex> ambient_basis(int degree) const;

  /// Normal form of v modulo the span. Throws std::out_of_range for a degree
  /// outside [0, max_degree], std::invalid_argument if v is not homogeneous
  /// of that degree.
  SparseVector reduce(const SparseVector& v, int degree) const;
  bool contains(const SparseVector& v, int degree) const;
  /// Returns true iff v enlarged the span.
  bool insert(const SparseVector& v, int degree);

  std::size_t rank(int degree) const;
  std::size_t total_rank() const;
  /// Echelon rows of one degree keyed by pivot index.
  const std::map<BasisIndex, SparseVector>& rows(int degree) const;
  bool is_pivot(BasisIndex index) const;
  /// Ambient basis indices of the given degree that are not pivots.
  std::vector<BasisIndex> non_pivot_basis(int degree) const;

  void freeze() { frozen_ = true; }
  bool frozen() const { return frozen_; }

 private:
  void check_degree(int degree) const;
  void check_homogeneous(const SparseVector& v, int degree) const;

  Field field_ = Field::Rationals;
  std::vector<int> ambient_degrees_;
  std::vector<std::vector<BasisIndex>> basis_by_degree_;
  std::vector<std::map<BasisIndex, SparseVector>> rows_;
  std::vector<bool> pivot_;
  int max_degree_ = -1;
  bool frozen_ = false;
};

}  // namespace tcconf
