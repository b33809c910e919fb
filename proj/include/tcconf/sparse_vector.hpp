#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "tcconf/scalar.hpp"

namespace tcconf {

using BasisIndex = std::uint32_t;

/// Sparse vector over a fixed field, stored as entries sorted by basis index.
/// Invariant: indices strictly increasing, no stored coefficient is zero.
class SparseVector {
 public:
  struct Entry {
    BasisIndex index;
    Scalar coeff;
  };

  SparseVector() = default;
  explicit SparseVector(Field field) : field_(field) {}

  static SparseVector unit(Field field, BasisIndex index);
  /// Builds a vector from entries in any order; duplicates are summed, zeros dropped.
  static SparseVector from_unsorted(Field field, std::vector<Entry> entries);

  Field field() const { return field_; }
  bool is_zero() const { return entries_.empty(); }
  std::size_t size() const { return entries_.size(); }
  std::span<const Entry> entries() const { return entries_; }
  auto begin() const { return entries_.begin(); }
  auto end() const { return entries_.end(); }

  /// Smallest index carrying a nonzero coefficient. Precondition: !is_zero().
  BasisIndex leading_index() const { return entries_.front().index; }
  Scalar coefficient(BasisIndex index) const;
  bool contains_index(BasisIndex index) const;

  /// this += factor * other
  void axpy(const Scalar& factor, const SparseVector& other);
  void scale(const Scalar& factor);

  SparseVector& operator+=(const SparseVector& rhs);
  SparseVector& operator-=(const SparseVector& rhs);
  friend SparseVector operator+(SparseVector lhs, const SparseVector& rhs) { return lhs += rhs; }
  friend SparseVector operator-(SparseVector lhs, const SparseVector& rhs) { return lhs -= rhs; }
  friend SparseVector operator*(const Scalar& c, SparseVector v) {
    v.scale(c);
    return v;
  }
  friend bool operator==(const SparseVector& lhs, const SparseVector& rhs);

 private:
  std::vector<Entry> entries_;
  Field field_ = Field::Rationals;
};

}  // namespace tcconf
