#include "tcconf/graded_subspace.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace tcconf {

GradedSubspace::GradedSubspace(Field field, std::vector<int> ambient_degrees)
    : field_(field), ambient_degrees_(std::move(ambient_degrees)) {
  for (int d : ambient_degrees_) {
    if (d < 0) throw std::invalid_argument("negative ambient degree");
    max_degree_ = std::max(max_degree_, d);
  }
  basis_by_degree_.resize(max_degree_ + 1);
  rows_.resize(max_degree_ + 1);
  for (std::size_t i = 0; i < ambient_degrees_.size(); ++i) {
    basis_by_degree_[ambient_degrees_[i]].push_back(static_cast<BasisIndex>(i));
  }
  pivot_.assign(ambient_degrees_.size(), false);
}

void GradedSubspace::check_degree(int degree) const {
  if (degree < 0 || degree > max_degree_) {
    throw std::out_of_range("degree out of range: " + std::to_string(degree) + " not in [0, " +
                            std::to_string(max_degree_) + "]");
  }
}

void GradedSubspace::check_homogeneous(const SparseVector& v, int degree) const {
  if (v.field() != field_) throw std::invalid_argument("field mismatch");
  for (const auto& e : v) {
    if (e.index >= ambient_degrees_.size()) {
      throw std::invalid_argument("basis index " + std::to_string(e.index) +
                                  " outside the ambient space");
    }
    if (ambient_degrees_[e.index] != degree) {
      throw std::invalid_argument("vector is not homogeneous of degree " + std::to_string(degree));
    }
  }
}

std::span<const BasisIndex> GradedSubspace::ambient_basis(int degree) const {
  check_degree(degree);
  return basis_by_degree_[degree];
}

SparseVector GradedSubspace::reduce(const SparseVector& v, int degree) const {
  check_degree(degree);
  check_homogeneous(v, degree);
  const auto& rows = rows_[degree];
  if (rows.empty()) return v;
  std::vector<SparseVector::Entry> acc;
  acc.reserve(v.size());
  for (const auto& e : v) {
    if (!pivot_[e.index]) {
      acc.push_back(e);
      continue;
    }
    const SparseVector& row = rows.at(e.index);
    for (const auto& r : row) {
      if (r.index == e.index) continue;
      acc.push_back({r.index, -(e.coeff * r.coeff)});
    }
  }
  return SparseVector::from_unsorted(field_, std::move(acc));
}

bool GradedSubspace::contains(const SparseVector& v, int degree) const {
  return reduce(v, degree).is_zero();
}

bool GradedSubspace::insert(const SparseVector& v, int degree) {
  if (frozen_) throw std::logic_error("insert into a frozen subspace");
  SparseVector w = reduce(v, degree);
  if (w.is_zero()) return false;
  const BasisIndex pivot = w.leading_index();
  w.scale(w.coefficient(pivot).inverse());
  for (auto& [p, row] : rows_[degree]) {
    Scalar c = row.coefficient(pivot);
    if (!c.is_zero()) row.axpy(-c, w);
  }
  rows_[degree].emplace(pivot, std::move(w));
  pivot_[pivot] = true;
  return true;
}

std::size_t GradedSubspace::rank(int degree) const {
  check_degree(degree);
  return rows_[degree].size();
}

std::size_t GradedSubspace::total_rank() const {
  std::size_t r = 0;
  for (const auto& rows : rows_) r += rows.size();
  return r;
}

const std::map<BasisIndex, SparseVector>& GradedSubspace::rows(int degree) const {
  check_degree(degree);
  return rows_[degree];
}

bool GradedSubspace::is_pivot(BasisIndex index) const {
  return index < pivot_.size() && pivot_[index];
}

std::vector<BasisIndex> GradedSubspace::non_pivot_basis(int degree) const {
  check_degree(degree);
  std::vector<BasisIndex> out;
  for (BasisIndex i : basis_by_degree_[degree]) {
    if (!pivot_[i]) out.push_back(i);
  }
  return out;
}

}  // namespace tcconf
