#include "tcconf/sparse_vector.hpp"

#include <algorithm>
#include <stdexcept>

namespace tcconf {

SparseVector SparseVector::unit(Field field, BasisIndex index) {
  SparseVector v(field);
  v.entries_.push_back({index, Scalar::one(field)});
  return v;
}

SparseVector SparseVector::from_unsorted(Field field, std::vector<Entry> entries) {
  std::sort(entries.begin(), entries.end(),
            [](const Entry& a, const Entry& b) { return a.index < b.index; });
  SparseVector v(field);
  for (auto& e : entries) {
    if (e.coeff.field() != field) throw std::invalid_argument("field mismatch");
    if (!v.entries_.empty() && v.entries_.back().index == e.index) {
      v.entries_.back().coeff += e.coeff;
    } else {
      if (!v.entries_.empty() && v.entries_.back().coeff.is_zero()) v.entries_.pop_back();
      v.entries_.push_back(std::move(e));
    }
  }
  if (!v.entries_.empty() && v.entries_.back().coeff.is_zero()) v.entries_.pop_back();
  return v;
}

Scalar SparseVector::coefficient(BasisIndex index) const {
  auto it = std::lower_bound(entries_.begin(), entries_.end(), index,
                             [](const Entry& e, BasisIndex i) { return e.index < i; });
  if (it != entries_.end() && it->index == index) return it->coeff;
  return Scalar::zero(field_);
}

bool SparseVector::contains_index(BasisIndex index) const {
  auto it = std::lower_bound(entries_.begin(), entries_.end(), index,
                             [](const Entry& e, BasisIndex i) { return e.index < i; });
  return it != entries_.end() && it->index == index;
}

void SparseVector::axpy(const Scalar& factor, const SparseVector& other) {
  if (other.field_ != field_ || factor.field() != field_) {
    throw std::invalid_argument("field mismatch");
  }
  if (factor.is_zero() || other.is_zero()) return;
  std::vector<Entry> merged;
  merged.reserve(entries_.size() + other.entries_.size());
  auto a = entries_.begin();
  auto b = other.entries_.begin();
  while (a != entries_.end() || b != other.entries_.end()) {
    if (b == other.entries_.end() || (a != entries_.end() && a->index < b->index)) {
      merged.push_back(std::move(*a++));
    } else if (a == entries_.end() || b->index < a->index) {
      merged.push_back({b->index, factor * b->coeff});
      ++b;
    } else {
      Scalar c = a->coeff + factor * b->coeff;
      if (!c.is_zero()) merged.push_back({a->index, std::move(c)});
      ++a;
      ++b;
    }
  }
  entries_ = std::move(merged);
}

void SparseVector::scale(const Scalar& factor) {
  if (factor.field() != field_) throw std::invalid_argument("field mismatch");
  if (factor.is_zero()) {
    entries_.clear();
    return;
  }
  for (auto& e : entries_) e.coeff *= factor;
}

SparseVector& SparseVector::operator+=(const SparseVector& rhs) {
  axpy(Scalar::one(field_), rhs);
  return *this;
}

SparseVector& SparseVector::operator-=(const SparseVector& rhs) {
  axpy(-Scalar::one(field_), rhs);
  return *this;
}

bool operator==(const SparseVector& lhs, const SparseVector& rhs) {
  if (lhs.field_ != rhs.field_ || lhs.entries_.size() != rhs.entries_.size()) return false;
  for (std::size_t i = 0; i < lhs.entries_.size(); ++i) {
    if (lhs.entries_[i].index != rhs.entries_[i].index ||
        !(lhs.entries_[i].coeff == rhs.entries_[i].coeff)) {
      return false;
    }
  }
  return true;
}

}  // namespace tcconf
