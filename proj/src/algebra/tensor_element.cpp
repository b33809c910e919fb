#include "tcconf/tensor_element.hpp"

#include <algorithm>
#include <stdexcept>

#include "tcconf/kernels.hpp"

namespace tcconf {

TensorElement::TensorElement(AlgebraPtr algebra, int arity)
    : algebra_(std::move(algebra)), arity_(arity) {
  if (arity_ < 1) throw std::invalid_argument("tensor arity must be at least 1");
}

TensorElement::TensorElement(AlgebraPtr algebra, int arity, std::vector<TensorTerm> terms)
    : TensorElement(std::move(algebra), arity) {
  for (const auto& t : terms) {
    if (static_cast<int>(t.word.size()) != arity_) throw std::invalid_argument("word arity mismatch");
    if (t.coeff.field() != field()) throw std::invalid_argument("field mismatch");
    for (MonomialIndex m : t.word) {
      if (m >= algebra_->dimension()) throw std::out_of_range("monomial index outside the algebra");
    }
  }
  terms_ = canonicalize_terms(std::move(terms));
}

TensorElement TensorElement::unit(AlgebraPtr algebra, int arity) {
  const Field f = algebra->field();
  TensorWord w(arity, algebra->unit());
  return TensorElement(std::move(algebra), arity, {{std::move(w), Scalar::one(f)}});
}

TensorElement TensorElement::from_slots(std::span<const Element> slots) {
  if (slots.empty()) throw std::invalid_argument("tensor needs at least one slot");
  const AlgebraPtr& alg = slots.front().algebra_ptr();
  for (const auto& e : slots) {
    if (e.algebra_ptr() != alg) throw std::invalid_argument("elements of different algebras");
  }
  const int s = static_cast<int>(slots.size());
  std::vector<TensorTerm> terms{{TensorWord{}, Scalar::one(alg->field())}};
  for (const auto& e : slots) {
    std::vector<TensorTerm> next;
    next.reserve(terms.size() * e.terms().size());
    for (const auto& t : terms) {
      for (const auto& entry : e.terms()) {
        TensorWord w = t.word;
        w.push_back(entry.index);
        next.push_back({std::move(w), t.coeff * entry.coeff});
      }
    }
    terms = std::move(next);
  }
  return TensorElement(alg, s, std::move(terms));
}

TensorElement TensorElement::embed(const Element& u, int slot, int arity) {
  if (slot < 0 || slot >= arity) throw std::out_of_range("slot out of range");
  const AlgebraPtr& alg = u.algebra_ptr();
  std::vector<TensorTerm> terms;
  for (const auto& e : u.terms()) {
    TensorWord w(arity, alg->unit());
    w[slot] = e.index;
    terms.push_back({std::move(w), e.coeff});
  }
  return TensorElement(alg, arity, std::move(terms));
}

Scalar TensorElement::coefficient(const TensorWord& word) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), word,
                             [](const TensorTerm& t, const TensorWord& w) { return t.word < w; });
  if (it != terms_.end() && it->word == word) return it->coeff;
  return Scalar::zero(field());
}

std::vector<TensorWord> TensorElement::support() const {
  std::vector<TensorWord> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) out.push_back(t.word);
  return out;
}

std::set<int> TensorElement::degrees() const {
  std::set<int> out;
  for (const auto& t : terms_) {
    int d = 0;
    for (MonomialIndex m : t.word) d += algebra_->degree(m);
    out.insert(d);
  }
  return out;
}

void TensorElement::check_compatible(const TensorElement& rhs) const {
  if (algebra_ != rhs.algebra_) throw std::invalid_argument("tensors over different algebras");
  if (arity_ != rhs.arity_) throw std::invalid_argument("arity mismatch");
}

TensorElement TensorElement::operator-() const {
  TensorElement r = *this;
  r *= -Scalar::one(field());
  return r;
}

TensorElement& TensorElement::operator+=(const TensorElement& rhs) {
  check_compatible(rhs);
  std::vector<TensorTerm> all = terms_;
  all.insert(all.end(), rhs.terms_.begin(), rhs.terms_.end());
  terms_ = canonicalize_terms(std::move(all));
  return *this;
}

TensorElement& TensorElement::operator-=(const TensorElement& rhs) {
  check_compatible(rhs);
  std::vector<TensorTerm> all = terms_;
  for (const auto& t : rhs.terms_) all.push_back({t.word, -t.coeff});
  terms_ = canonicalize_terms(std::move(all));
  return *this;
}

TensorElement& TensorElement::operator*=(const Scalar& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& t : terms_) t.coeff *= c;
  return *this;
}

bool operator==(const TensorElement& lhs, const TensorElement& rhs) {
  if (lhs.algebra_ != rhs.algebra_ || lhs.arity_ != rhs.arity_) return false;
  if (lhs.terms_.size() != rhs.terms_.size()) return false;
  for (std::size_t i = 0; i < lhs.terms_.size(); ++i) {
    if (lhs.terms_[i].word != rhs.terms_[i].word || !(lhs.terms_[i].coeff == rhs.terms_[i].coeff)) {
      return false;
    }
  }
  return true;
}

TensorElement tensor_multiply(const TensorElement& lhs, const TensorElement& rhs, Execution exec) {
  if (lhs.algebra_ptr() != rhs.algebra_ptr()) {
    throw std::invalid_argument("tensors over different algebras");
  }
  if (lhs.arity() != rhs.arity()) throw std::invalid_argument("arity mismatch");
  TensorElement out(lhs.algebra_ptr(), lhs.arity());
  TensorTerms terms = kernels::tensor_product(lhs.algebra(), lhs.terms(), rhs.terms(), exec);
  return TensorElement(lhs.algebra_ptr(), lhs.arity(),
                       std::vector<TensorTerm>(std::make_move_iterator(terms.begin()),
                                               std::make_move_iterator(terms.end())));
}

Element mu(const TensorElement& t) {
  const ProductAlgebra& alg = t.algebra();
  const Field f = alg.field();
  std::vector<SparseVector::Entry> acc;
  for (const auto& term : t.terms()) {
    int sign = 1;
    MonomialIndex m = alg.unit();
    for (MonomialIndex slot : term.word) {
      const SignedMonomial p = alg.multiply(m, slot);
      sign *= p.sign;
      if (sign == 0) break;
      m = p.index;
    }
    if (sign != 0) acc.push_back({m, Scalar(sign, f) * term.coeff});
  }
  return Element(t.algebra_ptr(), SparseVector::from_unsorted(f, std::move(acc)));
}

}  // namespace tcconf
