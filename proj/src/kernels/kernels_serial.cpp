#include <map>

#include "kernels_common.hpp"

namespace tcconf {

TensorTerms canonicalize_terms(std::vector<TensorTerm> terms) {
  std::sort(terms.begin(), terms.end(),
            [](const TensorTerm& a, const TensorTerm& b) { return a.word < b.word; });
  TensorTerms out;
  out.reserve(terms.size());
  for (auto& t : terms) {
    if (!out.empty() && out.back().word == t.word) {
      out.back().coeff += t.coeff;
    } else {
      if (!out.empty() && out.back().coeff.is_zero()) out.pop_back();
      out.push_back(std::move(t));
    }
  }
  if (!out.empty() && out.back().coeff.is_zero()) out.pop_back();
  return out;
}

}  // namespace tcconf

namespace tcconf::kernels {

namespace {

TensorTerms from_map(std::map<TensorWord, Scalar>& acc) {
  TensorTerms out;
  out.reserve(acc.size());
  for (auto& [w, c] : acc) {
    if (!c.is_zero()) out.push_back({w, std::move(c)});
  }
  return out;
}

void accumulate(std::map<TensorWord, Scalar>& acc, const TensorWord& w, const Scalar& c) {
  auto [it, inserted] = acc.try_emplace(w, c);
  if (!inserted) it->second += c;
}

}  // namespace

TensorTerms tensor_product_serial(const ProductAlgebra& alg, const TensorTerms& lhs,
                                  const TensorTerms& rhs) {
  const Field f = alg.field();
  std::map<TensorWord, Scalar> acc;
  TensorWord out;
  for (const auto& a : lhs) {
    for (const auto& b : rhs) {
      const int sign = detail::word_product(alg, a.word, b.word, out);
      if (sign == 0) continue;
      accumulate(acc, out, Scalar(sign, f) * a.coeff * b.coeff);
    }
  }
  return from_map(acc);
}

TensorTerms slotwise_normal_form_serial(Field, std::span<const SparseVector> monomial_nf,
                                        const TensorTerms& terms) {
  std::map<TensorWord, Scalar> acc;
  for (const auto& t : terms) {
    detail::expand_slots(monomial_nf, t.word, t.coeff,
                         [&](const TensorWord& w, const Scalar& c) { accumulate(acc, w, c); });
  }
  return from_map(acc);
}

std::vector<SparseVector> normal_form_table_serial(const GradedSubspace& space) {
  std::vector<SparseVector> table;
  table.reserve(space.ambient_dimension());
  const auto degrees = space.ambient_degrees();
  for (std::size_t m = 0; m < degrees.size(); ++m) {
    table.push_back(space.reduce(SparseVector::unit(space.field(), static_cast<BasisIndex>(m)),
                                 degrees[m]));
  }
  return table;
}

std::vector<DegreeVector> ideal_products_serial(const ProductAlgebra& alg,
                                                std::span<const SparseVector> generators) {
  const Field f = alg.field();
  std::vector<DegreeVector> out;
  for (const auto& r : generators) {
    if (r.is_zero()) continue;
    const int rdeg = alg.degree(r.leading_index());
    for (MonomialIndex m = 0; m < alg.dimension(); ++m) {
      if (alg.degree(m) + rdeg > alg.top_degree()) continue;
      std::vector<SparseVector::Entry> acc;
      for (const auto& e : r) {
        const SignedMonomial p = alg.multiply(m, e.index);
        if (p.sign != 0) acc.push_back({p.index, Scalar(p.sign, f) * e.coeff});
      }
      SparseVector v = SparseVector::from_unsorted(f, std::move(acc));
      if (!v.is_zero()) out.push_back({alg.degree(m) + rdeg, std::move(v)});
    }
  }
  return out;
}

}  // namespace tcconf::kernels
