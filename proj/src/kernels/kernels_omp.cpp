#include <unordered_map>

#include "kernels_common.hpp"

namespace tcconf::kernels {

namespace {

using WordMap = std::unordered_map<TensorWord, Scalar, TensorWordHash>;

void accumulate(WordMap& acc, const TensorWord& w, const Scalar& c) {
  auto [it, inserted] = acc.try_emplace(w, c);
  if (!inserted) it->second += c;
}

// Thread-local maps are drained in thread order; exact arithmetic plus the
// final sort make the result independent of scheduling.
TensorTerms merge(std::vector<WordMap>& partial) {
  std::vector<TensorTerm> all;
  std::size_t total = 0;
  for (const auto& m : partial) total += m.size();
  all.reserve(total);
  for (auto& m : partial) {
    for (auto& [w, c] : m) all.push_back({w, std::move(c)});
    m.clear();
  }
  return canonicalize_terms(std::move(all));
}

}  // namespace

TensorTerms tensor_product_omp(const ProductAlgebra& alg, const TensorTerms& lhs,
                               const TensorTerms& rhs) {
  const Field f = alg.field();
  std::vector<WordMap> partial(omp_get_max_threads());
  const long n = static_cast<long>(lhs.size());
#pragma omp parallel
  {
    WordMap& acc = partial[omp_get_thread_num()];
    TensorWord out;
#pragma omp for schedule(dynamic, 16)
    for (long i = 0; i < n; ++i) {
      const auto& a = lhs[i];
      for (const auto& b : rhs) {
        const int sign = detail::word_product(alg, a.word, b.word, out);
        if (sign == 0) continue;
        accumulate(acc, out, Scalar(sign, f) * a.coeff * b.coeff);
      }
    }
  }
  return merge(partial);
}

TensorTerms slotwise_normal_form_omp(Field, std::span<const SparseVector> monomial_nf,
                                     const TensorTerms& terms) {
  std::vector<WordMap> partial(omp_get_max_threads());
  const long n = static_cast<long>(terms.size());
#pragma omp parallel
  {
    WordMap& acc = partial[omp_get_thread_num()];
#pragma omp for schedule(dynamic, 16)
    for (long i = 0; i < n; ++i) {
      detail::expand_slots(monomial_nf, terms[i].word, terms[i].coeff,
                           [&](const TensorWord& w, const Scalar& c) { accumulate(acc, w, c); });
    }
  }
  return merge(partial);
}

std::vector<SparseVector> normal_form_table_omp(const GradedSubspace& space) {
  const auto degrees = space.ambient_degrees();
  const long n = static_cast<long>(degrees.size());
  std::vector<SparseVector> table(n, SparseVector(space.field()));
#pragma omp parallel for schedule(dynamic, 64)
  for (long m = 0; m < n; ++m) {
    table[m] = space.reduce(SparseVector::unit(space.field(), static_cast<BasisIndex>(m)),
                            degrees[m]);
  }
  return table;
}

std::vector<DegreeVector> ideal_products_omp(const ProductAlgebra& alg,
                                             std::span<const SparseVector> generators) {
  const Field f = alg.field();
  const long dim = static_cast<long>(alg.dimension());
  const long gens = static_cast<long>(generators.size());
  // One slot per (generator, monomial) pair keeps the serial ordering.
  std::vector<DegreeVector> slots(static_cast<std::size_t>(dim * gens),
                                  DegreeVector{0, SparseVector(f)});
#pragma omp parallel for collapse(2) schedule(dynamic, 256)
  for (long g = 0; g < gens; ++g) {
    for (long m = 0; m < dim; ++m) {
      const SparseVector& r = generators[g];
      if (r.is_zero()) continue;
      const int rdeg = alg.degree(r.leading_index());
      const auto mi = static_cast<MonomialIndex>(m);
      if (alg.degree(mi) + rdeg > alg.top_degree()) continue;
      std::vector<SparseVector::Entry> acc;
      for (const auto& e : r) {
        const SignedMonomial p = alg.multiply(mi, e.index);
        if (p.sign != 0) acc.push_back({p.index, Scalar(p.sign, f) * e.coeff});
      }
      slots[g * dim + m] = {alg.degree(mi) + rdeg, SparseVector::from_unsorted(f, std::move(acc))};
    }
  }
  std::vector<DegreeVector> out;
  for (auto& s : slots) {
    if (!s.vector.is_zero()) out.push_back(std::move(s));
  }
  return out;
}

}  // namespace tcconf::kernels
