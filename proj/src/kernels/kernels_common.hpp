#pragma once

#include "tcconf/kernels.hpp"

namespace tcconf::kernels::detail {

/// Signed slotwise product of two tensor words; sign 0 means the product vanishes.
inline int word_product(const ProductAlgebra& alg, const TensorWord& a, const TensorWord& b,
                        TensorWord& out) {
  const std::size_t s = a.size();
  out.resize(s);
  int sign = 1;
  int odd_b_before = 0;
  for (std::size_t k = 0; k < s; ++k) {
    if ((alg.degree(a[k]) & 1) && (odd_b_before & 1)) sign = -sign;
    if (alg.degree(b[k]) & 1) ++odd_b_before;
    const SignedMonomial p = alg.multiply(a[k], b[k]);
    if (p.sign == 0) return 0;
    sign *= p.sign;
    out[k] = p.index;
  }
  return sign;
}

/// Calls emit(word, coeff) for every term of the expansion of
/// coeff * nf[w_1] (x) ... (x) nf[w_s].
template <class Emit>
void expand_slots(std::span<const SparseVector> nf, const TensorWord& word, const Scalar& coeff,
                  Emit&& emit) {
  const std::size_t s = word.size();
  for (std::size_t k = 0; k < s; ++k) {
    if (nf[word[k]].is_zero()) return;
  }
  std::vector<std::size_t> pos(s, 0);
  TensorWord out(s);
  while (true) {
    Scalar c = coeff;
    for (std::size_t k = 0; k < s; ++k) {
      const auto& e = nf[word[k]].entries()[pos[k]];
      out[k] = e.index;
      c *= e.coeff;
    }
    emit(out, c);
    std::size_t k = s;
    while (k > 0) {
      --k;
      if (++pos[k] < nf[word[k]].size()) break;
      pos[k] = 0;
      if (k == 0) return;
    }
    if (s == 0) return;
  }
}

}  // namespace tcconf::kernels::detail
