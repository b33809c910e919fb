#pragma once

#include <cstddef>
#include <vector>

#include "tcconf/product_algebra.hpp"

namespace tcconf {

/// One monomial per tensor slot.
using TensorWord = std::vector<MonomialIndex>;

struct TensorTerm {
  TensorWord word;
  Scalar coeff;
};

/// Canonical form: sorted lexicographically by word, words unique, no zero coefficients.
using TensorTerms = std::vector<TensorTerm>;

struct TensorWordHash {
  std::size_t operator()(const TensorWord& w) const noexcept {
    std::size_t h = 1469598103934665603ULL;
    for (MonomialIndex m : w) {
      h ^= m + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return h;
  }
};

/// Sorts, sums duplicates and drops zeros.
TensorTerms canonicalize_terms(std::vector<TensorTerm> terms);

}  // namespace tcconf
