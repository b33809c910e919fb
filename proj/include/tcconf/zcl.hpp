#pragma once

#include <string>
#include <vector>

#include "tcconf/quotient.hpp"

namespace tcconf {

struct Rp3Report {
  int stages = 0;
  /// 3(s - 1): three copies of (t in slot 1 - t in slot l) for l = 2..s.
  int bound = 0;
  TensorElement product;
  bool nonzero = false;
};

/// Works in F_2[t]/(t^4), deg t = 1. Needs 2 <= s <= 5; throws
/// SizeGuardError otherwise and VerificationError if the product vanishes.
Rp3Report rp3_report(int stages);
/// rp3_report(stages).bound.
int rp3_zcl_check(int stages);

enum class SearchStrategy { ExhaustiveTiny, Greedy };

std::string_view to_string(SearchStrategy strategy);

/// Exhaustive search is limited to algebras of total dimension <= this.
inline constexpr std::size_t kExhaustiveMaxDimension = 8;

struct ZclResult {
  int stages = 0;
  SearchStrategy strategy = SearchStrategy::Greedy;
  int bound = 0;
  /// The zero divisors whose product is nonzero; bound == witness.size().
  std::vector<TensorElement> witness;
  TensorElement product;
};

/// Lower bound for zcl_s of the quotient algebra. Candidates are
/// u (x) 1 .. 1 - 1 .. u^{(l)} .. 1 for standard monomials u of positive
/// degree and l = 2..s. The witness is re-verified before returning.
ZclResult zcl_search(const QuotientAlgebra& algebra, int stages, SearchStrategy strategy);

}  // namespace tcconf
