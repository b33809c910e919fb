#include "tcconf/zcl.hpp"

#include <functional>
#include <stdexcept>

#include "tcconf/errors.hpp"
#include "tcconf/zero_divisors.hpp"

namespace tcconf {

Rp3Report rp3_report(int stages) {
  if (stages < 2 || stages > 5) {
    throw SizeGuardError("rp3 check needs 2 <= s <= 5 (tensor basis 4^s), got s = " + std::to_string(stages));
  }
  auto alg = ProductAlgebra::create(LetterAlgebra::truncated_polynomial(Field::GF2, 1, 3), 1);
  const QuotientAlgebra ring = trivial_quotient(alg, Execution::Serial);
  const Element t = Element::monomial(alg, alg->single(0, 1));

  Rp3Report report;
  report.stages = stages;
  TensorElement acc = TensorElement::unit(alg, stages);
  for (int l = 1; l < stages; ++l) {
    const ZeroDivisorFactor f =
        make_factor(FactorKind::Generic, "t1-t" + std::to_string(l + 1), 1, slot_difference(t, 0, l, stages), ring);
    for (int k = 0; k < 3; ++k) {
      acc = ring.tensor_multiply(acc, f.realized);
      ++report.bound;
    }
  }
  report.product = std::move(acc);
  report.nonzero = !report.product.is_zero();
  if (!report.nonzero) throw VerificationError("rp3 product vanished for s = " + std::to_string(stages));
  return report;
}

int rp3_zcl_check(int stages) { return rp3_report(stages).bound; }

std::string_view to_string(SearchStrategy strategy) {
  return strategy == SearchStrategy::Greedy ? "GREEDY" : "EXHAUSTIVE_TINY";
}

namespace {

std::vector<TensorElement> candidates(const QuotientAlgebra& q, int stages) {
  std::vector<TensorElement> out;
  const auto& alg = q.parent();
  for (int d = 1; d <= alg->top_degree(); ++d) {
    for (MonomialIndex m : q.standard_basis(d)) {
      const Element u = Element::monomial(alg, m);
      for (int l = 1; l < stages; ++l) {
        TensorElement z = q.tensor_normal_form(slot_difference(u, 0, l, stages));
        if (!z.is_zero()) out.push_back(std::move(z));
      }
    }
  }
  return out;
}

}  // namespace

ZclResult zcl_search(const QuotientAlgebra& q, int stages, SearchStrategy strategy) {
  if (stages < 2) throw std::invalid_argument("stages must be at least 2");
  if (strategy == SearchStrategy::ExhaustiveTiny && q.dimension() > kExhaustiveMaxDimension) {
    throw SizeGuardError("exhaustive search needs total dimension <= " + std::to_string(kExhaustiveMaxDimension) +
                         ", got " + std::to_string(q.dimension()));
  }
  const auto cands = candidates(q, stages);
  ZclResult result;
  result.stages = stages;
  result.strategy = strategy;
  result.product = TensorElement::unit(q.parent(), stages);

  if (strategy == SearchStrategy::Greedy) {
    bool grew = true;
    while (grew) {
      grew = false;
      for (const auto& z : cands) {
        TensorElement next = q.tensor_multiply(result.product, z);
        if (next.is_zero()) continue;
        result.product = std::move(next);
        result.witness.push_back(z);
        grew = true;
        break;
      }
    }
  } else {
    // Products of zero divisors commute up to sign, so multisets suffice.
    std::vector<std::size_t> chosen;
    std::vector<std::size_t> best;
    std::function<void(std::size_t, const TensorElement&)> dfs = [&](std::size_t from, const TensorElement& acc) {
      if (chosen.size() > best.size()) best = chosen;
      for (std::size_t k = from; k < cands.size(); ++k) {
        TensorElement next = q.tensor_multiply(acc, cands[k]);
        if (next.is_zero()) continue;
        chosen.push_back(k);
        dfs(k, next);
        chosen.pop_back();
      }
    };
    dfs(0, result.product);
    for (std::size_t k : best) {
      result.product = q.tensor_multiply(result.product, cands[k]);
      result.witness.push_back(cands[k]);
    }
  }
  result.bound = static_cast<int>(result.witness.size());

  // Independent re-check: every factor is killed by mu and the product survives.
  TensorElement check = TensorElement::unit(q.parent(), stages);
  for (const auto& z : result.witness) {
    if (!q.mu(z).is_zero()) throw VerificationError("witness factor outside the kernel of mu");
    check = q.tensor_multiply(check, z);
  }
  if (check.is_zero() || !(check == result.product)) throw VerificationError("witness product mismatch");
  return result;
}

}  // namespace tcconf
