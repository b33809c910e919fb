#pragma once

#include <string>
#include <utility>
#include <vector>

#include "tcconf/quotient.hpp"

namespace tcconf {

enum class FactorKind { Bar, Tilde, Y1I, C, D, Generic };

std::string_view to_string(FactorKind kind);

/// A factor of a zero-divisor product. `multiplicity` counts how many s-th
/// zero divisors it is the product of (s - 1 for bar(u), 1 otherwise).
struct ZeroDivisorFactor {
  FactorKind kind = FactorKind::Generic;
  std::string label;
  int multiplicity = 1;
  TensorElement realized;
};

/// Wraps `realized` after checking mu_s(realized) == 0 in `ring`;
/// throws VerificationError otherwise.
ZeroDivisorFactor make_factor(FactorKind kind, std::string label, int multiplicity,
                              TensorElement realized, const QuotientAlgebra& ring);

/// u in slot `first` minus u in slot `second` (0-based), 1 elsewhere.
TensorElement slot_difference(const Element& u, int first, int second, int arity);

/// bar(u) = prod_{l=2..s} (u (x) 1 .. 1 - 1 .. u^{(l)} .. 1), for u of positive degree.
TensorElement bar(const Element& u, int stages, Execution exec = Execution::Parallel);
/// tilde(u) = u (x) 1 .. 1 - 1 .. 1 (x) u.
TensorElement tilde(const Element& u, int stages);

/// prod_k bar(u_k), in order.
TensorElement bar_product(std::span<const Element> us, int stages,
                          Execution exec = Execution::Parallel);
/// prod_k tilde(u_k), in order.
TensorElement tilde_product(std::span<const Element> us, int stages,
                            Execution exec = Execution::Parallel);

/// prod_{i=1..n} bar(x_i).
TensorElement bar_product_xs(const SurfacePower& model, int stages,
                             Execution exec = Execution::Parallel);
/// prod_{i=1..n} tilde(y_i).
TensorElement tilde_product_ys(const SurfacePower& model, int stages,
                               Execution exec = Execution::Parallel);
/// prod_{i=2..s-1} y_{1,i}, with y_{1,i} = y_1 (x) 1 .. - 1 .. y_1^{(i)} .. 1.
/// The unit tensor for s = 2.
TensorElement y1i_product(const SurfacePower& model, int stages,
                          Execution exec = Execution::Parallel);
/// c = a_1(2) in slot 1 minus slot 2; d = b_1(2) in slot 1 minus slot 2 (s = 2)
/// or slot 3 (s >= 3). Requires genus >= 2.
std::pair<TensorElement, TensorElement> c_d_factors(const SurfacePower& model, int stages);

}  // namespace tcconf
