#include "tcconf/zero_divisors.hpp"

#include <stdexcept>

#include "tcconf/errors.hpp"
#include "tcconf/text_format.hpp"

namespace tcconf {

std::string_view to_string(FactorKind kind) {
  switch (kind) {
    case FactorKind::Bar:
      return "BAR";
    case FactorKind::Tilde:
      return "TILDE";
    case FactorKind::Y1I:
      return "Y1I";
    case FactorKind::C:
      return "C";
    case FactorKind::D:
      return "D";
    case FactorKind::Generic:
      return "GENERIC";
  }
  return "?";
}

ZeroDivisorFactor make_factor(FactorKind kind, std::string label, int multiplicity,
                              TensorElement realized, const QuotientAlgebra& ring) {
  const Element image = ring.mu(realized);
  if (!image.is_zero()) {
    throw VerificationError("factor " + label + " is not an s-th zero divisor: mu_s = " +
                            to_text(image));
  }
  return {kind, std::move(label), multiplicity, std::move(realized)};
}

TensorElement slot_difference(const Element& u, int first, int second, int arity) {
  return TensorElement::embed(u, first, arity) - TensorElement::embed(u, second, arity);
}

TensorElement bar(const Element& u, int stages, Execution exec) {
  if (stages < 2) throw std::invalid_argument("stages must be at least 2");
  if (u.is_zero() || !u.is_homogeneous() || u.degree() == 0) {
    throw std::invalid_argument("bar needs a homogeneous element of positive degree");
  }
  TensorElement acc = TensorElement::unit(u.algebra_ptr(), stages);
  for (int l = 1; l < stages; ++l) acc = tensor_multiply(acc, slot_difference(u, 0, l, stages), exec);
  return acc;
}

TensorElement tilde(const Element& u, int stages) {
  if (stages < 2) throw std::invalid_argument("stages must be at least 2");
  return slot_difference(u, 0, stages - 1, stages);
}

TensorElement bar_product(std::span<const Element> us, int stages, Execution exec) {
  if (us.empty()) throw std::invalid_argument("empty product");
  TensorElement acc = TensorElement::unit(us.front().algebra_ptr(), stages);
  for (const auto& u : us) acc = tensor_multiply(acc, bar(u, stages, exec), exec);
  return acc;
}

TensorElement tilde_product(std::span<const Element> us, int stages, Execution exec) {
  if (us.empty()) throw std::invalid_argument("empty product");
  TensorElement acc = TensorElement::unit(us.front().algebra_ptr(), stages);
  for (const auto& u : us) acc = tensor_multiply(acc, tilde(u, stages), exec);
  return acc;
}

TensorElement bar_product_xs(const SurfacePower& model, int stages, Execution exec) {
  std::vector<Element> xs;
  for (int i = 1; i <= model.points(); ++i) xs.push_back(model.x(i));
  return bar_product(xs, stages, exec);
}

TensorElement tilde_product_ys(const SurfacePower& model, int stages, Execution exec) {
  std::vector<Element> ys;
  for (int i = 1; i <= model.points(); ++i) ys.push_back(model.y(i));
  return tilde_product(ys, stages, exec);
}

TensorElement y1i_product(const SurfacePower& model, int stages, Execution exec) {
  if (stages < 2) throw std::invalid_argument("stages must be at least 2");
  TensorElement acc = TensorElement::unit(model.algebra(), stages);
  for (int i = 2; i <= stages - 1; ++i) {
    acc = tensor_multiply(acc, slot_difference(model.y(1), 0, i - 1, stages), exec);
  }
  return acc;
}

std::pair<TensorElement, TensorElement> c_d_factors(const SurfacePower& model, int stages) {
  if (model.genus() < 2) throw std::invalid_argument("c and d need genus >= 2");
  if (stages < 2) throw std::invalid_argument("stages must be at least 2");
  TensorElement c = slot_difference(model.a(1, 2), 0, 1, stages);
  TensorElement d = slot_difference(model.b(1, 2), 0, stages == 2 ? 1 : 2, stages);
  return {std::move(c), std::move(d)};
}

}  // namespace tcconf
