#pragma once

#include <string>
#include <string_view>

#include "tcconf/tensor_element.hpp"

namespace tcconf {

// Stable text form. A term is a signed coefficient followed by a word:
//   "+1 a1(1)*b2(1) -3/2 w1"
// Tensor slots are separated by "(x)":
//   "+2 w1*a2(1) (x) w1*b2(1) -2 w1*b2(1) (x) w1*a2(1)"
// Terms appear in canonical order; the zero element is "0".
// parse(to_text(x)) == x and to_text(parse(s)) == s for canonical s.

std::string to_text(const Element& e);
std::string to_text(const TensorElement& t);

Element parse_element(const AlgebraPtr& algebra, std::string_view text);
/// `arity` is needed for the zero tensor and checked against every term.
TensorElement parse_tensor(const AlgebraPtr& algebra, std::string_view text, int arity);

}  // namespace tcconf
