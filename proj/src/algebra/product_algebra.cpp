#include "tcconf/product_algebra.hpp"

#include <cstdlib>
#include <stdexcept>

#include "tcconf/errors.hpp"

namespace tcconf {

std::size_t max_basis_from_env() {
  if (const char* env = std::getenv("TCCONF_MAX_BASIS")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
  }
  return kDefaultMaxBasis;
}

std::shared_ptr<const ProductAlgebra> ProductAlgebra::create(LetterAlgebra letters, int coordinates,
                                                             std::size_t max_basis) {
  if (coordinates < 1) throw std::invalid_argument("need at least one coordinate");
  double estimate = 1.0;
  for (int i = 0; i < coordinates; ++i) estimate *= letters.size();
  if (estimate > static_cast<double>(max_basis)) {
    throw SizeGuardError("basis size " + std::to_string(static_cast<long long>(estimate)) +
                         " of " + letters.name() + "^" + std::to_string(coordinates) +
                         " exceeds the limit of " + std::to_string(max_basis) +
                         " monomials (set TCCONF_MAX_BASIS to raise it)");
  }
  return std::shared_ptr<const ProductAlgebra>(new ProductAlgebra(std::move(letters), coordinates));
}

ProductAlgebra::ProductAlgebra(LetterAlgebra letters, int coordinates)
    : letters_(std::move(letters)), coordinates_(coordinates) {
  const MonomialIndex base = static_cast<MonomialIndex>(letters_.size());
  radix_.assign(coordinates_, 1);
  for (int i = coordinates_ - 2; i >= 0; --i) radix_[i] = radix_[i + 1] * base;
  const std::size_t dim = static_cast<std::size_t>(radix_[0]) * base;
  top_degree_ = letters_.top_degree() * coordinates_;
  degrees_.resize(dim);
  basis_by_degree_.resize(top_degree_ + 1);
  for (MonomialIndex m = 0; m < dim; ++m) {
    int d = 0;
    for (int i = 0; i < coordinates_; ++i) d += letters_.degree(letter(m, i));
    degrees_[m] = d;
    basis_by_degree_[d].push_back(m);
  }
  for (int i = 0; i < coordinates_; ++i) {
    for (int l = 1; l < letters_.size(); ++l) tokens_.emplace(letters_.token(l, i + 1), std::pair{i, l});
  }
}

std::span<const MonomialIndex> ProductAlgebra::basis(int degree) const {
  if (degree < 0 || degree > top_degree_) return {};
  return basis_by_degree_[degree];
}

std::vector<int> ProductAlgebra::letters_of(MonomialIndex m) const {
  std::vector<int> out(coordinates_);
  for (int i = 0; i < coordinates_; ++i) out[i] = letter(m, i);
  return out;
}

MonomialIndex ProductAlgebra::monomial(std::span<const int> letters) const {
  if (static_cast<int>(letters.size()) != coordinates_) {
    throw std::out_of_range("monomial needs exactly one letter per coordinate");
  }
  MonomialIndex m = 0;
  for (int i = 0; i < coordinates_; ++i) {
    if (letters[i] < 0 || letters[i] >= letters_.size()) throw std::out_of_range("unknown letter");
    m += static_cast<MonomialIndex>(letters[i]) * radix_[i];
  }
  return m;
}

MonomialIndex ProductAlgebra::single(int i, int letter) const {
  if (i < 0 || i >= coordinates_) throw std::out_of_range("coordinate out of range");
  if (letter < 0 || letter >= letters_.size()) throw std::out_of_range("unknown letter");
  return static_cast<MonomialIndex>(letter) * radix_[i];
}

SignedMonomial ProductAlgebra::multiply(MonomialIndex lhs, MonomialIndex rhs) const {
  // u_1..u_n * v_1..v_n: v_i moves left past u_{i+1}..u_n.
  int sign = 1;
  int odd_rhs_before = 0;
  MonomialIndex out = 0;
  for (int i = 0; i < coordinates_; ++i) {
    const int u = letter(lhs, i);
    const int v = letter(rhs, i);
    if ((letters_.degree(u) & 1) && (odd_rhs_before & 1)) sign = -sign;
    if (letters_.degree(v) & 1) ++odd_rhs_before;
    const SignedLetter p = letters_.multiply(u, v);
    if (p.sign == 0) return {};
    sign *= p.sign;
    out += static_cast<MonomialIndex>(p.letter) * radix_[i];
  }
  return {sign, out};
}

std::vector<long long> ProductAlgebra::poincare_polynomial() const {
  std::vector<long long> p(top_degree_ + 1);
  for (int d = 0; d <= top_degree_; ++d) p[d] = static_cast<long long>(basis_by_degree_[d].size());
  return p;
}

std::string ProductAlgebra::word(MonomialIndex m) const {
  std::string out;
  for (int i = 0; i < coordinates_; ++i) {
    const int l = letter(m, i);
    if (l == 0) continue;
    if (!out.empty()) out += '*';
    out += letters_.token(l, i + 1);
  }
  return out.empty() ? "1" : out;
}

MonomialIndex ProductAlgebra::parse_word(std::string_view text) const {
  if (text == "1") return unit();
  std::vector<int> letters(coordinates_, 0);
  int last = -1;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t stop = text.find('*', start);
    if (stop == std::string_view::npos) stop = text.size();
    const std::string tok(text.substr(start, stop - start));
    auto it = tokens_.find(tok);
    if (it == tokens_.end()) throw std::invalid_argument("unknown letter '" + tok + "'");
    const auto [coord, l] = it->second;
    if (coord <= last) {
      throw std::invalid_argument("letters of '" + std::string(text) +
                                  "' are not in increasing coordinate order");
    }
    letters[coord] = l;
    last = coord;
    start = stop + 1;
  }
  return monomial(letters);
}

}  // namespace tcconf
