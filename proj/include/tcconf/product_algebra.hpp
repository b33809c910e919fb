#pragma once

#include <cstddef>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "tcconf/letter_algebra.hpp"
#include "tcconf/sparse_vector.hpp"

namespace tcconf {

using MonomialIndex = BasisIndex;

/// Product of two basis monomials: zero (sign == 0) or +-monomial.
struct SignedMonomial {
  int sign = 0;
  MonomialIndex index = 0;
};

/// Default cap on the number of basis monomials; TCCONF_MAX_BASIS overrides it.
inline constexpr std::size_t kDefaultMaxBasis = 100000;
std::size_t max_basis_from_env();

/// The graded-commutative algebra L^{(x)n}: n coordinates, each carrying one
/// letter of the letter algebra L.
///
/// A monomial (u_1, ..., u_n) denotes the product u_1 u_2 ... u_n in
/// coordinate order. Monomials are indexed in mixed radix with coordinate 1
/// most significant, which is lexicographic order by coordinate and then by
/// letter.
class ProductAlgebra {
 public:
  /// Throws SizeGuardError when |L|^n exceeds max_basis.
  static std::shared_ptr<const ProductAlgebra> create(LetterAlgebra letters, int coordinates,
                                                      std::size_t max_basis = max_basis_from_env());

  const LetterAlgebra& letters() const { return letters_; }
  Field field() const { return letters_.field(); }
  int coordinates() const { return coordinates_; }
  std::size_t dimension() const { return degrees_.size(); }
  int top_degree() const { return top_degree_; }
  int degree(MonomialIndex m) const { return degrees_[m]; }
  std::span<const int> degrees() const { return degrees_; }
  std::span<const MonomialIndex> basis(int degree) const;
  MonomialIndex unit() const { return 0; }

  /// Letter in (0-based) coordinate i of monomial m.
  int letter(MonomialIndex m, int i) const {
    return static_cast<int>(m / radix_[i]) % letters_.size();
  }
  std::vector<int> letters_of(MonomialIndex m) const;
  /// Throws std::out_of_range for a wrong length or an unknown letter.
  MonomialIndex monomial(std::span<const int> letters) const;
  /// The monomial with `letter` in (0-based) coordinate i and 1 elsewhere.
  MonomialIndex single(int i, int letter) const;

  SignedMonomial multiply(MonomialIndex lhs, MonomialIndex rhs) const;

  /// Coefficients of the Poincare polynomial, index = degree.
  std::vector<long long> poincare_polynomial() const;

  /// Stable text form, e.g. "a1(1)*b2(3)*w4"; the unit monomial is "1".
  std::string word(MonomialIndex m) const;
  /// Inverse of word(); throws std::invalid_argument on malformed input.
  MonomialIndex parse_word(std::string_view text) const;

 private:
  ProductAlgebra(LetterAlgebra letters, int coordinates);

  LetterAlgebra letters_;
  int coordinates_ = 0;
  int top_degree_ = 0;
  std::vector<MonomialIndex> radix_;
  std::vector<int> degrees_;
  std::vector<std::vector<MonomialIndex>> basis_by_degree_;
  std::unordered_map<std::string, std::pair<int, int>> tokens_;
};

using AlgebraPtr = std::shared_ptr<const ProductAlgebra>;

}  // namespace tcconf
