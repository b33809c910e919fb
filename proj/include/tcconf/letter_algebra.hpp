#pragma once

#include <string>
#include <vector>

#include "tcconf/scalar.hpp"

namespace tcconf {

enum class LetterKind { One, A, B, Omega, Power };

/// One basis letter of a small graded algebra living in a single coordinate.
/// For A/B letters `index` is the handle p (1 <= p <= genus); for Power
/// letters it is the exponent; it is 0 for One/Omega.
struct LocalLetter {
  LetterKind kind = LetterKind::One;
  int index = 0;
  int degree = 0;

  friend bool operator==(const LocalLetter&, const LocalLetter&) = default;
};

/// Result of multiplying two letters: zero (sign == 0) or +-letter.
struct SignedLetter {
  int sign = 0;
  int letter = 0;
};

/// Letter product in H*(Sigma_g):
///   a(p)a(q) = b(p)b(q) = 0,  a(p)b(q) = omega if p == q else 0,
///   b(q)a(p) = -a(p)b(q),  omega * (positive degree) = 0,  1 is the unit.
/// Letters are given as positions in the ordering
///   1 < a(1) < b(1) < ... < a(g) < b(g) < omega.
/// Throws std::out_of_range("generator out of range") if a handle exceeds g.
SignedLetter local_multiply(const LocalLetter& u, const LocalLetter& v, int genus);

/// A finite graded algebra whose basis letters multiply to 0 or +-letter.
/// The n-fold tensor power of one of these is a ProductAlgebra.
class LetterAlgebra {
 public:
  /// H*(Sigma_g; Q), letters ordered 1 < a(1) < b(1) < ... < a(g) < b(g) < omega.
  static LetterAlgebra surface(int genus);
  /// F[t]/(t^{top_power+1}) with deg t = generator_degree. Over Q an odd
  /// generator must square to zero, so top_power > 1 is refused there.
  static LetterAlgebra truncated_polynomial(Field field, int generator_degree, int top_power,
                                            std::string stem = "t");

  Field field() const { return field_; }
  int size() const { return static_cast<int>(letters_.size()); }
  const LocalLetter& letter(int i) const { return letters_.at(i); }
  int degree(int i) const { return letters_[i].degree; }
  int top_degree() const { return top_degree_; }
  /// Genus of a surface algebra, -1 for other algebras.
  int genus() const { return genus_; }
  bool is_surface() const { return genus_ >= 0; }
  const std::string& name() const { return name_; }

  SignedLetter multiply(int u, int v) const { return table_[u * size() + v]; }

  /// Text token for letter i placed in (1-based) coordinate, e.g. "a2(1)", "w3", "t1^2".
  /// The unit letter has no token.
  std::string token(int i, int coordinate) const;

  /// Index of the letter of a surface algebra; throws for out-of-range handles.
  int surface_letter(LetterKind kind, int handle = 0) const;

 private:
  LetterAlgebra() = default;

  Field field_ = Field::Rationals;
  std::vector<LocalLetter> letters_;
  std::vector<SignedLetter> table_;
  std::string name_;
  std::string stem_;
  int genus_ = -1;
  int top_degree_ = 0;
};

}  // namespace tcconf
