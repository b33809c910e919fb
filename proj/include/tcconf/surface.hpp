#pragma once

#include <string>
#include <vector>

#include "tcconf/element.hpp"

namespace tcconf {

enum class RelationLabel { Totaro, Bunch16, JG };

std::string_view to_string(RelationLabel label);

struct RelationSet {
  RelationLabel label;
  std::vector<Element> generators;
};

/// An element together with the product of letters it was built from,
/// e.g. "x1(1)*y2(1)" for x_1(1) y_2(1).
struct NamedElement {
  std::string name;
  Element value;
};

/// H*(Sigma_g^{x n}; Q) with the generators used throughout: a_i(p), b_i(p),
/// omega_i and the shifted classes x_i(p), y_i(p). Coordinates i and handles
/// p are 1-based.
class SurfacePower {
 public:
  /// genus >= 1, points >= 1; throws SizeGuardError if (2g+2)^n is too large.
  SurfacePower(int genus, int points, std::size_t max_basis = max_basis_from_env());

  int genus() const { return genus_; }
  int points() const { return points_; }
  const AlgebraPtr& algebra() const { return algebra_; }

  Element one() const { return Element::one(algebra_); }
  Element a(int i, int p = 1) const;
  Element b(int i, int p = 1) const;
  Element omega(int i) const;
  /// x_i(p) = a_i(p) unless p == 1 and i >= 2, where x_i(1) = a_i(1) - a_1(1).
  Element x(int i, int p = 1) const;
  /// y_i(p) = b_i(p) unless p == 1 and i >= 2, where y_i(1) = b_i(1) - b_1(1).
  Element y(int i, int p = 1) const;

  /// omega_i + omega_j + sum_p (b_i(p) a_j(p) - a_i(p) b_j(p)) for i < j.
  RelationSet totaro_relations() const;
  /// x_i(p)x_j(q), x_i(p)y_j(q), y_i(p)y_j(q) for i != j, p, q in {2..g}.
  RelationSet bunch16_relations() const;
  /// x_i y_j for i, j in {2..n} (i == j included).
  RelationSet j_g_relations() const;

  /// Every monomial of the algebra, in index order.
  std::vector<NamedElement> basis_beta1() const;
  /// Monomials with at most one coordinate carrying a(p), b(p) (p >= 2) or omega.
  std::vector<NamedElement> basis_beta2() const;
  /// The same selection with a/b replaced by the x/y classes.
  std::vector<NamedElement> basis_beta2_prime() const;

  /// Letter of the surface alphabet for coordinate-free lookups.
  int letter(LetterKind kind, int handle = 0) const;

 private:
  void check_point(int i) const;
  Element single(int i, LetterKind kind, int p) const;
  std::vector<NamedElement> restricted_basis(bool shifted) const;

  int genus_;
  int points_;
  AlgebraPtr algebra_;
};

/// 3^n + n(2g-1)3^{n-1}, the size of beta_2.
long long beta2_count(int genus, int points);

/// The map H*(Sigma_h^{x n}) -> H*(Sigma_g^{x n}) (h <= g) that keeps a(p), b(p)
/// and omega, applied to one element. Coefficients are preserved.
Element map_to_genus(const Element& e, const SurfacePower& source, const SurfacePower& target);

}  // namespace tcconf
