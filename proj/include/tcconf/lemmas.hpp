#pragma once

#include <string>
#include <vector>

#include "tcconf/quotient.hpp"

namespace tcconf {

/// One identity, or one family of vanishing claims checked case by case.
struct IdentityCheck {
  std::string name;
  std::string statement;
  std::size_t cases = 0;
  std::size_t failures = 0;
  /// First failing case, empty when passed.
  std::string detail;
  bool passed() const { return failures == 0; }
};

struct LemmaReport {
  int genus = 0;
  int points = 0;
  std::vector<IdentityCheck> checks;
  bool passed() const;
  std::size_t failures() const;
};

/// Checks the product formulas for v * x_j y_j and z * x_i y_j in A_g
/// (g >= 2, n >= 3), including every "vanishes" and "only non-trivial
/// products" claim, plus the rewriting of the Totaro relations in x/y
/// letters. The latter identities are checked in H* itself.
LemmaReport verify_lemma_identities(int genus, int points, Execution exec = Execution::Parallel);

/// normal_form(x_j y_j) == normal_form(omega_j - omega_1 + y_1 x_j - x_1 y_j)
/// in E(g)_inf, for j = 2..n. Needs n >= 2.
IdentityCheck verify_key_identity(int genus, int points, Execution exec = Execution::Parallel);

}  // namespace tcconf
