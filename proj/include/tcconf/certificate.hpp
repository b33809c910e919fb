#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tcconf/zero_divisors.hpp"

namespace tcconf {

enum class EvaluationRing { BG, EInfinity };

std::string_view to_string(EvaluationRing ring);

/// Default cap on the number of terms an intermediate product may reach;
/// TCCONF_MAX_TERMS overrides it.
inline constexpr double kDefaultMaxTerms = 1e7;
double max_terms_from_env();

struct CertificateOptions {
  Execution exec = Execution::Parallel;
  std::size_t max_basis = max_basis_from_env();
  double max_terms = max_terms_from_env();
  /// Skip the term limit (the basis guard is governed by max_basis).
  bool allow_large = false;
};

/// How the evaluated product compares with the two surviving terms
///   first  = omega_1 y_2..y_n (x) omega_1 x_2..x_n (x) ... (x) omega_1 x_2..x_n
///   second = omega_1 x_2..x_n (x) ... (x) omega_1 x_2..x_n (x) omega_1 y_2..y_n
/// expected in B_g for g >= 2. For n = 1 the two words coincide.
struct PatternMatch {
  TensorWord first;
  TensorWord second;
  bool coincide = false;
  /// Coefficients of the result on the two words (equal entries when they coincide).
  Scalar first_coeff;
  Scalar second_coeff;
  /// The support is exactly {first, second} and both coefficients are nonzero.
  bool matches = false;
};

struct Certificate {
  int genus = 0;
  int points = 0;
  int stages = 0;
  EvaluationRing ring = EvaluationRing::BG;
  std::vector<ZeroDivisorFactor> factors;
  /// Sum of factor multiplicities: the claimed zcl lower bound.
  int factor_count = 0;
  TensorElement result;
  bool nonzero = false;
  /// max_k dim (Q^{(x)s})_k over the degrees reached. A rigorous bound on
  /// every intermediate, but usually far above peak_terms.
  double estimated_terms = 0;
  std::size_t peak_terms = 0;
  std::optional<PatternMatch> pattern;
};

/// s(n+1) for g >= 2, s(n+1) - 2 for g = 1.
int expected_factor_count(int genus, int points, int stages);

/// max over k <= degree_limit of the coefficient of t^k in P_Q(t)^stages.
double estimate_terms(const QuotientAlgebra& ring, int stages, int degree_limit);

/// Evaluates c d prod y_{1,i} prod (bar(x_i) tilde(y_i)) (c, d only for g >= 2)
/// in the tensor power of `ring`, normal-forming after every multiplication.
/// `ring` must be a quotient of model.algebra(). Throws SizeGuardError when an
/// intermediate product exceeds options.max_terms and allow_large is not set.
Certificate evaluate_certificate(const SurfacePower& model, const QuotientAlgebra& ring,
                                 EvaluationRing label, int stages,
                                 const CertificateOptions& options = {});

/// Builds the model and the ring (B_g or E_inf) and evaluates.
Certificate evaluate_certificate(int genus, int points, int stages, EvaluationRing ring,
                                 const CertificateOptions& options = {});

struct RingAgreement {
  Certificate b_ring;
  Certificate e_ring;
  /// The E_inf result normal-formed slotwise in B_g.
  TensorElement image;
  /// image == b_ring.result and both results are nonzero.
  bool agrees = false;
};

RingAgreement check_ring_agreement(int genus, int points, int stages,
                                   const CertificateOptions& options = {});

struct TcRecord {
  int genus = 0;
  int points = 0;
  int stages = 0;
  int upper = 0;
  int lower = 0;
  int tc = 0;
  bool certified = false;
};

/// Closed-form upper bound: s(n+1) - 2 (g = 1), s(n+1) (g >= 2), and for the
/// sphere s (n <= 2) or sn - 3 (n >= 3). Throws for s < 2, n < 1 or g < 0.
int tc_upper_bound(int genus, int points, int stages);

/// For g >= 1 evaluates the certificate in B_g: lower = factor count when the
/// result is nonzero, certified when lower == upper. For g = 0 the record
/// carries the closed form with certified = false.
TcRecord tc_value(int genus, int points, int stages, const CertificateOptions& options = {});

}  // namespace tcconf
