#include "tcconf/certificate.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>

#include "tcconf/errors.hpp"

namespace tcconf {

std::string_view to_string(EvaluationRing ring) {
  return ring == EvaluationRing::BG ? "B_G" : "E_INF";
}

double max_terms_from_env() {
  if (const char* env = std::getenv("TCCONF_MAX_TERMS")) {
    char* end = nullptr;
    double v = std::strtod(env, &end);
    if (end != env && *end == '\0' && v > 0) return v;
  }
  return kDefaultMaxTerms;
}

int expected_factor_count(int genus, int points, int stages) {
  if (genus < 1) throw std::invalid_argument("certificates need genus >= 1");
  const int full = stages * (points + 1);
  return genus == 1 ? full - 2 : full;
}

double estimate_terms(const QuotientAlgebra& ring, int stages, int degree_limit) {
  const auto p = ring.poincare_polynomial();
  std::vector<double> power{1.0};
  for (int s = 0; s < stages; ++s) {
    std::vector<double> next(power.size() + p.size() - 1, 0.0);
    for (std::size_t i = 0; i < power.size(); ++i) {
      for (std::size_t j = 0; j < p.size(); ++j) next[i + j] += power[i] * static_cast<double>(p[j]);
    }
    power = std::move(next);
  }
  double best = 0;
  for (int k = 0; k <= degree_limit && k < static_cast<int>(power.size()); ++k) {
    best = std::max(best, power[k]);
  }
  return best;
}

namespace {

std::string point_label(const char* stem, int i) { return std::string(stem) + std::to_string(i); }

std::vector<ZeroDivisorFactor> build_factors(const SurfacePower& model, const QuotientAlgebra& ring,
                                             int stages, Execution exec) {
  std::vector<ZeroDivisorFactor> factors;
  if (model.genus() >= 2) {
    auto [c, d] = c_d_factors(model, stages);
    factors.push_back(make_factor(FactorKind::C, "c", 1, std::move(c), ring));
    factors.push_back(make_factor(FactorKind::D, "d", 1, std::move(d), ring));
  }
  for (int i = 2; i <= stages - 1; ++i) {
    factors.push_back(make_factor(FactorKind::Y1I, "y1," + std::to_string(i), 1,
                                  slot_difference(model.y(1), 0, i - 1, stages), ring));
  }
  for (int i = 1; i <= model.points(); ++i) {
    factors.push_back(make_factor(FactorKind::Bar, "bar(" + point_label("x", i) + ")", stages - 1,
                                  bar(model.x(i), stages, exec), ring));
    factors.push_back(make_factor(FactorKind::Tilde, "tilde(" + point_label("y", i) + ")", 1,
                                  tilde(model.y(i), stages), ring));
  }
  return factors;
}

std::optional<TensorWord> single_word(const TensorElement& t) {
  if (t.size() != 1) return std::nullopt;
  return t.terms().front().word;
}

PatternMatch match_pattern(const SurfacePower& model, const QuotientAlgebra& ring, int stages,
                           const TensorElement& result) {
  Element wx = model.omega(1);
  Element wy = model.omega(1);
  for (int i = 2; i <= model.points(); ++i) {
    wx = wx * model.x(i);
    wy = wy * model.y(i);
  }
  wx = ring.normal_form(wx);
  wy = ring.normal_form(wy);

  std::vector<Element> first_slots(stages, wx);
  first_slots.front() = wy;
  std::vector<Element> second_slots(stages, wx);
  second_slots.back() = wy;
  const TensorElement first = ring.tensor_normal_form(TensorElement::from_slots(first_slots));
  const TensorElement second = ring.tensor_normal_form(TensorElement::from_slots(second_slots));

  PatternMatch match;
  match.first_coeff = Scalar::zero(ring.parent()->field());
  match.second_coeff = match.first_coeff;
  auto w1 = single_word(first);
  auto w2 = single_word(second);
  if (!w1 || !w2) return match;
  match.first = *w1;
  match.second = *w2;
  match.coincide = *w1 == *w2;
  match.first_coeff = result.coefficient(*w1);
  match.second_coeff = result.coefficient(*w2);
  const std::size_t expected = match.coincide ? 1 : 2;
  match.matches = result.size() == expected && !match.first_coeff.is_zero() &&
                  !match.second_coeff.is_zero();
  return match;
}

}  // namespace

Certificate evaluate_certificate(const SurfacePower& model, const QuotientAlgebra& ring,
                                 EvaluationRing label, int stages, const CertificateOptions& options) {
  if (stages < 2) throw std::invalid_argument("stages must be at least 2");
  if (ring.parent() != model.algebra()) {
    throw std::invalid_argument("ring is not a quotient of the model algebra");
  }
  Certificate cert;
  cert.genus = model.genus();
  cert.points = model.points();
  cert.stages = stages;
  cert.ring = label;

  const int count = expected_factor_count(cert.genus, cert.points, stages);
  cert.estimated_terms = estimate_terms(ring, stages, count);
  cert.factors = build_factors(model, ring, stages, options.exec);
  TensorElement acc = TensorElement::unit(model.algebra(), stages);
  for (const auto& f : cert.factors) {
    acc = ring.tensor_multiply(acc, f.realized);
    cert.peak_terms = std::max(cert.peak_terms, acc.size());
    if (!options.allow_large && static_cast<double>(acc.size()) > options.max_terms) {
      throw SizeGuardError("intermediate product reached " + std::to_string(acc.size()) +
                           " terms, over the term limit " +
                           std::to_string(static_cast<long long>(options.max_terms)) + " (a-priori estimate " +
                           std::to_string(static_cast<long long>(cert.estimated_terms)) + ") for (g, n, s) = (" +
                           std::to_string(cert.genus) + ", " + std::to_string(cert.points) + ", " +
                           std::to_string(stages) + ")");
    }
    cert.factor_count += f.multiplicity;
  }
  if (cert.factor_count != count) {
    throw VerificationError("factor count " + std::to_string(cert.factor_count) +
                            " differs from the expected " + std::to_string(count));
  }
  cert.result = std::move(acc);
  cert.nonzero = !cert.result.is_zero();
  if (label == EvaluationRing::BG && cert.genus >= 2) {
    cert.pattern = match_pattern(model, ring, stages, cert.result);
  }
  return cert;
}

Certificate evaluate_certificate(int genus, int points, int stages, EvaluationRing ring,
                                 const CertificateOptions& options) {
  if (stages < 2) throw std::invalid_argument("stages must be at least 2");
  SurfacePower model(genus, points, options.max_basis);
  const QuotientAlgebra q =
      ring == EvaluationRing::BG ? b_quotient(model, options.exec) : e_infinity(model, options.exec);
  return evaluate_certificate(model, q, ring, stages, options);
}

RingAgreement check_ring_agreement(int genus, int points, int stages, const CertificateOptions& options) {
  SurfacePower model(genus, points, options.max_basis);
  const QuotientAlgebra b = b_quotient(model, options.exec);
  const QuotientAlgebra e = e_infinity(model, options.exec);
  RingAgreement out{evaluate_certificate(model, b, EvaluationRing::BG, stages, options),
                    evaluate_certificate(model, e, EvaluationRing::EInfinity, stages, options),
                    TensorElement(model.algebra(), stages), false};
  out.image = b.tensor_normal_form(out.e_ring.result);
  out.agrees = out.b_ring.nonzero && out.e_ring.nonzero && out.image == out.b_ring.result;
  return out;
}

int tc_upper_bound(int genus, int points, int stages) {
  if (stages < 2) throw std::invalid_argument("stages must be at least 2");
  if (points < 1) throw std::invalid_argument("points must be at least 1");
  if (genus < 0) throw std::invalid_argument("genus must be non-negative");
  if (genus == 0) return points <= 2 ? stages : stages * points - 3;
  return expected_factor_count(genus, points, stages);
}

TcRecord tc_value(int genus, int points, int stages, const CertificateOptions& options) {
  TcRecord rec;
  rec.genus = genus;
  rec.points = points;
  rec.stages = stages;
  rec.upper = tc_upper_bound(genus, points, stages);
  rec.tc = rec.upper;
  if (genus == 0) {
    rec.lower = rec.upper;
    return rec;
  }
  const Certificate cert = evaluate_certificate(genus, points, stages, EvaluationRing::BG, options);
  rec.lower = cert.nonzero ? cert.factor_count : 0;
  rec.certified = cert.nonzero && rec.lower == rec.upper;
  return rec;
}

}  // namespace tcconf
