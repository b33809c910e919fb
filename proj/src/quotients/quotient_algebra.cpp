#include "tcconf/quotient.hpp"

#include <stdexcept>

#include "tcconf/kernels.hpp"
#include "tcconf/text_format.hpp"

namespace tcconf {

std::string_view to_string(QuotientLabel label) {
  switch (label) {
    case QuotientLabel::EInfinity:
      return "E_INF";
    case QuotientLabel::AG:
      return "A_G";
    case QuotientLabel::BG:
      return "B_G";
    case QuotientLabel::Custom:
      return "CUSTOM";
  }
  return "?";
}

GradedSubspace ideal_span(const AlgebraPtr& algebra, std::span<const Element> generators,
                          Execution exec) {
  const ProductAlgebra& alg = *algebra;
  GradedSubspace span(alg.field(), std::vector<int>(alg.degrees().begin(), alg.degrees().end()));
  std::vector<SparseVector> gens;
  for (const auto& g : generators) {
    if (g.algebra_ptr() != algebra) throw std::invalid_argument("generator from a different algebra");
    if (g.is_zero()) continue;
    if (!g.is_homogeneous()) throw std::invalid_argument("inhomogeneous generator");
    gens.push_back(g.terms());
  }
  for (auto& p : kernels::ideal_products(alg, gens, exec)) span.insert(p.vector, p.degree);
  span.freeze();
  return span;
}

QuotientAlgebra::QuotientAlgebra(AlgebraPtr parent, GradedSubspace ideal, QuotientLabel label,
                                 Execution exec)
    : parent_(std::move(parent)), ideal_(std::move(ideal)), label_(label), exec_(exec) {
  const auto degs = parent_->degrees();
  const auto ideal_degs = ideal_.ambient_degrees();
  if (ideal_.field() != parent_->field() ||
      !std::equal(degs.begin(), degs.end(), ideal_degs.begin(), ideal_degs.end())) {
    throw std::invalid_argument("ideal does not live in the parent algebra");
  }
  if (label_ != QuotientLabel::Custom && !parent_->letters().is_surface()) {
    throw std::invalid_argument("label " + std::string(to_string(label_)) +
                                " requires a surface algebra");
  }
  ideal_.freeze();
  monomial_nf_ = kernels::normal_form_table(ideal_, exec_);
}

void QuotientAlgebra::check_parent(const AlgebraPtr& alg) const {
  if (alg != parent_) throw std::invalid_argument("element is not in the parent algebra");
}

Element QuotientAlgebra::normal_form(const Element& e) const {
  check_parent(e.algebra_ptr());
  SparseVector acc(parent_->field());
  for (const auto& t : e.terms()) acc.axpy(t.coeff, monomial_nf_[t.index]);
  return Element(parent_, std::move(acc));
}

Element QuotientAlgebra::multiply(const Element& lhs, const Element& rhs) const {
  return normal_form(normal_form(lhs) * normal_form(rhs));
}

TensorElement QuotientAlgebra::tensor_normal_form(const TensorElement& t) const {
  check_parent(t.algebra_ptr());
  TensorTerms terms = kernels::slotwise_normal_form(parent_->field(), monomial_nf_, t.terms(), exec_);
  return TensorElement(parent_, t.arity(), std::move(terms));
}

TensorElement QuotientAlgebra::tensor_multiply(const TensorElement& lhs,
                                               const TensorElement& rhs) const {
  return tensor_normal_form(tcconf::tensor_multiply(lhs, rhs, exec_));
}

Element QuotientAlgebra::mu(const TensorElement& t) const { return normal_form(tcconf::mu(t)); }

std::vector<MonomialIndex> QuotientAlgebra::standard_basis(int degree) const {
  if (degree < 0 || degree > ideal_.max_degree()) return {};
  return ideal_.non_pivot_basis(degree);
}

std::size_t QuotientAlgebra::dimension() const {
  return parent_->dimension() - ideal_.total_rank();
}

std::vector<long long> QuotientAlgebra::poincare_polynomial() const {
  std::vector<long long> p = parent_->poincare_polynomial();
  for (int d = 0; d < static_cast<int>(p.size()); ++d) p[d] -= static_cast<long long>(ideal_.rank(d));
  while (p.size() > 1 && p.back() == 0) p.pop_back();
  return p;
}

QuotientAlgebra trivial_quotient(const AlgebraPtr& algebra, Execution exec) {
  return QuotientAlgebra(algebra, ideal_span(algebra, {}, exec), QuotientLabel::Custom, exec);
}

namespace {

QuotientAlgebra build(const SurfacePower& model, std::vector<Element> gens, QuotientLabel label,
                      Execution exec) {
  return QuotientAlgebra(model.algebra(), ideal_span(model.algebra(), gens, exec), label, exec);
}

}  // namespace

QuotientAlgebra e_infinity(const SurfacePower& model, Execution exec) {
  return build(model, model.totaro_relations().generators, QuotientLabel::EInfinity, exec);
}

QuotientAlgebra a_quotient(const SurfacePower& model, Execution exec) {
  return build(model, model.bunch16_relations().generators, QuotientLabel::AG, exec);
}

QuotientAlgebra b_quotient(const SurfacePower& model, Execution exec) {
  std::vector<Element> gens = model.bunch16_relations().generators;
  for (auto& g : model.j_g_relations().generators) gens.push_back(std::move(g));
  return build(model, std::move(gens), QuotientLabel::BG, exec);
}

std::size_t rank_of(std::span<const SparseVector> rows, Field field) {
  std::size_t max_index = 0;
  for (const auto& r : rows) {
    if (!r.is_zero()) max_index = std::max<std::size_t>(max_index, r.entries().back().index + 1);
  }
  GradedSubspace space(field, std::vector<int>(max_index, 0));
  std::size_t rank = 0;
  for (const auto& r : rows) {
    if (!r.is_zero() && space.insert(r, 0)) ++rank;
  }
  return rank;
}

std::size_t rank_in(const QuotientAlgebra& q, std::span<const Element> elements) {
  std::vector<SparseVector> rows;
  rows.reserve(elements.size());
  for (const auto& e : elements) rows.push_back(q.normal_form(e).terms());
  return rank_of(rows, q.parent()->field());
}

bool ChainReport::passed() const {
  for (const auto& c : checks) {
    if (!c.vanishes) return false;
  }
  return true;
}

ChainReport verify_subalgebra_chain(int genus, int points, Execution exec) {
  if (genus < 2) throw std::invalid_argument("subalgebra chain needs genus >= 2");
  ChainReport report{genus, points, {}};
  for (int h = 1; h < genus; ++h) {
    const SurfacePower source(h, points);
    const SurfacePower target(h + 1, points);
    const QuotientAlgebra b_target = b_quotient(target, exec);
    for (const auto& set : {source.bunch16_relations(), source.j_g_relations()}) {
      for (const auto& r : set.generators) {
        const Element image = map_to_genus(r, source, target);
        report.checks.push_back({h, h + 1, std::string(to_string(set.label)) + ": " + to_text(r),
                                 b_target.is_zero(image)});
      }
    }
  }
  return report;
}

}  // namespace tcconf
