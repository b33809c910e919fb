#include "report.hpp"

namespace tcconf::cli {

Json word_json(const ProductAlgebra& alg, const TensorWord& word) {
  Json slots = Json::array();
  for (MonomialIndex m : word) slots.push_back(alg.word(m));
  return slots;
}

Json tensor_json(const TensorElement& t) {
  Json terms = Json::array();
  for (const auto& term : t.terms()) {
    terms.push_back({{"coeff", term.coeff.to_string()}, {"slots", word_json(t.algebra(), term.word)}});
  }
  return terms;
}

Json record_json(const TcRecord& rec) {
  return {{"genus", rec.genus}, {"n", rec.points},          {"s", rec.stages},
          {"upper", rec.upper}, {"lower", rec.lower},       {"tc", rec.tc},
          {"certified", rec.certified}};
}

bool certificate_verified(const Certificate& cert, const std::optional<bool>& agrees) {
  const bool count_ok = cert.factor_count == expected_factor_count(cert.genus, cert.points, cert.stages);
  const bool pattern_ok = !cert.pattern || cert.pattern->matches;
  return cert.nonzero && count_ok && pattern_ok && agrees.value_or(true);
}

Json certificate_json(const Certificate& cert, const std::optional<bool>& agrees) {
  Json factors = Json::array();
  for (const auto& f : cert.factors) {
    factors.push_back({{"kind", std::string(to_string(f.kind))},
                       {"label", f.label},
                       {"multiplicity", f.multiplicity},
                       {"terms", f.realized.size()}});
  }
  Json j = {{"genus", cert.genus},
            {"n", cert.points},
            {"s", cert.stages},
            {"ring", std::string(to_string(cert.ring))},
            {"factors", factors},
            {"factor_count", cert.factor_count},
            {"expected_factor_count", expected_factor_count(cert.genus, cert.points, cert.stages)},
            {"nonzero", cert.nonzero},
            {"support_size", cert.result.size()},
            {"support", tensor_json(cert.result)},
            {"estimated_terms", cert.estimated_terms},
            {"peak_terms", cert.peak_terms}};
  if (cert.pattern) {
    const auto& p = *cert.pattern;
    const auto& alg = cert.result.algebra();
    j["pattern"] = {{"first", word_json(alg, p.first)},
                    {"second", word_json(alg, p.second)},
                    {"coincide", p.coincide},
                    {"first_coeff", p.first_coeff.to_string()},
                    {"second_coeff", p.second_coeff.to_string()},
                    {"matches", p.matches}};
  } else {
    j["pattern"] = nullptr;
  }
  if (agrees) j["agrees_with_b"] = *agrees;
  j["verified"] = certificate_verified(cert, agrees);
  return j;
}

Json identity_json(const IdentityCheck& check) {
  return {{"name", check.name},         {"statement", check.statement}, {"cases", check.cases},
          {"failures", check.failures}, {"passed", check.passed()},     {"detail", check.detail}};
}

Json zcl_json(const ZclResult& result) {
  Json witness = Json::array();
  for (const auto& z : result.witness) witness.push_back(tensor_json(z));
  return {{"s", result.stages},
          {"strategy", std::string(to_string(result.strategy))},
          {"bound", result.bound},
          {"witness", witness},
          {"product", tensor_json(result.product)}};
}

}  // namespace tcconf::cli
