#include "tcconf/text_format.hpp"

#include <sstream>
#include <stdexcept>
#include <vector>

namespace tcconf {

namespace {

std::string signed_coeff(const Scalar& c) {
  std::string s = c.to_string();
  return s.front() == '-' ? s : "+" + s;
}

std::vector<std::string> tokenize(std::string_view text) {
  std::vector<std::string> out;
  std::istringstream in{std::string(text)};
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

bool is_coefficient(const std::string& tok) {
  return tok.size() >= 2 && (tok[0] == '+' || tok[0] == '-');
}

}  // namespace

std::string to_text(const Element& e) {
  if (e.is_zero()) return "0";
  std::string out;
  for (const auto& t : e.terms()) {
    if (!out.empty()) out += ' ';
    out += signed_coeff(t.coeff) + ' ' + e.algebra().word(t.index);
  }
  return out;
}

std::string to_text(const TensorElement& t) {
  if (t.is_zero()) return "0";
  std::string out;
  for (const auto& term : t.terms()) {
    if (!out.empty()) out += ' ';
    out += signed_coeff(term.coeff);
    for (std::size_t k = 0; k < term.word.size(); ++k) {
      out += k == 0 ? " " : " (x) ";
      out += t.algebra().word(term.word[k]);
    }
  }
  return out;
}

Element parse_element(const AlgebraPtr& algebra, std::string_view text) {
  const auto toks = tokenize(text);
  if (toks.size() == 1 && toks[0] == "0") return Element::zero(algebra);
  if (toks.size() % 2 != 0 || toks.empty()) throw std::invalid_argument("malformed element text");
  std::vector<SparseVector::Entry> entries;
  for (std::size_t i = 0; i < toks.size(); i += 2) {
    if (!is_coefficient(toks[i])) throw std::invalid_argument("expected coefficient, got '" + toks[i] + "'");
    entries.push_back({algebra->parse_word(toks[i + 1]), Scalar::parse(toks[i], algebra->field())});
  }
  return Element(algebra, SparseVector::from_unsorted(algebra->field(), std::move(entries)));
}

TensorElement parse_tensor(const AlgebraPtr& algebra, std::string_view text, int arity) {
  const auto toks = tokenize(text);
  if (toks.size() == 1 && toks[0] == "0") return TensorElement(algebra, arity);
  std::vector<TensorTerm> terms;
  std::size_t i = 0;
  while (i < toks.size()) {
    if (!is_coefficient(toks[i])) throw std::invalid_argument("expected coefficient, got '" + toks[i] + "'");
    TensorTerm term{{}, Scalar::parse(toks[i], algebra->field())};
    ++i;
    while (true) {
      if (i >= toks.size()) throw std::invalid_argument("tensor term ends without a word");
      term.word.push_back(algebra->parse_word(toks[i++]));
      if (i < toks.size() && toks[i] == "(x)") {
        ++i;
        continue;
      }
      break;
    }
    if (static_cast<int>(term.word.size()) != arity) {
      throw std::invalid_argument("tensor term has " + std::to_string(term.word.size()) +
                                  " slots, expected " + std::to_string(arity));
    }
    terms.push_back(std::move(term));
  }
  return TensorElement(algebra, arity, std::move(terms));
}

}  // namespace tcconf
