#include "tcconf/letter_algebra.hpp"

#include <stdexcept>

namespace tcconf {

namespace {

int surface_position(const LocalLetter& l, int genus) {
  switch (l.kind) {
    case LetterKind::One:
      return 0;
    case LetterKind::A:
      return 2 * l.index - 1;
    case LetterKind::B:
      return 2 * l.index;
    case LetterKind::Omega:
      return 2 * genus + 1;
    case LetterKind::Power:
      break;
  }
  throw std::invalid_argument("not a surface letter");
}

void check_handle(const LocalLetter& l, int genus) {
  if ((l.kind == LetterKind::A || l.kind == LetterKind::B) && (l.index < 1 || l.index > genus)) {
    throw std::out_of_range("generator out of range: handle " + std::to_string(l.index) +
                            " with genus " + std::to_string(genus));
  }
  if (l.kind == LetterKind::Power) throw std::invalid_argument("not a surface letter");
}

}  // namespace

SignedLetter local_multiply(const LocalLetter& u, const LocalLetter& v, int genus) {
  check_handle(u, genus);
  check_handle(v, genus);
  if (u.kind == LetterKind::One) return {1, surface_position(v, genus)};
  if (v.kind == LetterKind::One) return {1, surface_position(u, genus)};
  if (u.kind == LetterKind::Omega || v.kind == LetterKind::Omega) return {};
  if (u.kind == v.kind || u.index != v.index) return {};
  const int omega = 2 * genus + 1;
  return u.kind == LetterKind::A ? SignedLetter{1, omega} : SignedLetter{-1, omega};
}

LetterAlgebra LetterAlgebra::surface(int genus) {
  if (genus < 0) throw std::invalid_argument("genus must be non-negative");
  LetterAlgebra alg;
  alg.field_ = Field::Rationals;
  alg.genus_ = genus;
  alg.name_ = "H*(Sigma_" + std::to_string(genus) + ")";
  alg.letters_.push_back({LetterKind::One, 0, 0});
  for (int p = 1; p <= genus; ++p) {
    alg.letters_.push_back({LetterKind::A, p, 1});
    alg.letters_.push_back({LetterKind::B, p, 1});
  }
  alg.letters_.push_back({LetterKind::Omega, 0, 2});
  alg.top_degree_ = 2;
  const int n = alg.size();
  alg.table_.resize(n * n);
  for (int u = 0; u < n; ++u) {
    for (int v = 0; v < n; ++v) {
      alg.table_[u * n + v] = local_multiply(alg.letters_[u], alg.letters_[v], genus);
    }
  }
  return alg;
}

LetterAlgebra LetterAlgebra::truncated_polynomial(Field field, int generator_degree, int top_power,
                                                  std::string stem) {
  if (generator_degree < 1 || top_power < 0) {
    throw std::invalid_argument("truncated polynomial needs positive degree and a non-negative top power");
  }
  if (field == Field::Rationals && generator_degree % 2 == 1 && top_power > 1) {
    throw std::invalid_argument("odd generator over Q must square to zero (top power 1)");
  }
  LetterAlgebra alg;
  alg.field_ = field;
  alg.stem_ = std::move(stem);
  alg.name_ = std::string(to_string(field)) + "[" + alg.stem_ + "]/" + alg.stem_ + "^" +
              std::to_string(top_power + 1);
  for (int k = 0; k <= top_power; ++k) {
    alg.letters_.push_back({k == 0 ? LetterKind::One : LetterKind::Power, k, k * generator_degree});
  }
  alg.top_degree_ = top_power * generator_degree;
  const int n = alg.size();
  alg.table_.resize(n * n);
  for (int u = 0; u < n; ++u) {
    for (int v = 0; v < n; ++v) {
      if (u + v <= top_power) alg.table_[u * n + v] = {1, u + v};
    }
  }
  return alg;
}

std::string LetterAlgebra::token(int i, int coordinate) const {
  const LocalLetter& l = letters_.at(i);
  const std::string c = std::to_string(coordinate);
  switch (l.kind) {
    case LetterKind::One:
      return {};
    case LetterKind::A:
      return "a" + c + "(" + std::to_string(l.index) + ")";
    case LetterKind::B:
      return "b" + c + "(" + std::to_string(l.index) + ")";
    case LetterKind::Omega:
      return "w" + c;
    case LetterKind::Power:
      return l.index == 1 ? stem_ + c : stem_ + c + "^" + std::to_string(l.index);
  }
  return {};
}

int LetterAlgebra::surface_letter(LetterKind kind, int handle) const {
  if (!is_surface()) throw std::logic_error("not a surface algebra");
  LocalLetter l{kind, handle, 0};
  check_handle(l, genus_);
  return surface_position(l, genus_);
}

}  // namespace tcconf
