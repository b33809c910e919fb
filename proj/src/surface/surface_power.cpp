#include "tcconf/surface.hpp"

#include <stdexcept>

namespace tcconf {

std::string_view to_string(RelationLabel label) {
  switch (label) {
    case RelationLabel::Totaro:
      return "TOTARO";
    case RelationLabel::Bunch16:
      return "BUNCH16";
    case RelationLabel::JG:
      return "J_G";
  }
  return "?";
}

SurfacePower::SurfacePower(int genus, int points, std::size_t max_basis)
    : genus_(genus), points_(points) {
  if (genus < 1) throw std::invalid_argument("surface model needs genus >= 1");
  if (points < 1) throw std::invalid_argument("surface model needs at least one point");
  algebra_ = ProductAlgebra::create(LetterAlgebra::surface(genus), points, max_basis);
}

int SurfacePower::letter(LetterKind kind, int handle) const {
  return algebra_->letters().surface_letter(kind, handle);
}

void SurfacePower::check_point(int i) const {
  if (i < 1 || i > points_) {
    throw std::out_of_range("point index " + std::to_string(i) + " out of range [1, " +
                            std::to_string(points_) + "]");
  }
}

Element SurfacePower::single(int i, LetterKind kind, int p) const {
  check_point(i);
  return Element::monomial(algebra_, algebra_->single(i - 1, letter(kind, p)));
}

Element SurfacePower::a(int i, int p) const { return single(i, LetterKind::A, p); }
Element SurfacePower::b(int i, int p) const { return single(i, LetterKind::B, p); }
Element SurfacePower::omega(int i) const { return single(i, LetterKind::Omega, 0); }

Element SurfacePower::x(int i, int p) const {
  if (p == 1 && i >= 2) return a(i, 1) - a(1, 1);
  return a(i, p);
}

Element SurfacePower::y(int i, int p) const {
  if (p == 1 && i >= 2) return b(i, 1) - b(1, 1);
  return b(i, p);
}

RelationSet SurfacePower::totaro_relations() const {
  RelationSet r{RelationLabel::Totaro, {}};
  for (int i = 1; i <= points_; ++i) {
    for (int j = i + 1; j <= points_; ++j) {
      Element g = omega(i) + omega(j);
      for (int p = 1; p <= genus_; ++p) g += b(i, p) * a(j, p) - a(i, p) * b(j, p);
      r.generators.push_back(std::move(g));
    }
  }
  return r;
}

RelationSet SurfacePower::bunch16_relations() const {
  RelationSet r{RelationLabel::Bunch16, {}};
  for (int i = 1; i <= points_; ++i) {
    for (int j = 1; j <= points_; ++j) {
      if (i == j) continue;
      for (int p = 2; p <= genus_; ++p) {
        for (int q = 2; q <= genus_; ++q) {
          r.generators.push_back(x(i, p) * x(j, q));
          r.generators.push_back(x(i, p) * y(j, q));
          r.generators.push_back(y(i, p) * y(j, q));
        }
      }
    }
  }
  return r;
}

RelationSet SurfacePower::j_g_relations() const {
  RelationSet r{RelationLabel::JG, {}};
  for (int i = 2; i <= points_; ++i) {
    for (int j = 2; j <= points_; ++j) r.generators.push_back(x(i) * y(j));
  }
  return r;
}

std::vector<NamedElement> SurfacePower::basis_beta1() const {
  std::vector<NamedElement> out;
  out.reserve(algebra_->dimension());
  for (MonomialIndex m = 0; m < algebra_->dimension(); ++m) {
    out.push_back({algebra_->word(m), Element::monomial(algebra_, m)});
  }
  return out;
}

std::vector<NamedElement> SurfacePower::restricted_basis(bool shifted) const {
  const LetterAlgebra& L = algebra_->letters();
  std::vector<NamedElement> out;
  for (MonomialIndex m = 0; m < algebra_->dimension(); ++m) {
    const auto letters = algebra_->letters_of(m);
    int special = 0;
    for (int l : letters) {
      const LocalLetter& ll = L.letter(l);
      if (ll.kind == LetterKind::Omega || (ll.kind != LetterKind::One && ll.index >= 2)) ++special;
    }
    if (special > 1) continue;
    if (!shifted) {
      out.push_back({algebra_->word(m), Element::monomial(algebra_, m)});
      continue;
    }
    std::string name;
    Element value = one();
    for (int i = 0; i < points_; ++i) {
      const LocalLetter& ll = L.letter(letters[i]);
      if (ll.kind == LetterKind::One) continue;
      const int point = i + 1;
      std::string tok;
      switch (ll.kind) {
        case LetterKind::A:
          value = value * x(point, ll.index);
          tok = "x" + std::to_string(point) + "(" + std::to_string(ll.index) + ")";
          break;
        case LetterKind::B:
          value = value * y(point, ll.index);
          tok = "y" + std::to_string(point) + "(" + std::to_string(ll.index) + ")";
          break;
        default:
          value = value * omega(point);
          tok = "w" + std::to_string(point);
          break;
      }
      name += name.empty() ? tok : "*" + tok;
    }
    out.push_back({name.empty() ? "1" : name, std::move(value)});
  }
  return out;
}

std::vector<NamedElement> SurfacePower::basis_beta2() const { return restricted_basis(false); }
std::vector<NamedElement> SurfacePower::basis_beta2_prime() const { return restricted_basis(true); }

long long beta2_count(int genus, int points) {
  long long p3 = 1;
  for (int i = 0; i < points - 1; ++i) p3 *= 3;
  return 3 * p3 + static_cast<long long>(points) * (2 * genus - 1) * p3;
}

Element map_to_genus(const Element& e, const SurfacePower& source, const SurfacePower& target) {
  if (e.algebra_ptr() != source.algebra()) throw std::invalid_argument("element is not in the source algebra");
  if (source.points() != target.points()) throw std::invalid_argument("point counts differ");
  if (source.genus() > target.genus()) throw std::invalid_argument("target genus is smaller");
  const ProductAlgebra& src = *source.algebra();
  const ProductAlgebra& dst = *target.algebra();
  const LetterAlgebra& L = src.letters();
  std::vector<int> image(L.size());
  for (int l = 0; l < L.size(); ++l) {
    const LocalLetter& ll = L.letter(l);
    image[l] = target.letter(ll.kind, ll.index);
  }
  std::vector<SparseVector::Entry> entries;
  std::vector<int> letters(src.coordinates());
  for (const auto& t : e.terms()) {
    for (int i = 0; i < src.coordinates(); ++i) letters[i] = image[src.letter(t.index, i)];
    entries.push_back({dst.monomial(letters), t.coeff});
  }
  return Element(target.algebra(), SparseVector::from_unsorted(dst.field(), std::move(entries)));
}

}  // namespace tcconf
