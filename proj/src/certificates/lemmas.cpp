#include "tcconf/lemmas.hpp"

#include <functional>
#include <stdexcept>

#include "tcconf/text_format.hpp"

namespace tcconf {

bool LemmaReport::passed() const { return failures() == 0; }

std::size_t LemmaReport::failures() const {
  std::size_t total = 0;
  for (const auto& c : checks) total += c.failures;
  return total;
}

namespace {

// A letter of the x/y alphabet in one coordinate: 'x', 'y', 'w' or '1'.
struct Letter {
  char kind = '1';
  int handle = 0;

  bool high() const { return kind == 'w' || ((kind == 'x' || kind == 'y') && handle >= 2); }
  std::string name(int i) const {
    if (kind == '1') return "1";
    if (kind == 'w') return "w" + std::to_string(i);
    return std::string(1, kind) + std::to_string(i) + "(" + std::to_string(handle) + ")";
  }
};

class Checker {
 public:
  Checker(const SurfacePower& model, const QuotientAlgebra& ring) : model_(model), ring_(ring) {}

  Element lift(const Letter& l, int i) const {
    switch (l.kind) {
      case 'x':
        return model_.x(i, l.handle);
      case 'y':
        return model_.y(i, l.handle);
      case 'w':
        return model_.omega(i);
      default:
        return model_.one();
    }
  }

  /// Every letter z_i in {x_i(p), y_i(p), omega_i}.
  std::vector<Letter> letters() const {
    std::vector<Letter> out;
    for (int p = 1; p <= model_.genus(); ++p) {
      out.push_back({'x', p});
      out.push_back({'y', p});
    }
    out.push_back({'w', 0});
    return out;
  }

  Element x(int i) const { return model_.x(i); }
  Element y(int i) const { return model_.y(i); }
  Element w(int i) const { return model_.omega(i); }

  void identity(IdentityCheck& check, const std::string& label, const Element& lhs,
                const Element& rhs) const {
    ++check.cases;
    if (!ring_.normal_form(lhs - rhs).is_zero()) fail(check, label + ": difference " + to_text(ring_.normal_form(lhs - rhs)));
  }

  void vanishes(IdentityCheck& check, const std::string& label, const Element& e) const {
    ++check.cases;
    const Element nf = ring_.normal_form(e);
    if (!nf.is_zero()) fail(check, label + " = " + to_text(nf));
  }

 private:
  static void fail(IdentityCheck& check, std::string detail) {
    if (check.failures++ == 0) check.detail = std::move(detail);
  }

  const SurfacePower& model_;
  const QuotientAlgebra& ring_;
};

IdentityCheck make(std::string name, std::string statement) {
  IdentityCheck c;
  c.name = std::move(name);
  c.statement = std::move(statement);
  return c;
}

// All tuples v_1..v_n of the modified basis: v_i in {1, x_i(p), y_i(p), w_i}
// with at most one high letter.
void for_each_modified_basis(const Checker& ck, int n,
                             const std::function<void(const std::vector<Letter>&)>& visit) {
  std::vector<Letter> choices{{'1', 0}};
  for (const auto& l : ck.letters()) choices.push_back(l);
  std::vector<Letter> v(n);
  std::function<void(int, int)> rec = [&](int i, int highs) {
    if (i == n) {
      visit(v);
      return;
    }
    for (const auto& l : choices) {
      const int h = highs + (l.high() ? 1 : 0);
      if (h > 1) continue;
      v[i] = l;
      rec(i + 1, h);
    }
  };
  rec(0, 0);
}

}  // namespace

LemmaReport verify_lemma_identities(int genus, int points, Execution exec) {
  if (genus < 2 || points < 3) throw std::invalid_argument("lemma suites need g >= 2 and n >= 3");
  SurfacePower model(genus, points);
  const QuotientAlgebra ag = a_quotient(model, exec);
  const QuotientAlgebra h = trivial_quotient(model.algebra(), exec);
  const Checker ck(model, ag);
  const Checker hk(model, h);
  const int n = points;

  LemmaReport report;
  report.genus = genus;
  report.points = points;

  // First lemma: products v * x_j y_j.
  auto vi = make("diag.i", "v * x_j y_j = 0 when v_j != 1");
  auto vii = make("diag.ii", "v * x_j y_j = 0 when v_1 is x_1(p), y_1(p) (p >= 2) or w_1");
  auto viii = make("diag.iii", "v * x_j y_j = 0 when v_1 in {x_1, y_1} and some v_k (k != 1, j) is high");
  for (int j = 2; j <= n; ++j) {
    const Element xy = ck.x(j) * ck.y(j);
    for_each_modified_basis(ck, n, [&](const std::vector<Letter>& v) {
      const bool c1 = v[j - 1].kind != '1';
      const bool c2 = v[0].high();
      bool c3 = false;
      if ((v[0].kind == 'x' || v[0].kind == 'y') && v[0].handle == 1) {
        for (int k = 2; k <= n; ++k) c3 = c3 || (k != j && v[k - 1].high());
      }
      if (!c1 && !c2 && !c3) return;
      Element prod = model.one();
      std::string name;
      for (int i = 1; i <= n; ++i) {
        prod = prod * ck.lift(v[i - 1], i);
        if (v[i - 1].kind != '1') name += (name.empty() ? "" : "*") + v[i - 1].name(i);
      }
      if (name.empty()) name = "1";
      const std::string label = name + " * x" + std::to_string(j) + "y" + std::to_string(j);
      if (c1) ck.vanishes(vi, label, prod * xy);
      if (c2) ck.vanishes(vii, label, prod * xy);
      if (c3) ck.vanishes(viii, label, prod * xy);
    });
  }
  report.checks.push_back(vi);
  report.checks.push_back(vii);
  report.checks.push_back(viii);

  auto iv = make("diag.iv", "x_1 * x_j y_j = x_1 w_j + w_1 x_j");
  auto v5 = make("diag.v", "y_1 * x_j y_j = y_1 w_j + w_1 y_j");
  auto v6 = make("diag.vi", "z_k * x_j y_j = z_k y_1 x_j - z_k x_1 y_j");
  for (int j = 2; j <= n; ++j) {
    const std::string js = std::to_string(j);
    const Element xy = ck.x(j) * ck.y(j);
    ck.identity(iv, "j=" + js, ck.x(1) * xy, ck.x(1) * ck.w(j) + ck.w(1) * ck.x(j));
    ck.identity(v5, "j=" + js, ck.y(1) * xy, ck.y(1) * ck.w(j) + ck.w(1) * ck.y(j));
    for (int k = 2; k <= n; ++k) {
      if (k == j) continue;
      for (const auto& l : ck.letters()) {
        if (!l.high()) continue;
        const Element z = ck.lift(l, k);
        ck.identity(v6, l.name(k) + ", j=" + js, z * xy, z * ck.y(1) * ck.x(j) - z * ck.x(1) * ck.y(j));
      }
    }
  }
  report.checks.push_back(iv);
  report.checks.push_back(v5);
  report.checks.push_back(v6);

  // Second lemma: products with x_i y_j, i != j.
  auto l2i = make("cross.i", "y_i * x_i y_j = -w_i y_j + w_1 y_j - y_1 x_i y_j + x_1 y_i y_j");
  auto l2ii = make("cross.ii", "z_i * x_i y_j = -z_i x_1 y_j for high z_i");
  auto l2iii = make("cross.iii", "x_j * x_i y_j = -x_i w_j + x_i w_1 + y_1 x_i x_j - x_1 x_i y_j");
  auto l2iv = make("cross.iv", "z_j * x_i y_j = -z_j x_i y_1 for high z_j");
  auto l2v = make("cross.v",
                  "y_i x_j * x_i y_j = y_1 w_i x_j + y_1 x_i w_j - x_1 w_i y_j - x_1 y_i w_j + w_1 y_i x_j - "
                  "w_1 x_i y_j");
  auto l2vi = make("cross.vi", "x_1 y_i * x_i y_j = -x_1 w_i y_j - w_1 x_i y_j");
  auto l2vii = make("cross.vii", "y_1 y_i * x_i y_j = -y_1 w_i y_j - w_1 y_i y_j");
  auto l2viii = make("cross.viii", "x_1 x_j * x_i y_j = -x_1 x_i w_j + w_1 x_i x_j");
  auto l2ix = make("cross.ix", "y_1 x_j * x_i y_j = -y_1 x_i w_j + w_1 x_i y_j");
  auto l2t1 = make("cross.zero1", "z_i * x_i y_j = 0 for the remaining z_i");
  auto l2t2 = make("cross.zero2", "z_j * x_i y_j = 0 for the remaining z_j");
  auto l2t3 = make("cross.zero3", "z_i z_j * x_i y_j = 0 unless z_i z_j = y_i x_j");
  auto l2t4 = make("cross.zero4", "z_1 z_i * x_i y_j = 0 unless z_1 z_i is x_1 y_i or y_1 y_i");
  auto l2t5 = make("cross.zero5", "z_1 z_j * x_i y_j = 0 unless z_1 z_j is x_1 x_j or y_1 x_j");
  auto l2t6 = make("cross.zero6", "z_1 z_i z_j * x_i y_j = 0");
  auto is = [](const Letter& l, char kind) { return l.kind == kind && l.handle == 1; };
  const auto zs = ck.letters();
  for (int i = 2; i <= n; ++i) {
    for (int j = 2; j <= n; ++j) {
      if (i == j) continue;
      const std::string ij = "i=" + std::to_string(i) + ", j=" + std::to_string(j);
      const Element r = ck.x(i) * ck.y(j);
      const Element x1 = ck.x(1), y1 = ck.y(1), w1 = ck.w(1);
      const Element xi = ck.x(i), yi = ck.y(i), wi = ck.w(i);
      const Element xj = ck.x(j), yj = ck.y(j), wj = ck.w(j);

      ck.identity(l2i, ij, yi * r, -(wi * yj) + w1 * yj - y1 * xi * yj + x1 * yi * yj);
      ck.identity(l2iii, ij, xj * r, -(xi * wj) + xi * w1 + y1 * xi * xj - x1 * xi * yj);
      ck.identity(l2v, ij, yi * xj * r,
                  y1 * wi * xj + y1 * xi * wj - x1 * wi * yj - x1 * yi * wj + w1 * yi * xj - w1 * xi * yj);
      ck.identity(l2vi, ij, x1 * yi * r, -(x1 * wi * yj) - w1 * xi * yj);
      ck.identity(l2vii, ij, y1 * yi * r, -(y1 * wi * yj) - w1 * yi * yj);
      ck.identity(l2viii, ij, x1 * xj * r, -(x1 * xi * wj) + w1 * xi * xj);
      ck.identity(l2ix, ij, y1 * xj * r, -(y1 * xi * wj) + w1 * xi * yj);

      for (const auto& a : zs) {
        const Element za = ck.lift(a, i);
        const std::string an = a.name(i);
        if (a.high()) {
          ck.identity(l2ii, an + ", " + ij, za * r, -(za * x1 * yj));
        } else if (!is(a, 'y')) {
          ck.vanishes(l2t1, an + ", " + ij, za * r);
        }
      }
      for (const auto& b : zs) {
        const Element zb = ck.lift(b, j);
        const std::string bn = b.name(j);
        if (b.high()) {
          ck.identity(l2iv, bn + ", " + ij, zb * r, -(zb * xi * y1));
        } else if (!is(b, 'x')) {
          ck.vanishes(l2t2, bn + ", " + ij, zb * r);
        }
      }
      for (const auto& a : zs) {
        for (const auto& b : zs) {
          if (is(a, 'y') && is(b, 'x')) continue;
          ck.vanishes(l2t3, a.name(i) + "*" + b.name(j) + ", " + ij, ck.lift(a, i) * ck.lift(b, j) * r);
        }
      }
      for (const auto& c : zs) {
        const Element zc = ck.lift(c, 1);
        for (const auto& a : zs) {
          if ((is(c, 'x') || is(c, 'y')) && is(a, 'y')) continue;
          ck.vanishes(l2t4, c.name(1) + "*" + a.name(i) + ", " + ij, zc * ck.lift(a, i) * r);
        }
        for (const auto& b : zs) {
          if ((is(c, 'x') || is(c, 'y')) && is(b, 'x')) continue;
          ck.vanishes(l2t5, c.name(1) + "*" + b.name(j) + ", " + ij, zc * ck.lift(b, j) * r);
        }
        for (const auto& a : zs) {
          for (const auto& b : zs) {
            ck.vanishes(l2t6, c.name(1) + "*" + a.name(i) + "*" + b.name(j) + ", " + ij,
                        zc * ck.lift(a, i) * ck.lift(b, j) * r);
          }
        }
      }
    }
  }
  for (auto* c : {&l2i, &l2ii, &l2iii, &l2iv, &l2v, &l2vi, &l2vii, &l2viii, &l2ix, &l2t1, &l2t2, &l2t3,
                  &l2t4, &l2t5, &l2t6}) {
    report.checks.push_back(*c);
  }

  // Totaro relations rewritten in the x/y letters, checked in H* itself.
  auto t1 = make("rel.1j", "w_1 + w_j + b_1 a_j - a_1 b_j = x_j y_j");
  auto t2 = make("rel.ij", "w_i + w_j + b_i a_j - a_i b_j = (a_i - a_j)(b_i - b_j) = (x_i - x_j)(y_i - y_j) = "
                         "x_i y_i + x_j y_j - x_i y_j - x_j y_i");
  for (int j = 2; j <= n; ++j) {
    hk.identity(t1, "j=" + std::to_string(j),
                model.omega(1) + model.omega(j) + model.b(1) * model.a(j) - model.a(1) * model.b(j),
                model.x(j) * model.y(j));
    for (int i = 2; i < j; ++i) {
      const std::string ij = "i=" + std::to_string(i) + ", j=" + std::to_string(j);
      const Element lhs =
          model.omega(i) + model.omega(j) + model.b(i) * model.a(j) - model.a(i) * model.b(j);
      const Element ab = (model.a(i) - model.a(j)) * (model.b(i) - model.b(j));
      const Element xy = (model.x(i) - model.x(j)) * (model.y(i) - model.y(j));
      const Element expanded =
          model.x(i) * model.y(i) + model.x(j) * model.y(j) - model.x(i) * model.y(j) - model.x(j) * model.y(i);
      hk.identity(t2, ij + " (first)", lhs, ab);
      hk.identity(t2, ij + " (second)", ab, xy);
      hk.identity(t2, ij + " (third)", xy, expanded);
    }
  }
  report.checks.push_back(t1);
  report.checks.push_back(t2);
  return report;
}

IdentityCheck verify_key_identity(int genus, int points, Execution exec) {
  if (points < 2) throw std::invalid_argument("the identity needs n >= 2");
  SurfacePower model(genus, points);
  const QuotientAlgebra e = e_infinity(model, exec);
  const Checker ck(model, e);
  auto check = make("key", "x_j y_j = w_j - w_1 + y_1 x_j - x_1 y_j in E(g)_inf");
  for (int j = 2; j <= points; ++j) {
    const Element lhs = e.normal_form(model.x(j) * model.y(j));
    const Element rhs = e.normal_form(model.omega(j) - model.omega(1) + model.y(1) * model.x(j) -
                                      model.x(1) * model.y(j));
    ck.identity(check, "j=" + std::to_string(j), lhs, rhs);
  }
  return check;
}

}  // namespace tcconf
