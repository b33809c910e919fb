#include <doctest.h>

#include <map>
#include <set>

#include "oracles.hpp"
#include "tcconf/certificate.hpp"
#include "tcconf/errors.hpp"
#include "tcconf/lemmas.hpp"
#include "tcconf/text_format.hpp"
#include "tcconf/zcl.hpp"

using namespace tcconf;

namespace {

std::vector<Element> a_letters(const SurfacePower& m) {
  std::vector<Element> out;
  for (int i = 1; i <= m.points(); ++i) out.push_back(m.a(i));
  return out;
}

// Words (J_1, .., J_s) where each point i is omitted from exactly one slot o_i;
// slot k holds the product of a_i over i with o_i != k.
std::set<TensorWord> omission_words(const SurfacePower& m, int s) {
  const int n = m.points();
  std::set<TensorWord> out;
  std::vector<int> omit(n, 0);
  while (true) {
    TensorWord w(s);
    for (int k = 0; k < s; ++k) {
      std::vector<int> letters(n, 0);
      for (int i = 0; i < n; ++i) {
        if (omit[i] != k) letters[i] = m.letter(LetterKind::A, 1);
      }
      w[k] = m.algebra()->monomial(letters);
    }
    out.insert(w);
    int i = 0;
    while (i < n && ++omit[i] == s) omit[i++] = 0;
    if (i == n) break;
  }
  return out;
}

std::set<TensorWord> support_set(const TensorElement& t) {
  const auto v = t.support();
  return {v.begin(), v.end()};
}

// Replaces a_i(1) by x_i in every slot of a tensor supported on products of a_i(1).
TensorElement substitute_x(const SurfacePower& m, const TensorElement& t) {
  TensorElement out(m.algebra(), t.arity());
  const int a1 = m.letter(LetterKind::A, 1);
  for (const auto& term : t.terms()) {
    std::vector<Element> slots;
    for (MonomialIndex w : term.word) {
      Element e = m.one();
      for (int i = 0; i < m.points(); ++i) {
        const int l = m.algebra()->letter(w, i);
        if (l == a1) {
          e = e * m.x(i + 1);
        } else {
          REQUIRE(l == 0);
        }
      }
      slots.push_back(e);
    }
    out += term.coeff * TensorElement::from_slots(slots);
  }
  return out;
}

}  // namespace

TEST_CASE("bar of an odd class") {
  SurfacePower m(2, 2);
  const Element u = m.x(2);
  CHECK(bar(u, 2) == TensorElement::embed(u, 0, 2) - TensorElement::embed(u, 1, 2));
  const Element a = m.a(1);
  CHECK(bar(a, 3).size() == 3);
  CHECK(bar(a, 4).size() == 4);
  for (int s = 2; s <= 4; ++s) CHECK(mu(bar(u, s)).is_zero());
  CHECK_THROWS_AS(bar(m.one(), 2), std::invalid_argument);
  CHECK_THROWS_AS(bar(m.a(1) + m.omega(1), 2), std::invalid_argument);
  CHECK_THROWS_AS(bar(m.a(1), 1), std::invalid_argument);
}

TEST_CASE("product of bars: omission-pattern support") {
  for (auto [n, s] : {std::pair{1, 2}, {1, 4}, {2, 2}, {2, 3}, {3, 3}, {3, 4}}) {
    SurfacePower m(1, n);
    const auto as = a_letters(m);
    const TensorElement p = bar_product(as, s);
    const auto expected = omission_words(m, s);
    CHECK(expected.size() == static_cast<std::size_t>(std::pow(s, n)));
    CHECK(support_set(p) == expected);
    for (const auto& term : p.terms()) CHECK((term.coeff == Scalar(1) || term.coeff == Scalar(-1)));
    // x_i differ from a_i by a change of basis of the exterior algebra they span.
    CHECK(bar_product_xs(m, s) == substitute_x(m, p));
  }
  SurfacePower m(2, 2);
  // n = 2, s = 2: x1x2 (x) 1, x1 (x) x2, x2 (x) x1, 1 (x) x1x2.
  const TensorElement p = bar_product_xs(m, 2);
  const std::vector<std::vector<Element>> patterns{{m.x(1) * m.x(2), m.one()},
                                                  {m.x(1), m.x(2)},
                                                  {m.x(2), m.x(1)},
                                                  {m.one(), m.x(1) * m.x(2)}};
  TensorElement rebuilt(m.algebra(), 2);
  for (const auto& slots : patterns) {
    const auto t = TensorElement::from_slots(slots);
    // Coefficient +-1 on each pattern, read off from a word unique to it.
    const auto& w = t.terms().front().word;
    rebuilt += (p.coefficient(w) / t.coefficient(w)) * t;
  }
  CHECK(rebuilt == p);
}

TEST_CASE("product of tildes") {
  for (int n = 1; n <= 3; ++n) {
    for (int s = 2; s <= 4; ++s) {
      SurfacePower m(1, n);
      std::vector<Element> bs;
      for (int i = 1; i <= n; ++i) bs.push_back(m.b(i));
      const TensorElement pb = tilde_product(bs, s);
      CHECK(pb.size() == (1u << n));
      const TensorElement py = tilde_product_ys(m, s);
      for (const auto& t : py.terms()) {
        for (int k = 1; k + 1 < s; ++k) CHECK(t.word[k] == m.algebra()->unit());
      }
    }
  }
  SurfacePower m(1, 1);
  CHECK(tilde_product_ys(m, 2) == TensorElement::embed(m.y(1), 0, 2) - TensorElement::embed(m.y(1), 1, 2));
}

TEST_CASE("y_{1,i} products") {
  SurfacePower m(2, 2);
  CHECK(y1i_product(m, 2) == TensorElement::unit(m.algebra(), 2));
  for (int s = 3; s <= 5; ++s) {
    const TensorElement p = y1i_product(m, s);
    CHECK(p.size() == static_cast<std::size_t>(s - 1));
    const MonomialIndex y1 = m.algebra()->single(0, m.letter(LetterKind::B, 1));
    for (const auto& t : p.terms()) {
      int units = 0;
      for (int k = 0; k + 1 < s; ++k) {
        if (t.word[k] == m.algebra()->unit()) {
          ++units;
        } else {
          CHECK(t.word[k] == y1);
        }
      }
      CHECK(units == 1);
      CHECK(t.word[s - 1] == m.algebra()->unit());
    }
    CHECK(mu(p).is_zero());
  }
}

TEST_CASE("c and d") {
  SurfacePower m(2, 2);
  const auto [c2, d2] = c_d_factors(m, 2);
  CHECK(d2 == TensorElement::embed(m.b(1, 2), 0, 2) - TensorElement::embed(m.b(1, 2), 1, 2));
  CHECK(c2 == TensorElement::embed(m.a(1, 2), 0, 2) - TensorElement::embed(m.a(1, 2), 1, 2));
  const auto [c3, d3] = c_d_factors(m, 3);
  CHECK(d3 == TensorElement::embed(m.b(1, 2), 0, 3) - TensorElement::embed(m.b(1, 2), 2, 3));
  CHECK(c3 == TensorElement::embed(m.a(1, 2), 0, 3) - TensorElement::embed(m.a(1, 2), 1, 3));
  CHECK(mu(c3).is_zero());
  CHECK_THROWS_AS(c_d_factors(SurfacePower(1, 2), 2), std::invalid_argument);
}

TEST_CASE("factors must be zero divisors") {
  SurfacePower m(1, 1);
  const QuotientAlgebra h = trivial_quotient(m.algebra());
  CHECK_THROWS_AS(make_factor(FactorKind::Generic, "a", 1, TensorElement::embed(m.a(1), 0, 2), h),
                  VerificationError);
  CHECK_NOTHROW(make_factor(FactorKind::Tilde, "y1", 1, tilde(m.y(1), 2), h));
}

TEST_CASE("Koszul sign of single words against the closed formula") {
  auto gen = oracle::rng(808);
  SurfacePower m(2, 2);
  const auto& alg = m.algebra();
  std::uniform_int_distribution<MonomialIndex> mono(0, static_cast<MonomialIndex>(alg->dimension() - 1));
  for (int trial = 0; trial < 200; ++trial) {
    const int s = 2 + trial % 3;
    std::vector<Element> us, vs, prods;
    int exponent = 0;
    std::vector<int> du, dv;
    for (int k = 0; k < s; ++k) {
      const MonomialIndex u = mono(gen), v = mono(gen);
      us.push_back(Element::monomial(alg, u));
      vs.push_back(Element::monomial(alg, v));
      prods.push_back(us.back() * vs.back());
      du.push_back(alg->degree(u));
      dv.push_back(alg->degree(v));
    }
    for (int k = 0; k < s; ++k) {
      for (int l = k + 1; l < s; ++l) exponent += dv[k] * du[l];
    }
    const Scalar sign(exponent % 2 == 0 ? 1 : -1);
    CHECK(tensor_multiply(TensorElement::from_slots(us), TensorElement::from_slots(vs)) ==
          sign * TensorElement::from_slots(prods));
  }
}

TEST_CASE("certificate examples") {
  SUBCASE("g=2, n=2, s=2") {
    const Certificate c = evaluate_certificate(2, 2, 2, EvaluationRing::BG);
    CHECK(c.nonzero);
    CHECK(c.factor_count == 6);
    REQUIRE(c.pattern);
    CHECK(c.pattern->matches);
    CHECK_FALSE(c.pattern->coincide);
    CHECK(c.result.size() == 2);
    CHECK(c.pattern->first_coeff.value() * c.pattern->first_coeff.value() == 4);
    CHECK(c.pattern->second_coeff.value() * c.pattern->second_coeff.value() == 4);
  }
  SUBCASE("g=1, n=2, s=2") {
    const Certificate c = evaluate_certificate(1, 2, 2, EvaluationRing::BG);
    CHECK(c.nonzero);
    CHECK(c.factor_count == 4);
    CHECK_FALSE(c.pattern);
  }
  SUBCASE("g=2, n=2, s=3") {
    const Certificate c = evaluate_certificate(2, 2, 3, EvaluationRing::BG);
    CHECK(c.nonzero);
    CHECK(c.result.size() == 2);
    REQUIRE(c.pattern);
    CHECK(c.pattern->matches);
  }
  SUBCASE("n = 1 collapses the two patterns") {
    const Certificate c = evaluate_certificate(2, 1, 3, EvaluationRing::BG);
    REQUIRE(c.pattern);
    CHECK(c.pattern->coincide);
    CHECK(c.pattern->matches);
    CHECK(c.result.size() == 1);
  }
  SUBCASE("factor order") {
    const Certificate c = evaluate_certificate(2, 2, 4, EvaluationRing::BG);
    std::vector<std::string> labels;
    for (const auto& f : c.factors) labels.push_back(f.label);
    CHECK(labels == std::vector<std::string>{"c", "d", "y1,2", "y1,3", "bar(x1)", "tilde(y1)", "bar(x2)",
                                             "tilde(y2)"});
  }
}

TEST_CASE("factor count identity") {
  for (int g = 1; g <= 3; ++g) {
    for (int n = 1; n <= 3; ++n) {
      for (int s = 2; s <= 4; ++s) {
        const int formula = (s - 1) * n + n + std::max(s - 2, 0) + (g >= 2 ? 2 : 0);
        CHECK(expected_factor_count(g, n, s) == formula);
        CHECK(formula == s * (n + 1) - (g == 1 ? 2 : 0));
        CHECK(evaluate_certificate(g, n, s, EvaluationRing::BG).factor_count == formula);
      }
    }
  }
}

TEST_CASE("term guard") {
  CertificateOptions tight;
  tight.max_terms = 1;
  CHECK_THROWS_AS(evaluate_certificate(2, 2, 2, EvaluationRing::BG, tight), SizeGuardError);
  tight.allow_large = true;
  CHECK(evaluate_certificate(2, 2, 2, EvaluationRing::BG, tight).nonzero);
  CHECK_THROWS_AS(evaluate_certificate(2, 2, 1, EvaluationRing::BG), std::invalid_argument);
}

TEST_CASE("ring agreement") {
  const RingAgreement r = check_ring_agreement(1, 2, 2);
  CHECK(r.agrees);
  CHECK(r.e_ring.factor_count == r.b_ring.factor_count);
}

TEST_CASE("tc values") {
  CHECK(tc_value(0, 3, 2).tc == 3);
  CHECK_FALSE(tc_value(0, 3, 2).certified);
  CHECK(tc_value(0, 2, 4).tc == 4);
  CHECK(tc_value(0, 1, 3).tc == 3);
  const TcRecord r = tc_value(1, 2, 3);
  CHECK(r.tc == 7);
  CHECK(r.certified);
  CHECK(r.lower == r.upper);
  CHECK(tc_value(2, 1, 2).tc == 4);
  CHECK(tc_upper_bound(3, 2, 3) == 9);
  CHECK_THROWS_AS(tc_value(1, 1, 1), std::invalid_argument);
  CHECK_THROWS_AS(tc_upper_bound(-1, 1, 2), std::invalid_argument);
}

TEST_CASE("lemma suites") {
  const LemmaReport rep = verify_lemma_identities(2, 3);
  CHECK(rep.passed());
  CHECK(rep.checks.size() >= 20);
  for (const auto& c : rep.checks) CHECK_MESSAGE(c.cases > 0, c.name);
  CHECK_THROWS_AS(verify_lemma_identities(2, 2), std::invalid_argument);
  CHECK_THROWS_AS(verify_lemma_identities(1, 3), std::invalid_argument);
}

namespace {

// (t_1 + t_l)^3 over F_2[t_1..t_s]/(t_i^4), multiplied for l = 2..s, as a set
// of exponent vectors with odd coefficient. Commutative: signs vanish mod 2.
std::set<std::vector<int>> rp3_oracle(int s) {
  std::map<std::vector<int>, int> poly{{std::vector<int>(s, 0), 1}};
  for (int l = 1; l < s; ++l) {
    for (int rep = 0; rep < 3; ++rep) {
      std::map<std::vector<int>, int> next;
      for (const auto& [e, c] : poly) {
        for (int slot : {0, l}) {
          auto f = e;
          if (++f[slot] > 3) continue;
          next[f] = (next[f] + c) % 2;
        }
      }
      poly.clear();
      for (const auto& [e, c] : next) {
        if (c) poly[e] = c;
      }
    }
  }
  std::set<std::vector<int>> out;
  for (const auto& [e, c] : poly) out.insert(e);
  return out;
}

}  // namespace

TEST_CASE("RP3 mod 2") {
  for (int s = 2; s <= 5; ++s) {
    const Rp3Report r = rp3_report(s);
    CHECK(r.bound == 3 * (s - 1));
    CHECK(rp3_zcl_check(s) == 3 * (s - 1));
    std::set<std::vector<int>> got;
    for (const auto& t : r.product.terms()) {
      std::vector<int> e;
      for (MonomialIndex m : t.word) e.push_back(static_cast<int>(m));
      got.insert(e);
    }
    CHECK(got == rp3_oracle(s));
  }
  // s = 2: (t (x) 1 + 1 (x) t)^3 keeps all four binomial terms mod 2.
  const Rp3Report r2 = rp3_report(2);
  CHECK(to_text(r2.product) == "+1 1 (x) t1^3 +1 t1 (x) t1^2 +1 t1^2 (x) t1 +1 t1^3 (x) 1");
  for (int k = 0; k <= 3; ++k) CHECK(oracle::binomial(3, k) % 2 == 1);
  CHECK_THROWS_AS(rp3_report(1), SizeGuardError);
  CHECK_THROWS_AS(rp3_report(6), SizeGuardError);
}

TEST_CASE("zcl search") {
  auto rp3 = ProductAlgebra::create(LetterAlgebra::truncated_polynomial(Field::GF2, 1, 3), 1);
  const QuotientAlgebra q = trivial_quotient(rp3);
  for (auto strategy : {SearchStrategy::Greedy, SearchStrategy::ExhaustiveTiny}) {
    const ZclResult r = zcl_search(q, 2, strategy);
    CHECK(r.bound == 3);
    CHECK(r.witness.size() == 3);
    CHECK_FALSE(r.product.is_zero());
    for (const auto& z : r.witness) CHECK(q.mu(z).is_zero());
  }
  SurfacePower torus(1, 1);
  const QuotientAlgebra h = trivial_quotient(torus.algebra());
  CHECK(zcl_search(h, 2, SearchStrategy::ExhaustiveTiny).bound == 2);
  CHECK(zcl_search(h, 2, SearchStrategy::Greedy).bound >= 2);

  // An algebra with nothing in positive degree has bound 0 and the unit witness.
  auto point = ProductAlgebra::create(LetterAlgebra::truncated_polynomial(Field::Rationals, 2, 0), 1);
  const ZclResult empty = zcl_search(trivial_quotient(point), 2, SearchStrategy::ExhaustiveTiny);
  CHECK(empty.bound == 0);
  CHECK(empty.product == TensorElement::unit(point, 2));

  SurfacePower big(2, 2);
  CHECK_THROWS_AS(zcl_search(b_quotient(big), 2, SearchStrategy::ExhaustiveTiny), SizeGuardError);
}
