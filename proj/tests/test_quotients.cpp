#include <doctest.h>

#include "oracles.hpp"
#include "tcconf/lemmas.hpp"
#include "tcconf/quotient.hpp"

using namespace tcconf;

namespace {

Element random_element(const AlgebraPtr& alg, int degree, std::mt19937_64& gen) {
  const auto basis = alg->basis(degree);
  Element e(alg);
  if (basis.empty()) return e;
  std::uniform_int_distribution<std::size_t> pick(0, basis.size() - 1);
  std::uniform_int_distribution<int> coeff(-2, 2);
  for (int k = 0; k < 4; ++k) e += Scalar(coeff(gen)) * Element::monomial(alg, basis[pick(gen)]);
  return e;
}

Element omega_x(const SurfacePower& m) {
  Element e = m.omega(1);
  for (int i = 2; i <= m.points(); ++i) e = e * m.x(i);
  return e;
}

Element omega_y(const SurfacePower& m) {
  Element e = m.omega(1);
  for (int i = 2; i <= m.points(); ++i) e = e * m.y(i);
  return e;
}

}  // namespace

TEST_CASE("x and y classes") {
  SurfacePower m(2, 3);
  CHECK(m.x(1) == m.a(1));
  CHECK(m.x(2) == m.a(2) - m.a(1));
  CHECK(m.y(3) == m.b(3) - m.b(1));
  CHECK(m.x(2, 2) == m.a(2, 2));
  CHECK(m.y(1, 2) == m.b(1, 2));
}

TEST_CASE("relation families") {
  for (auto [g, n] : {std::pair{1, 3}, {2, 2}, {2, 3}, {3, 3}}) {
    SurfacePower m(g, n);
    CHECK(m.totaro_relations().generators.size() == static_cast<std::size_t>(n * (n - 1) / 2));
    CHECK(m.j_g_relations().generators.size() == static_cast<std::size_t>((n - 1) * (n - 1)));
    CHECK(m.bunch16_relations().generators.empty() == (g == 1));
    for (const auto& r : m.totaro_relations().generators) CHECK(r.degree() == 2);
    for (const auto& r : m.bunch16_relations().generators) CHECK(r.degree() == 2);
  }
}

TEST_CASE("beta2 counts match the closed form") {
  for (int g = 1; g <= 3; ++g) {
    for (int n = 1; n <= 3; ++n) {
      SurfacePower m(g, n);
      CHECK(static_cast<long long>(m.basis_beta2().size()) == beta2_count(g, n));
      CHECK(m.basis_beta2_prime().size() == m.basis_beta2().size());
      CHECK(m.basis_beta1().size() == m.algebra()->dimension());
    }
  }
  CHECK(beta2_count(2, 2) == 9 + 2 * 3 * 3);
}

TEST_CASE("basis theorems for A_g") {
  for (int g : {2, 3}) {
    for (int n : {2, 3}) {
      SurfacePower m(g, n);
      const QuotientAlgebra a = a_quotient(m);
      std::vector<Element> b2, b2p;
      for (const auto& e : m.basis_beta2()) b2.push_back(e.value);
      for (const auto& e : m.basis_beta2_prime()) b2p.push_back(e.value);
      CHECK(a.dimension() == b2.size());
      CHECK(rank_in(a, b2) == b2.size());
      CHECK(rank_in(a, b2p) == b2p.size());
    }
  }
}

TEST_CASE("A_1 is the whole algebra") {
  SurfacePower m(1, 3);
  CHECK(a_quotient(m).dimension() == 64);
}

TEST_CASE("omega_1 x_2..x_n and omega_1 y_2..y_n stay independent in B_g") {
  for (int g : {2, 3}) {
    for (int n : {2, 3, 4}) {
      SurfacePower m(g, n);
      const QuotientAlgebra b = b_quotient(m);
      const std::vector<Element> pair{omega_x(m), omega_y(m)};
      CHECK(rank_in(b, pair) == 2);
    }
  }
}

TEST_CASE("B_g Poincare polynomials agree with an independent prototype") {
  CHECK(b_quotient(SurfacePower(2, 2)).poincare_polynomial() == std::vector<long long>{1, 8, 13, 2});
  CHECK(b_quotient(SurfacePower(2, 3)).poincare_polynomial() == std::vector<long long>{1, 12, 35, 20, 2});
  CHECK(b_quotient(SurfacePower(3, 3)).poincare_polynomial() == std::vector<long long>{1, 18, 59, 32, 2});
  CHECK(b_quotient(SurfacePower(1, 3)).poincare_polynomial() == std::vector<long long>{1, 6, 11, 8, 2});
}

TEST_CASE("normal forms: idempotence and the ring-map law") {
  auto gen = oracle::rng(42);
  for (auto [g, n] : {std::pair{1, 3}, {2, 3}}) {
    SurfacePower m(g, n);
    const auto& alg = m.algebra();
    for (const QuotientAlgebra& q : {e_infinity(m), a_quotient(m), b_quotient(m)}) {
      for (int trial = 0; trial < 25; ++trial) {
        const Element x = random_element(alg, trial % 3, gen);
        const Element y = random_element(alg, 1 + trial % 2, gen);
        const Element nx = q.normal_form(x);
        CHECK(q.normal_form(nx) == nx);
        CHECK(q.normal_form(x * y) == q.normal_form(nx * q.normal_form(y)));
        CHECK(q.multiply(x, y) == q.normal_form(x * y));
        CHECK(q.normal_form(x + y) == nx + q.normal_form(y));
        for (const auto& e : nx.terms()) CHECK_FALSE(q.ideal().is_pivot(e.index));
      }
    }
  }
}

TEST_CASE("defining relations vanish and the ideal is closed") {
  SurfacePower m(2, 3);
  const QuotientAlgebra e = e_infinity(m);
  const QuotientAlgebra b = b_quotient(m);
  for (const auto& r : m.totaro_relations().generators) CHECK(e.is_zero(r));
  for (const auto& r : m.bunch16_relations().generators) {
    CHECK(b.is_zero(r));
    CHECK(b.is_zero(m.a(2) * r));
    CHECK(b.is_zero(r * m.omega(3)));
  }
  for (const auto& r : m.j_g_relations().generators) CHECK(b.is_zero(m.y(1) * r));
}

TEST_CASE("E_inf maps onto B_g") {
  // Every Totaro relation already vanishes in B_g, so normal forms compose.
  for (auto [g, n] : {std::pair{1, 2}, {2, 2}, {2, 3}}) {
    SurfacePower m(g, n);
    const QuotientAlgebra b = b_quotient(m);
    for (const auto& r : m.totaro_relations().generators) CHECK(b.is_zero(r));
  }
}

TEST_CASE("tensor normal forms") {
  auto gen = oracle::rng(7);
  SurfacePower m(2, 2);
  const QuotientAlgebra b = b_quotient(m);
  const auto& alg = m.algebra();
  for (int trial = 0; trial < 10; ++trial) {
    std::vector<Element> sx{random_element(alg, 1, gen), random_element(alg, 2, gen)};
    std::vector<Element> sy{random_element(alg, 1, gen), random_element(alg, 0, gen)};
    const auto tx = TensorElement::from_slots(sx);
    const auto ty = TensorElement::from_slots(sy);
    const auto nf = b.tensor_normal_form(tx);
    CHECK(b.tensor_normal_form(nf) == nf);
    CHECK(b.tensor_multiply(tx, ty) == b.tensor_normal_form(tensor_multiply(tx, ty)));
    CHECK(b.mu(tx) == b.normal_form(mu(tx)));
  }
}

TEST_CASE("B_h sits inside B_(h+1)") {
  for (auto [g, n] : {std::pair{2, 2}, {3, 2}, {3, 3}}) {
    const ChainReport rep = verify_subalgebra_chain(g, n);
    CHECK(rep.passed());
    CHECK_FALSE(rep.checks.empty());
  }
  SurfacePower m1(1, 2), m2(2, 2);
  CHECK(map_to_genus(m1.a(1) * m1.b(2), m1, m2) == m2.a(1) * m2.b(2));
  CHECK_THROWS(map_to_genus(m2.a(1), m2, m1));
}

TEST_CASE("key identity for x_j y_j") {
  for (int g : {1, 2}) {
    const IdentityCheck c = verify_key_identity(g, 3);
    CHECK(c.cases == 2);
    CHECK(c.passed());
  }
  // It is an identity before any quotient, too.
  SurfacePower m(2, 3);
  CHECK(m.x(2) * m.y(2) == m.omega(2) - m.omega(1) + m.y(1) * m.x(2) - m.x(1) * m.y(2));
}

TEST_CASE("ideal_span input validation") {
  SurfacePower m(1, 2);
  std::vector<Element> gens{m.a(1) + m.omega(2)};
  CHECK_THROWS_AS(ideal_span(m.algebra(), gens), std::invalid_argument);
  std::vector<Element> zero{Element(m.algebra())};
  CHECK(ideal_span(m.algebra(), zero).total_rank() == 0);
}
