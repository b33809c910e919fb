#include <doctest.h>

#include "oracles.hpp"
#include "tcconf/kernels.hpp"
#include "tcconf/parallel.hpp"
#include "tcconf/quotient.hpp"
#include "tcconf/zero_divisors.hpp"

using namespace tcconf;

namespace {

TensorTerms random_terms(const ProductAlgebra& alg, int arity, std::size_t count, std::mt19937_64& gen) {
  std::uniform_int_distribution<MonomialIndex> mono(0, static_cast<MonomialIndex>(alg.dimension() - 1));
  std::uniform_int_distribution<int> coeff(-4, 4);
  std::vector<TensorTerm> terms;
  for (std::size_t k = 0; k < count; ++k) {
    TensorWord w(arity);
    for (auto& m : w) m = mono(gen);
    terms.push_back({w, Scalar(coeff(gen), alg.field())});
  }
  return canonicalize_terms(std::move(terms));
}

struct Threads {
  explicit Threads(int n) : saved(omp_get_max_threads()) { omp_set_num_threads(n); }
  ~Threads() { omp_set_num_threads(saved); }
  int saved;
};

}  // namespace

TEST_CASE("tensor product: OpenMP matches the serial reference") {
  Threads threads(4);
  auto gen = oracle::rng(11);
  SurfacePower m(2, 2);
  const auto& alg = *m.algebra();
  for (int arity : {2, 3, 4}) {
    for (int trial = 0; trial < 8; ++trial) {
      const auto lhs = random_terms(alg, arity, 40 + 30 * trial, gen);
      const auto rhs = random_terms(alg, arity, 25, gen);
      const auto serial = kernels::tensor_product_serial(alg, lhs, rhs);
      const auto omp = kernels::tensor_product_omp(alg, lhs, rhs);
      REQUIRE(serial.size() == omp.size());
      for (std::size_t k = 0; k < serial.size(); ++k) {
        CHECK(serial[k].word == omp[k].word);
        CHECK(serial[k].coeff == omp[k].coeff);
      }
    }
  }
}

TEST_CASE("tensor product over F2 matches the serial reference") {
  Threads threads(4);
  auto gen = oracle::rng(12);
  auto alg = ProductAlgebra::create(LetterAlgebra::truncated_polynomial(Field::GF2, 1, 3), 2);
  const auto lhs = random_terms(*alg, 3, 60, gen);
  const auto rhs = random_terms(*alg, 3, 60, gen);
  const auto serial = kernels::tensor_product_serial(*alg, lhs, rhs);
  const auto omp = kernels::tensor_product_omp(*alg, lhs, rhs);
  REQUIRE(serial.size() == omp.size());
  for (std::size_t k = 0; k < serial.size(); ++k) CHECK(serial[k].word == omp[k].word);
}

TEST_CASE("ideal products, normal-form tables and slotwise normal forms agree") {
  Threads threads(4);
  auto gen = oracle::rng(13);
  SurfacePower m(2, 3);
  const auto& alg = *m.algebra();
  std::vector<SparseVector> gens;
  for (const auto& r : m.bunch16_relations().generators) gens.push_back(r.terms());
  for (const auto& r : m.j_g_relations().generators) gens.push_back(r.terms());

  const auto ps = kernels::ideal_products_serial(alg, gens);
  const auto po = kernels::ideal_products_omp(alg, gens);
  REQUIRE(ps.size() == po.size());
  for (std::size_t k = 0; k < ps.size(); ++k) {
    CHECK(ps[k].degree == po[k].degree);
    CHECK(ps[k].vector == po[k].vector);
  }

  const QuotientAlgebra serial_q = b_quotient(m, Execution::Serial);
  const QuotientAlgebra omp_q = b_quotient(m, Execution::Parallel);
  const auto ts = kernels::normal_form_table_serial(serial_q.ideal());
  const auto to = kernels::normal_form_table_omp(serial_q.ideal());
  REQUIRE(ts.size() == to.size());
  for (std::size_t k = 0; k < ts.size(); ++k) CHECK(ts[k] == to[k]);
  CHECK(serial_q.poincare_polynomial() == omp_q.poincare_polynomial());

  for (int trial = 0; trial < 6; ++trial) {
    const auto terms = random_terms(alg, 3, 80, gen);
    const auto ss = kernels::slotwise_normal_form_serial(alg.field(), ts, terms);
    const auto so = kernels::slotwise_normal_form_omp(alg.field(), ts, terms);
    REQUIRE(ss.size() == so.size());
    for (std::size_t k = 0; k < ss.size(); ++k) {
      CHECK(ss[k].word == so[k].word);
      CHECK(ss[k].coeff == so[k].coeff);
    }
  }
}

TEST_CASE("bar products agree across execution modes") {
  Threads threads(4);
  SurfacePower m(2, 3);
  for (int s = 2; s <= 4; ++s) {
    CHECK(bar_product_xs(m, s, Execution::Serial) == bar_product_xs(m, s, Execution::Parallel));
    CHECK(tilde_product_ys(m, s, Execution::Serial) == tilde_product_ys(m, s, Execution::Parallel));
  }
}

TEST_CASE("kernels handle empty input") {
  SurfacePower m(1, 1);
  const auto& alg = *m.algebra();
  CHECK(kernels::tensor_product_serial(alg, {}, {}).empty());
  CHECK(kernels::tensor_product_omp(alg, {}, {}).empty());
  CHECK(kernels::ideal_products_omp(alg, {}).empty());
}
