#include <doctest.h>

#include "oracles.hpp"
#include "tcconf/graded_subspace.hpp"
#include "tcconf/sparse_vector.hpp"

using namespace tcconf;

TEST_CASE("scalar arithmetic over Q") {
  const Scalar a(3, 4);
  const Scalar b(-1, 6);
  CHECK((a + b).to_string() == "7/12");
  CHECK((a * b).to_string() == "-1/8");
  CHECK((a / b).to_string() == "-9/2");
  CHECK(Scalar(6, 8) == a);
  CHECK(Scalar(2, -4).to_string() == "-1/2");
  CHECK(Scalar::parse("+3/4", Field::Rationals) == a);
  CHECK(Scalar::parse("-5", Field::Rationals).to_string() == "-5");
  CHECK_THROWS_AS(a / Scalar::zero(Field::Rationals), std::domain_error);
  CHECK_THROWS_AS(Scalar::parse("x", Field::Rationals), std::invalid_argument);
}

TEST_CASE("scalar arithmetic over F2") {
  const Scalar one = Scalar::one(Field::GF2);
  CHECK((one + one).is_zero());
  CHECK(-one == one);
  CHECK(Scalar(5, Field::GF2) == one);
  CHECK(Scalar::parse("3/5", Field::GF2) == one);
  CHECK_THROWS(Scalar::parse("1/2", Field::GF2));
  CHECK_THROWS_AS(one + Scalar::one(Field::Rationals), std::invalid_argument);
}

TEST_CASE("sparse vector keeps entries sorted and nonzero") {
  const Field q = Field::Rationals;
  auto v = SparseVector::from_unsorted(q, {{5, Scalar(2)}, {1, Scalar(1)}, {5, Scalar(-2)}, {3, Scalar(4)}});
  REQUIRE(v.size() == 2);
  CHECK(v.leading_index() == 1);
  CHECK(v.coefficient(3) == Scalar(4));
  CHECK(v.coefficient(5).is_zero());
  auto w = SparseVector::unit(q, 3);
  v.axpy(Scalar(-4), w);
  CHECK(v == SparseVector::unit(q, 1));
  v -= SparseVector::unit(q, 1);
  CHECK(v.is_zero());
}

namespace {

// Random rows of one homogeneous degree inside an ambient space with
// `dims[d]` basis vectors of degree d.
struct Ambient {
  std::vector<int> degrees;
  std::vector<std::vector<BasisIndex>> by_degree;
};

Ambient make_ambient(const std::vector<int>& dims) {
  Ambient a;
  for (int d = 0; d < static_cast<int>(dims.size()); ++d) {
    a.by_degree.emplace_back();
    for (int k = 0; k < dims[d]; ++k) {
      a.by_degree[d].push_back(static_cast<BasisIndex>(a.degrees.size()));
      a.degrees.push_back(d);
    }
  }
  return a;
}

}  // namespace

TEST_CASE("graded subspace rank matches dense elimination") {
  auto gen = oracle::rng(20240611);
  std::uniform_int_distribution<int> coeff(-3, 3);
  std::uniform_int_distribution<int> sparsity(0, 2);
  const Ambient amb = make_ambient({1, 6, 9, 4});
  for (int trial = 0; trial < 40; ++trial) {
    GradedSubspace space(Field::Rationals, amb.degrees);
    std::vector<oracle::Matrix> dense(amb.by_degree.size());
    const int count = 2 + trial % 9;
    for (int r = 0; r < count; ++r) {
      const int d = 1 + r % 3;
      const auto& cols = amb.by_degree[d];
      std::vector<SparseVector::Entry> entries;
      std::vector<mpq_class> row(cols.size());
      for (std::size_t k = 0; k < cols.size(); ++k) {
        if (sparsity(gen) != 0) continue;
        const int c = coeff(gen);
        row[k] = c;
        entries.push_back({cols[k], Scalar(c)});
      }
      space.insert(SparseVector::from_unsorted(Field::Rationals, entries), d);
      dense[d].push_back(row);
    }
    for (int d = 0; d < static_cast<int>(amb.by_degree.size()); ++d) {
      CHECK(space.rank(d) == oracle::dense_rank(dense[d]));
    }
  }
}

TEST_CASE("graded subspace rank over F2 matches dense elimination") {
  auto gen = oracle::rng(77);
  std::bernoulli_distribution bit(0.4);
  const Ambient amb = make_ambient({0, 10});
  for (int trial = 0; trial < 30; ++trial) {
    GradedSubspace space(Field::GF2, amb.degrees);
    std::vector<std::vector<int>> dense;
    for (int r = 0; r < 1 + trial % 12; ++r) {
      std::vector<SparseVector::Entry> entries;
      std::vector<int> row(10);
      for (int k = 0; k < 10; ++k) {
        if (!bit(gen)) continue;
        row[k] = 1;
        entries.push_back({amb.by_degree[1][k], Scalar::one(Field::GF2)});
      }
      space.insert(SparseVector::from_unsorted(Field::GF2, entries), 1);
      dense.push_back(row);
    }
    CHECK(space.rank(1) == oracle::dense_rank_gf2(dense));
  }
}

TEST_CASE("reduce gives a canonical normal form") {
  auto gen = oracle::rng(5);
  std::uniform_int_distribution<int> coeff(-2, 2);
  const Ambient amb = make_ambient({0, 8});
  GradedSubspace space(Field::Rationals, amb.degrees);
  std::vector<SparseVector> rows;
  for (int r = 0; r < 4; ++r) {
    std::vector<SparseVector::Entry> entries;
    for (BasisIndex k : amb.by_degree[1]) entries.push_back({k, Scalar(coeff(gen))});
    rows.push_back(SparseVector::from_unsorted(Field::Rationals, entries));
    space.insert(rows.back(), 1);
  }
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<SparseVector::Entry> entries;
    for (BasisIndex k : amb.by_degree[1]) entries.push_back({k, Scalar(coeff(gen))});
    const auto v = SparseVector::from_unsorted(Field::Rationals, entries);
    const auto nf = space.reduce(v, 1);
    // Idempotent, supported off the pivots, and invariant under adding span elements.
    CHECK(space.reduce(nf, 1) == nf);
    for (const auto& e : nf) CHECK_FALSE(space.is_pivot(e.index));
    SparseVector shifted = v;
    shifted.axpy(Scalar(coeff(gen)), rows[trial % rows.size()]);
    CHECK(space.reduce(shifted, 1) == nf);
    CHECK(space.contains(v - nf, 1));
  }
}

TEST_CASE("graded subspace input validation") {
  GradedSubspace space(Field::Rationals, {0, 1, 1, 2});
  CHECK_THROWS_AS(space.reduce(SparseVector::unit(Field::Rationals, 1), 5), std::out_of_range);
  CHECK_THROWS_AS(space.insert(SparseVector::unit(Field::Rationals, 3), 1), std::invalid_argument);
  CHECK(space.insert(SparseVector::unit(Field::Rationals, 1), 1));
  CHECK_FALSE(space.insert(Scalar(3) * SparseVector::unit(Field::Rationals, 1), 1));
  CHECK(space.non_pivot_basis(1) == std::vector<BasisIndex>{2});
  space.freeze();
  CHECK_THROWS_AS(space.insert(SparseVector::unit(Field::Rationals, 2), 1), std::logic_error);
}
