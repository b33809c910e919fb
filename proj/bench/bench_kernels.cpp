// Serial reference kernels vs OpenMP kernels on representative inputs.
// Usage: bench_kernels [repetitions] [threads]

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <random>

#include "tcconf/kernels.hpp"
#include "tcconf/parallel.hpp"
#include "tcconf/quotient.hpp"
#include "tcconf/zero_divisors.hpp"

using namespace tcconf;

namespace {

double best_ms(int reps, const std::function<void()>& fn) {
  double best = 1e300;
  for (int r = 0; r < reps; ++r) {
    const auto t0 = std::chrono::steady_clock::now();
    fn();
    const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    if (ms < best) best = ms;
  }
  return best;
}

void row(const char* name, double serial, double omp, bool same) {
  std::printf("%-34s %10.2f %10.2f %8.2fx  %s\n", name, serial, omp, serial / omp, same ? "identical" : "MISMATCH");
}

TensorTerms random_terms(const ProductAlgebra& alg, int arity, std::size_t count, std::mt19937_64& gen) {
  std::uniform_int_distribution<MonomialIndex> mono(0, static_cast<MonomialIndex>(alg.dimension() - 1));
  std::uniform_int_distribution<int> coeff(-5, 5);
  std::vector<TensorTerm> terms;
  for (std::size_t k = 0; k < count; ++k) {
    TensorWord w(arity);
    for (auto& m : w) m = mono(gen);
    terms.push_back({w, Scalar(coeff(gen))});
  }
  return canonicalize_terms(std::move(terms));
}

bool same_terms(const TensorTerms& a, const TensorTerms& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t k = 0; k < a.size(); ++k) {
    if (a[k].word != b[k].word || !(a[k].coeff == b[k].coeff)) return false;
  }
  return true;
}

}  // namespace

int main(int argc, char** argv) {
  const int reps = argc > 1 ? std::atoi(argv[1]) : 3;
  if (argc > 2) omp_set_num_threads(std::atoi(argv[2]));
  std::printf("OpenMP %s, %d threads, best of %d\n", kHaveOpenMP ? "on" : "off", omp_get_max_threads(), reps);
  std::printf("%-34s %10s %10s %9s\n", "kernel", "serial ms", "omp ms", "speedup");

  std::mt19937_64 gen(1);
  SurfacePower m(2, 4);
  const auto& alg = *m.algebra();

  {
    const auto lhs = random_terms(alg, 3, 4000, gen);
    const auto rhs = random_terms(alg, 3, 60, gen);
    TensorTerms s, o;
    const double ts = best_ms(reps, [&] { s = kernels::tensor_product_serial(alg, lhs, rhs); });
    const double to = best_ms(reps, [&] { o = kernels::tensor_product_omp(alg, lhs, rhs); });
    row("tensor product 4000 x 60, s=3", ts, to, same_terms(s, o));
  }

  std::vector<SparseVector> gens;
  for (const auto& r : m.bunch16_relations().generators) gens.push_back(r.terms());
  for (const auto& r : m.j_g_relations().generators) gens.push_back(r.terms());
  {
    std::vector<kernels::DegreeVector> s, o;
    const double ts = best_ms(reps, [&] { s = kernels::ideal_products_serial(alg, gens); });
    const double to = best_ms(reps, [&] { o = kernels::ideal_products_omp(alg, gens); });
    bool same = s.size() == o.size();
    for (std::size_t k = 0; same && k < s.size(); ++k) same = s[k].vector == o[k].vector;
    row("ideal products, B_2 with n=4", ts, to, same);
  }

  const QuotientAlgebra b = b_quotient(m, Execution::Serial);
  {
    std::vector<SparseVector> s, o;
    const double ts = best_ms(reps, [&] { s = kernels::normal_form_table_serial(b.ideal()); });
    const double to = best_ms(reps, [&] { o = kernels::normal_form_table_omp(b.ideal()); });
    row("normal-form table, B_2 with n=4", ts, to, s == o);

    const auto terms = random_terms(alg, 4, 20000, gen);
    TensorTerms ss, so;
    const double ns = best_ms(reps, [&] { ss = kernels::slotwise_normal_form_serial(alg.field(), s, terms); });
    const double no = best_ms(reps, [&] { so = kernels::slotwise_normal_form_omp(alg.field(), s, terms); });
    row("slotwise normal form, 20000 terms", ns, no, same_terms(ss, so));
  }

  {
    TensorElement s, o;
    const double ts = best_ms(reps, [&] { s = bar_product_xs(m, 4, Execution::Serial); });
    const double to = best_ms(reps, [&] { o = bar_product_xs(m, 4, Execution::Parallel); });
    row("product of bar(x_i), n=4, s=4", ts, to, s == o);
  }

  {
    QuotientAlgebra qs = trivial_quotient(m.algebra(), Execution::Serial);
    QuotientAlgebra qo = qs;
    const double ts = best_ms(reps, [&] { qs = b_quotient(m, Execution::Serial); });
    const double to = best_ms(reps, [&] { qo = b_quotient(m, Execution::Parallel); });
    row("build B_2 with n=4", ts, to, qs.poincare_polynomial() == qo.poincare_polynomial());
  }
  return 0;
}
