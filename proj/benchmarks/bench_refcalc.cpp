#include <benchmark/benchmark.h>

#include "refcalc/bialgebra.hpp"
#include "refcalc/hom_search.hpp"
#include "refcalc/linrec.hpp"
#include "refcalc/matrix.hpp"
#include "refcalc/profinite.hpp"
#include "refcalc/rng.hpp"
#include "refcalc/support_calculus.hpp"

using namespace refcalc;

namespace {

// Hilbert-like rational matrix of size n x (n + 2), so the kernel has dimension 2.
Matrix rational_matrix(std::size_t n) {
  const Field q = Field::rationals();
  Matrix m(q, n, n + 2);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n + 2; ++j) m(i, j) = Scalar(mpq_class(1, static_cast<long>(i + j + 1)));
  return m;
}

void BM_KernelBasisRational(benchmark::State& state) {
  const Matrix m = rational_matrix(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(kernel_basis(m));
}
BENCHMARK(BM_KernelBasisRational)->Arg(4)->Arg(8)->Arg(16);

void BM_NormalizeRandomFamily(benchmark::State& state) {
  Rng rng(7);
  std::vector<Family> fams;
  for (int i = 0; i < 64; ++i) {
    const IndexTerm t = sample_index(rng, 2);
    fams.push_back(sample_family(rng, t, 4));
  }
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(normalize(fams[i++ % fams.size()]));
}
BENCHMARK(BM_NormalizeRandomFamily);

void BM_PolarMembership(benchmark::State& state) {
  Rng rng(11);
  std::vector<std::pair<DescribedSubset, Family>> work;
  for (int i = 0; i < 64; ++i) {
    const IndexTerm t = sample_index(rng, 2);
    Family f = sample_family(rng, t, 4);
    work.emplace_back(sample_subset(rng, t), std::move(f));
  }
  std::size_t i = 0;
  for (auto _ : state) {
    const auto& [b, f] = work[i++ % work.size()];
    benchmark::DoNotOptimize(member_polar(b, f));
  }
}
BENCHMARK(BM_PolarMembership);

void BM_ModulesEqualReflexive(benchmark::State& state) {
  Rng rng(3);
  const IndexTerm t = sample_index(rng, 2);
  const ModuleObject m = ModuleObject::make(sample_family(rng, t, 4), CoefficientRing::rationals());
  const ModuleObject dd = dual(dual(m));
  for (auto _ : state) benchmark::DoNotOptimize(modules_equal_randomized(dd, m, 1, 200));
}
BENCHMARK(BM_ModulesEqualReflexive);

void BM_DualizeGroupAlgebra(benchmark::State& state) {
  const FdBialgebra b = group_algebra(Field::prime(5), {static_cast<std::uint32_t>(state.range(0))});
  for (auto _ : state) benchmark::DoNotOptimize(dualize(b));
}
BENCHMARK(BM_DualizeGroupAlgebra)->Arg(2)->Arg(4)->Arg(6);

void BM_AlgebraHomSearch(benchmark::State& state) {
  const Field k = Field::prime(static_cast<std::uint32_t>(state.range(0)));
  const FdAlgebra a = group_algebra(k, {2, 2}).algebra;
  const TestAlgebra s = quadratic_extension(k);
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_algebra_homs(a, s));
}
BENCHMARK(BM_AlgebraHomSearch)->Arg(2)->Arg(3)->Arg(5);

void BM_CartierCheck(benchmark::State& state) {
  const Field k = Field::prime(5);
  for (auto _ : state) benchmark::DoNotOptimize(cartier_check({4}, k, base_field_algebra(k)));
}
BENCHMARK(BM_CartierCheck);

void BM_AdicSpecPoints(benchmark::State& state) {
  const Field k = Field::prime(3);
  const AlgebraTower t = adic_tower(k, parse_polynomial("x", k), static_cast<std::size_t>(state.range(0)));
  const TestAlgebra s = dual_numbers(k);
  for (auto _ : state) benchmark::DoNotOptimize(spec_points(t, s));
}
BENCHMARK(BM_AdicSpecPoints)->Arg(2)->Arg(4);

void BM_HurwitzProduct(benchmark::State& state) {
  const auto fib = parse_linrec("linrec(Q, f=x^2-x-1, init=[0,1], structure=additive)");
  const auto geom = parse_linrec("linrec(Q, f=x-3, init=[1], structure=additive)");
  for (auto _ : state) benchmark::DoNotOptimize(linrec_product(fib, geom));
}
BENCHMARK(BM_HurwitzProduct);

}  // namespace

BENCHMARK_MAIN();
