#include <benchmark/benchmark.h>

#include "trilie/catalog.hpp"
#include "trilie/double_construction.hpp"

using namespace trilie;

namespace {

ThreeLieAlgebra simple4() {
  return catalog::get_algebra(catalog::parse_id("dim4.1"));
}

RElement alternating_r(const ThreeLieAlgebra& A) {
  Matrix m(A.dim(), A.dim());
  for (int i = 1; i <= A.dim(); ++i) m.at(i, i) = Scalar(i % 2 == 1 ? 1 : -1);
  return RElement(A, std::move(m));
}

void BM_FundamentalIdentityDim8(benchmark::State& state) {
  ThreeLieAlgebra D = semidirect_product(simple4(), coadjoint_representation(simple4()));
  for (auto _ : state) {
    auto rep = verify_fundamental_identity(D);
    benchmark::DoNotOptimize(rep.passed);
  }
}
BENCHMARK(BM_FundamentalIdentityDim8);

void BM_TripleRBracket(benchmark::State& state) {
  ThreeLieAlgebra A = simple4();
  RElement r = alternating_r(A);
  for (auto _ : state) {
    Tensor t = triple_r_bracket(r);
    benchmark::DoNotOptimize(t.is_zero());
  }
}
BENCHMARK(BM_TripleRBracket);

void BM_ThmCondition(benchmark::State& state) {
  ThreeLieAlgebra A = simple4();
  RElement r = alternating_r(A);
  for (auto _ : state) {
    auto rep = verify_thm_condition(r);
    benchmark::DoNotOptimize(rep.passed);
  }
}
BENCHMARK(BM_ThmCondition);

void BM_BialgebraSpaceSolve(benchmark::State& state) {
  ThreeLieAlgebra A = simple4();
  std::set<BialgebraConstraint> constraints{
      BialgebraConstraint::skew, BialgebraConstraint::b1, BialgebraConstraint::b2};
  for (auto _ : state) {
    auto res = solve_bialgebra_space(A, constraints);
    benchmark::DoNotOptimize(res.rank);
  }
}
BENCHMARK(BM_BialgebraSpaceSolve);

void BM_ManinTriple(benchmark::State& state) {
  auto [A, delta] = catalog::bialgebra_dim4();
  ThreeLieAlgebra dual = dual_structure(delta);
  for (auto _ : state) {
    auto rep = verify_manin_triple(A, dual);
    benchmark::DoNotOptimize(rep.passed);
  }
}
BENCHMARK(BM_ManinTriple);

} // namespace

BENCHMARK_MAIN();
