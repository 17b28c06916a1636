#include <benchmark/benchmark.h>

#include "dynr/verify.hpp"

namespace {

using namespace dynr;

Vec fixed_lambda(int dim) {
  Vec lam(dim);
  for (int i = 0; i < dim; ++i)
    lam(i) = cplx(0.41 + 0.073 * i, -0.21 + 0.057 * i);
  return lam;
}

void BM_cyb_sl3(benchmark::State& state) {
  RootedAlgebra g = build_sl(3);
  Tensor2 om = casimir(g.algebra);
  for (auto _ : state) benchmark::DoNotOptimize(cyb(om).max_norm());
}
BENCHMARK(BM_cyb_sl3);

void BM_rho_cartan_sl3(benchmark::State& state) {
  RootedAlgebra g = build_sl(3);
  Subalgebra full = full_subalgebra(g);
  AbelianBase base = cartan_base(full);
  Vec lam = base.inclusion * fixed_lambda(2);
  for (auto _ : state)
    benchmark::DoNotOptimize(rho_cartan(g, 0.7, lam).max_norm());
}
BENCHMARK(BM_rho_cartan_sl3);

void BM_rmat_levi_eval(benchmark::State& state) {
  RootedAlgebra g = build_sl(3);
  QuasiTriangular qt = standard_qt(levi_subalgebra(g, {0}));
  Vec lam = fixed_lambda(qt.sub.dim());
  for (auto _ : state)
    benchmark::DoNotOptimize(rmat_levi(qt, 0.7, lam).r.max_norm());
}
BENCHMARK(BM_rmat_levi_eval);

void BM_levi_pl_residual(benchmark::State& state) {
  RootedAlgebra g = build_sl(3);
  QuasiTriangular qt = standard_qt(levi_subalgebra(g, {0}));
  Tensor3 z = z_element(casimir(g.algebra), 0.7);
  Vec lam = fixed_lambda(qt.sub.dim());
  TensorFn r_fn = [&](const Vec& l) { return rmat_levi(qt, 0.7, l).r; };
  BasePoint p = make_base_point(*qt.sub.algebra, lam, Chart::sts);
  for (auto _ : state)
    benchmark::DoNotOptimize(
        cdybe_residual_pl(r_fn, qt, p, z, 1e-6).residual_rel);
}
BENCHMARK(BM_levi_pl_residual);

}  // namespace

BENCHMARK_MAIN();
