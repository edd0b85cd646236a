#include <benchmark/benchmark.h>

#include "qsymm/aw_ops.hpp"
#include "qsymm/mk_poly.hpp"
#include "qsymm/quantum_rep.hpp"
#include "qsymm/radial.hpp"

using namespace qsymm;

namespace {

LaurentPoly dense_poly(int deg) {
  auto t = make_vars({"x", "q", "s"});
  LaurentPoly x = LaurentPoly::variable(t, "x"), q = LaurentPoly::variable(t, "q"), s = LaurentPoly::variable(t, "s");
  LaurentPoly base = x + q + s + LaurentPoly(t, 3), p(t, 1);
  for (int i = 0; i < deg; ++i) p = kernels::multiply_serial(p, base);
  return p;
}

void BM_PolyMultiply(benchmark::State& st, Exec exec) {
  LaurentPoly a = dense_poly(static_cast<int>(st.range(0))), b = dense_poly(static_cast<int>(st.range(0)) + 1);
  for (auto _ : st)
    benchmark::DoNotOptimize(exec == Exec::serial ? kernels::multiply_serial(a, b) : kernels::multiply_parallel(a, b));
  st.counters["terms"] = static_cast<double>(a.size() * b.size());
}

void BM_MatMul(benchmark::State& st, Exec exec) {
  auto b = build_r_matrix(static_cast<std::size_t>(st.range(0)));
  for (auto _ : st)
    benchmark::DoNotOptimize(exec == Exec::serial ? kernels::matmul_serial(b.R, b.R) : kernels::matmul_parallel(b.R, b.R));
}

void BM_AWEigenSweep(benchmark::State& st, Exec exec) {
  auto t = make_vars({"z", "q", "a", "b", "c", "d"});
  auto v = [&](const char* n) { return RatFunc(LaurentPoly::variable(t, n)); };
  AWParams p = make_aw_params(v("a"), v("b"), v("c"), v("d"), LaurentPoly::variable(t, "q"));
  for (auto _ : st) benchmark::DoNotOptimize(verify_aw_eigen(static_cast<int>(st.range(0)), p, exec));
}

void BM_RadialSweep(benchmark::State& st, Exec exec) {
  auto setup = make_spherical_setup(static_cast<int>(st.range(0)));
  for (auto _ : st) benchmark::DoNotOptimize(verify_spherical_identification(setup, 4, exec));
}

void BM_MKSweep(benchmark::State& st, Exec exec) {
  auto rs = parse_root_system("A2");
  set_multiplicity_by_length(rs, {{2, ExactScalar(2)}});
  auto table = mk_table(rs);
  auto spec = macdonald_spec(rs, table, LaurentPoly::variable(table, "q"));
  for (auto _ : st) benchmark::DoNotOptimize(verify_mk_diagonalization(spec, {3, 0, 0}, exec));
}

}  // namespace

BENCHMARK_CAPTURE(BM_PolyMultiply, serial, Exec::serial)->Arg(8)->Arg(14)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK_CAPTURE(BM_PolyMultiply, parallel, Exec::parallel)->Arg(8)->Arg(14)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK_CAPTURE(BM_MatMul, serial, Exec::serial)->Arg(3)->Arg(5)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK_CAPTURE(BM_MatMul, parallel, Exec::parallel)->Arg(3)->Arg(5)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK_CAPTURE(BM_AWEigenSweep, serial, Exec::serial)->Arg(4)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK_CAPTURE(BM_AWEigenSweep, parallel, Exec::parallel)->Arg(4)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK_CAPTURE(BM_RadialSweep, serial, Exec::serial)->Arg(3)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK_CAPTURE(BM_RadialSweep, parallel, Exec::parallel)->Arg(3)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK_CAPTURE(BM_MKSweep, serial, Exec::serial)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK_CAPTURE(BM_MKSweep, parallel, Exec::parallel)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
