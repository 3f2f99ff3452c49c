// Serial reference against the OpenMP path for each parallel kernel.

#include <benchmark/benchmark.h>

#include "gkm/arrangements.hpp"
#include "gkm/cohomology.hpp"
#include "gkm/shelling.hpp"

using namespace gkm;

namespace {

Exec exec_of(const benchmark::State& st) { return st.range(0) ? Exec::parallel : Exec::serial; }

const ValidGraph& klm333() {
  static ValidGraph vg = prepare(gen_klm({3, 3, 3}));
  return vg;
}

void BM_Assumptions(benchmark::State& st) {
  const auto& vg = klm333();
  auto hs = all_hyperplanes(vg);
  for (auto _ : st) benchmark::DoNotOptimize(check_assumptions(vg, hs, 1000000, exec_of(st)));
}

void BM_BuildArrangement(benchmark::State& st) {
  const auto& vg = klm333();
  for (auto _ : st) benchmark::DoNotOptimize(build_arrangement(vg, exec_of(st)));
}

void BM_ImageRows(benchmark::State& st) {
  const auto& vg = klm333();
  Arrangement arr = build_arrangement(vg);
  auto ring = presentation_ring(vg, arr, false);
  auto piece = cohomology_basis(vg, 3, false);
  for (auto _ : st) benchmark::DoNotOptimize(image_rows(vg, arr, ring, piece, exec_of(st)));
}

void BM_VerifyIso(benchmark::State& st) {
  const auto& vg = klm333();
  Arrangement arr = build_arrangement(vg);
  for (auto _ : st) benchmark::DoNotOptimize(verify_iso(vg, arr, 3, true, exec_of(st)));
}

void BM_StructureConstants(benchmark::State& st) {
  const auto& vg = klm333();
  Arrangement arr = build_arrangement(vg);
  auto c = build_complex(vg, arr.hs);
  auto s = shell(vg, arr, c);
  for (auto _ : st) benchmark::DoNotOptimize(structure_constants(vg, arr, c, s, false, exec_of(st)));
}

}  // namespace

// Argument 0 is the serial reference, 1 the parallel path.
BENCHMARK(BM_Assumptions)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_BuildArrangement)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ImageRows)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_VerifyIso)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_StructureConstants)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
