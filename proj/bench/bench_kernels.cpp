#include <benchmark/benchmark.h>
#include <omp.h>

#include "ecdloco/simlab.hpp"

using namespace ecdloco;

namespace {

void BM_FindR_Serial(benchmark::State& st) {
  CodeParams p(static_cast<int>(st.range(0)), 2);
  const auto errs = superset_l2(p);
  for (auto _ : st) benchmark::DoNotOptimize(serial::find_R(errs, p, SearchMode::Relaxed));
}

void BM_FindR_OpenMP(benchmark::State& st) {
  CodeParams p(static_cast<int>(st.range(0)), 2);
  const auto errs = superset_l2(p);
  for (auto _ : st) benchmark::DoNotOptimize(find_R(errs, p, SearchMode::Relaxed));
}

void BM_BruteForce(benchmark::State& st) {
  CodeParams p(static_cast<int>(st.range(0)), 2);
  omp_set_num_threads(st.range(1) > 0 ? static_cast<int>(st.range(1)) : omp_get_num_procs());
  for (auto _ : st) benchmark::DoNotOptimize(bruteforce_diffs(p).positive_count());
  omp_set_num_threads(omp_get_num_procs());
}

void BM_Window(benchmark::State& st) {
  CodeParams p(static_cast<int>(st.range(0)), 3);
  for (auto _ : st) benchmark::DoNotOptimize(window_diffs(p).positive_count());
}

void BM_DoubleExperiment(benchmark::State& st) {
  CodeParams p(23, 2);
  static const auto table = make_table(default_error_set(p), p, SearchMode::Relaxed);
  omp_set_num_threads(st.range(0) > 0 ? static_cast<int>(st.range(0)) : omp_get_num_procs());
  for (auto _ : st) benchmark::DoNotOptimize(run_double_experiment(p, table, 200, 1).success_post);
  omp_set_num_threads(omp_get_num_procs());
}

void BM_DecodeSingle(benchmark::State& st) {
  CodeParams p(37, 2);
  static const auto table = make_table(default_error_set(p), p, SearchMode::Relaxed);
  Decoder dec(p, table);
  auto rng = trial_rng(1, 0);
  auto [idx, d] = ec_encode(random_message(table.msg_bits, rng), p, table);
  const Bridge b = make_bridge(d, false, Symbol::A, 2);
  const Word w = apply_substitutions(d, 1, rng);
  for (auto _ : st) benchmark::DoNotOptimize(dec.decode(w, b).index);
}

}  // namespace

BENCHMARK(BM_FindR_Serial)->Arg(17)->Arg(33)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_FindR_OpenMP)->Arg(17)->Arg(33)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_BruteForce)->Args({10, 1})->Args({10, 0})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Window)->Arg(31)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_DoubleExperiment)->Arg(1)->Arg(0)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_DecodeSingle)->Unit(benchmark::kMicrosecond);

BENCHMARK_MAIN();
