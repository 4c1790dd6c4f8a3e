#include <benchmark/benchmark.h>

#include "subreg/automata.hpp"
#include "subreg/classify.hpp"
#include "subreg/regex.hpp"
#include "subreg/slt.hpp"
#include "subreg/witness.hpp"

using namespace subreg;

namespace {

void classify_abna(benchmark::State& state) {
  const Dfa d = compile_regex("a|ab*a", "ab");
  for (auto _ : state) benchmark::DoNotOptimize(classify(d));
}
BENCHMARK(classify_abna);

// {ab^h}+ needs window length h+1
void infer_slt_hierarchy(benchmark::State& state) {
  const auto h = static_cast<std::size_t>(state.range(0));
  const Dfa d = compile_regex("(a" + std::string(h, 'b') + ")(a" + std::string(h, 'b') + ")*", "ab");
  for (auto _ : state) benchmark::DoNotOptimize(infer_slt(d));
}
BENCHMARK(infer_slt_hierarchy)->DenseRange(1, 4);

void orderable_copies(benchmark::State& state) {
  const Dfa d = compile_regex("ab(ab)*", "ab");
  for (auto _ : state) benchmark::DoNotOptimize(is_orderable(d));
}
BENCHMARK(orderable_copies);

void generate_dyck(benchmark::State& state) {
  const auto g = build_witness(WitnessId::parse("dyck")).grammars[0];
  for (auto _ : state) {
    benchmark::DoNotOptimize(generate_bounded(g, Mode::internal, state.range(0)));
  }
}
BENCHMARK(generate_dyck)->DenseRange(8, 14, 2);

void generate_kk(benchmark::State& state) {
  const auto g = build_witness(WitnessId{"kk", static_cast<std::size_t>(state.range(0))}).grammars[0];
  for (auto _ : state) benchmark::DoNotOptimize(generate_bounded(g, Mode::internal, 12));
}
BENCHMARK(generate_kk)->DenseRange(1, 2);

void verify_all_lemmas(benchmark::State& state) {
  for (auto _ : state) {
    for (const auto& id : all_witness_ids()) benchmark::DoNotOptimize(verify_lemma(id));
  }
}
BENCHMARK(verify_all_lemmas)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
