#include <benchmark/benchmark.h>

#include <random>

#include "ybco/bracket.hpp"
#include "ybco/braid.hpp"
#include "ybco/jones_alex.hpp"
#include "ybco/models.hpp"
#include "ybco/quandle.hpp"
#include "ybco/ybcoh.hpp"

using namespace ybco;

static void BM_LaurentMultiply(benchmark::State& state) {
  Ring r = parse_ring("QQ(i)[A:laurent,B,h:trunc1]");
  RingElement a = parse_element(r, "A^3 - 2*A^-1 + i*B*h + 5");
  RingElement b = parse_element(r, "A^-2 + 3*A*B - h");
  for (auto _ : state) benchmark::DoNotOptimize(a * b);
}
BENCHMARK(BM_LaurentMultiply);

static void BM_Compose(benchmark::State& state) {
  std::mt19937_64 rng(1);
  Ring qq = parse_ring("QQ");
  int m = static_cast<int>(state.range(0));
  TensorOperator f = random_operator(qq, 2, m, m, rng);
  TensorOperator g = random_operator(qq, 2, m, m, rng);
  for (auto _ : state) benchmark::DoNotOptimize(compose(f, g));
}
BENCHMARK(BM_Compose)->Arg(2)->Arg(3)->Arg(4);

static void BM_TauTrace(benchmark::State& state) {
  DeformedEybo d = tau_deformed(RingElement::variable(tau_ring(), "q"));
  BraidWord b = torus_braid(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(trace_invariant(b, d));
}
BENCHMARK(BM_TauTrace)->Arg(2)->Arg(8);

static void BM_QuandleTrace(benchmark::State& state) {
  DeformedEybo d = *yb_from_quandle(alexander_quandle_F4(), chi_cocycle()).deformed;
  BraidWord b = BraidWord::parse("strands=3; 1 -2 1 -2");
  for (auto _ : state) benchmark::DoNotOptimize(trace_invariant(b, d));
}
BENCHMARK(BM_QuandleTrace);

static void BM_JonesInvariant(benchmark::State& state) {
  BraidWord b = BraidWord::parse("strands=3; 1 -2 1 -2");
  jones_model();
  for (auto _ : state) benchmark::DoNotOptimize(jones_invariant(b));
}
BENCHMARK(BM_JonesInvariant);

static void BM_JonesOracle(benchmark::State& state) {
  BraidWord b = BraidWord::parse("strands=3; 1 -2 1 -2");
  for (auto _ : state) benchmark::DoNotOptimize(oracle_jones(b));
}
BENCHMARK(BM_JonesOracle);

static void BM_BracketEvaluate(benchmark::State& state) {
  BracketModel m = build_bracket_model(true, Specialization::AEqualsI);
  MorseWord w = torus_morse(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(evaluate_morse(w, m));
}
BENCHMARK(BM_BracketEvaluate)->Arg(3)->Arg(8);

static void BM_Delta2(benchmark::State& state) {
  std::mt19937_64 rng(2);
  TensorOperator R = yb_from_quandle(alexander_quandle_F4(), std::nullopt).base.R;
  TensorOperator phi = random_operator(R.ring(), 4, 2, 2, rng);
  for (auto _ : state) benchmark::DoNotOptimize(delta2(R, phi));
}
BENCHMARK(BM_Delta2);

BENCHMARK_MAIN();
