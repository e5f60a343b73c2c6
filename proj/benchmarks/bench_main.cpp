// Copyright 2026 The kltcalc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <benchmark/benchmark.h>

#include "kltcalc/flag.hpp"
#include "kltcalc/oracle.hpp"
#include "kltcalc/toric.hpp"

namespace {

using namespace kltcalc;

void BM_Sweep(benchmark::State& state) {
  oracle::SweepOptions o;
  o.types = oracle::sweep_types(static_cast<int>(state.range(0)));
  o.threads = 1;
  for (auto _ : state) benchmark::DoNotOptimize(oracle::run_sweep(o));
}
BENCHMARK(BM_Sweep)->Arg(2)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_FlagVerdict(benchmark::State& state) {
  const auto d = RootDatum::build(RootSystemSpec::parse("E8"));
  const auto p = parabolic(d, {0, 1, 2, 3});
  flag::FlagBoundary b;
  for (int a : p.complement) b.coefficients[a] = Rational(1, 3);
  for (auto _ : state) benchmark::DoNotOptimize(flag::is_klt_flag(d, p, b));
}
BENCHMARK(BM_FlagVerdict)->Unit(benchmark::kMillisecond);

// Hirzebruch-Jung cone spanned by (1,0) and (1,n).
void BM_ResolveHJ(benchmark::State& state) {
  const toric::Fan f{2, {{1, 0}, {1, state.range(0)}}, {{0, 1}}};
  for (auto _ : state) benchmark::DoNotOptimize(toric::resolve_fan(f));
}
BENCHMARK(BM_ResolveHJ)->RangeMultiplier(4)->Range(2, 512);

void BM_ResolveRank3(benchmark::State& state) {
  const toric::Fan f{3, {{1, 0, 0}, {0, 1, 0}, {1, 1, state.range(0)}}, {{0, 1, 2}}};
  for (auto _ : state) benchmark::DoNotOptimize(toric::resolve_fan(f));
}
BENCHMARK(BM_ResolveRank3)->Arg(2)->Arg(5)->Arg(11);

}  // namespace

BENCHMARK_MAIN();
