// Copyright 2026 The scaledim Authors.
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

#include "scaledim/generators.h"
#include "scaledim/packing.h"

namespace scaledim {
namespace {

ValueMatrix Rows(std::int64_t n) {
  return GenRandom(8, static_cast<std::size_t>(n), 4, 3).values();
}

void BM_PackingExact(benchmark::State& state) {
  const ValueMatrix s = Rows(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(PackingExact(s, Rational(1, 4)).size);
  }
}
BENCHMARK(BM_PackingExact)->RangeMultiplier(2)->Range(16, 64);

void BM_PackingGreedy(benchmark::State& state) {
  const ValueMatrix s = Rows(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(PackingGreedy(s, Rational(1, 4)).size);
  }
}
BENCHMARK(BM_PackingGreedy)->RangeMultiplier(2)->Range(16, 1024);

void BM_CoverProperExact(benchmark::State& state) {
  const ValueMatrix s = Rows(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(CoverProperExact(s, Rational(1, 4)).size);
  }
}
BENCHMARK(BM_CoverProperExact)->RangeMultiplier(2)->Range(16, 64);

}  // namespace
}  // namespace scaledim
