// Copyright 2026 The Topomap Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <benchmark/benchmark.h>

#include <random>

#include "topomap/basis_maps.h"

namespace topomap {
namespace {

FiniteFunction random_function(std::size_t n, std::size_t m, unsigned seed) {
  std::mt19937_64 rng(seed);
  std::vector<std::size_t> map(n);
  for (auto& y : map) y = rng() % m;
  return FiniteFunction::indexed(m, map);
}

FiniteFunction fold_onto(std::size_t n, std::size_t m) {
  std::vector<std::size_t> map(n);
  for (std::size_t x = 0; x < n; ++x) map[x] = x % m;
  return FiniteFunction::indexed(m, map);
}

void BM_SurjectionUnitary(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const FiniteFunction f = fold_onto(n, n / 2);
  for (auto _ : state) benchmark::DoNotOptimize(surjection_unitary(f));
}
BENCHMARK(BM_SurjectionUnitary)->RangeMultiplier(4)->Range(8, 512);

void BM_ArbitraryUnitary(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const FiniteFunction f = random_function(n, n, 7);
  for (auto _ : state) benchmark::DoNotOptimize(arbitrary_unitary(f));
}
BENCHMARK(BM_ArbitraryUnitary)->RangeMultiplier(2)->Range(4, 64);

void BM_UnitarityResidual(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const BasisMapOperator u = arbitrary_unitary(random_function(n, n, 11));
  for (auto _ : state) benchmark::DoNotOptimize(unitarity_residual(u));
  state.SetLabel(u.is_dense() ? "dense" : "sparse");
}
BENCHMARK(BM_UnitarityResidual)->RangeMultiplier(2)->Range(4, 64);

void BM_SetImage(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const FiniteFunction f = random_function(n, n, 13);
  const BasisMapOperator u = arbitrary_unitary(f);
  std::set<std::size_t> s;
  for (std::size_t x = 0; x < n; x += 2) s.insert(x);
  const AmplitudeVector in = arbitrary_input(f, represent_set(s, f.domain()));
  for (auto _ : state) benchmark::DoNotOptimize(extract_set(apply(u, in)));
}
BENCHMARK(BM_SetImage)->RangeMultiplier(2)->Range(4, 64);

}  // namespace
}  // namespace topomap
