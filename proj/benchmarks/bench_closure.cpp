// Copyright 2026 The crsm Authors
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

#include <vector>  // for vector

#include "crsm/closure.hpp"
#include "crsm/decompose.hpp"
#include "oracles.hpp"

namespace {

  using namespace crsm;

  // swap, cycle and a rank-dropping map generate every transform of n states
  Machine full_monoid(std::size_t n) {
    std::vector<state_type> swap(n), cycle(n), merge(n);
    for (std::size_t q = 0; q < n; ++q) {
      swap[q]  = q;
      cycle[q] = (q + 1) % n;
      merge[q] = q;
    }
    std::swap(swap[0], swap[1]);
    merge[1] = 0;
    return make_machine({StateTransform(swap), StateTransform(cycle), StateTransform(merge)});
  }

  void BM_FullMonoidClosure(benchmark::State& state) {
    auto const m = full_monoid(state.range(0));
    std::size_t size = 0;
    for (auto _ : state) {
      auto const s = generate_closure(m);
      size         = s.size();
      benchmark::DoNotOptimize(size);
    }
    state.counters["elements"] = static_cast<double>(size);
  }
  BENCHMARK(BM_FullMonoidClosure)->DenseRange(3, 5)->Unit(benchmark::kMillisecond);

  void BM_IsSimpleFullMonoid(benchmark::State& state) {
    auto const s = generate_closure(full_monoid(state.range(0)));
    for (auto _ : state) {
      benchmark::DoNotOptimize(is_simple(s));
    }
  }
  BENCHMARK(BM_IsSimpleFullMonoid)->DenseRange(3, 5)->Unit(benchmark::kMicrosecond);

  oracle::ReesProduct rees_over_s3(std::size_t m, std::size_t n) {
    oracle::ReesProduct r{m, n, oracle::symmetric_group_3(), {}};
    r.sandwich.assign(n, std::vector<std::size_t>(m, 0));
    for (std::size_t j = 1; j < n; ++j) {
      for (std::size_t i = 1; i < m; ++i) {
        r.sandwich[j][i] = (i + j) % 6;
      }
    }
    return r;
  }

  void BM_DecomposeRees(benchmark::State& state) {
    auto const r = rees_over_s3(state.range(0), state.range(0));
    auto const s = generate_closure(r.machine());
    for (auto _ : state) {
      auto const d = decompose(s);
      benchmark::DoNotOptimize(d.m);
    }
    state.counters["elements"] = static_cast<double>(s.size());
  }
  BENCHMARK(BM_DecomposeRees)->DenseRange(1, 3)->Unit(benchmark::kMillisecond);

  void BM_RecomposeVerify(benchmark::State& state) {
    auto const r = rees_over_s3(state.range(0), state.range(0));
    auto const s = generate_closure(r.machine());
    auto const d = decompose(s);
    for (auto _ : state) {
      benchmark::DoNotOptimize(recompose_verify(s, d).passed);
    }
  }
  BENCHMARK(BM_RecomposeVerify)->DenseRange(1, 3)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
