// Copyright 2026 The hullprop Authors
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

#include "hullprop/codekit.hpp"
#include "hullprop/fixtures.hpp"
#include "hullprop/tables.hpp"

using namespace hullprop;

static FMatrix random_matrix(const FieldPtr& f, std::size_t rows, std::size_t cols) {
    std::mt19937 rng(7);
    std::uniform_int_distribution<std::uint32_t> pick(0, f->order() - 1);
    FMatrix m(f, rows, cols);
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c) m.set(r, c, f->from_vector_index(pick(rng)));
    return m;
}

static void BM_Rref(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const FMatrix m = random_matrix(make_field_of_order(16), n / 2, n);
    for (auto _ : state) benchmark::DoNotOptimize(rref(m));
}
BENCHMARK(BM_Rref)->Arg(32)->Arg(128)->Arg(256);

static void BM_HermitianHull(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const LinearCode c(random_matrix(make_field_of_order(16), n / 2, n));
    for (auto _ : state) benchmark::DoNotOptimize(hull(c, InnerProduct::Hermitian));
}
BENCHMARK(BM_HermitianHull)->Arg(32)->Arg(128);

static void BM_FixtureMinDistance(benchmark::State& state) {
    const LinearCode c = fixture_28_10();
    for (auto _ : state) benchmark::DoNotOptimize(min_distance(c));
}
BENCHMARK(BM_FixtureMinDistance)->Unit(benchmark::kMillisecond);

static void BM_Table1(benchmark::State& state) {
    TableOptions opts;
    opts.q = 3;
    opts.jobs = static_cast<unsigned>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(generate_table1(opts));
}
BENCHMARK(BM_Table1)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
