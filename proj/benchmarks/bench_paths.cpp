// Copyright 2026 The bcpaths Authors
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

#include <random>
#include <utility>
#include <vector>

#include "bcp/classifier.hpp"
#include "bcp/dubins.hpp"
#include "bcp/homotopy.hpp"
#include "bcp/lattice_oracle.hpp"
#include "bcp/proximity.hpp"
#include "bcp/winding.hpp"
#include "support.hpp"

namespace
{

using bcp::DirectedPoint;

std::vector<std::pair<DirectedPoint, DirectedPoint>> pairs(std::size_t count, double half_width)
{
  std::mt19937 rng(1);
  std::vector<std::pair<DirectedPoint, DirectedPoint>> out;
  for (std::size_t i = 0; i < count; ++i) {
    out.emplace_back(bcp::testing::random_point(rng, half_width),
      bcp::testing::random_point(rng, half_width));
  }
  return out;
}

void BM_MinimalPath(benchmark::State & state)
{
  const auto ps = pairs(1024, 6.0);
  std::size_t i = 0;
  for (auto _ : state) {
    const auto & [x, y] = ps[i++ % ps.size()];
    benchmark::DoNotOptimize(bcp::minimal_path(x, y));
  }
}
BENCHMARK(BM_MinimalPath);

void BM_MinimalPathInClass(benchmark::State & state)
{
  const auto ps = pairs(64, 4.0);
  std::vector<bcp::ClosurePath> closures;
  std::vector<int> ks;
  for (const auto & [x, y] : ps) {
    closures.push_back(bcp::make_closure(x, y));
    ks.push_back(bcp::class_index_k(x, y, closures.back()).k);
  }
  const int offset = static_cast<int>(state.range(0));
  std::size_t i = 0;
  for (auto _ : state) {
    const std::size_t j = i++ % ps.size();
    benchmark::DoNotOptimize(bcp::minimal_path_in_class(
        ps[j].first, ps[j].second, closures[j].path, ks[j] + offset));
  }
}
BENCHMARK(BM_MinimalPathInClass)->Arg(0)->Arg(1)->Arg(3);

void BM_ClassifyOmega(benchmark::State & state)
{
  const auto x = DirectedPoint::make(0, 0, 0);
  const auto y = DirectedPoint::make(1, 0, 0);
  const double resolution = 1.0 / static_cast<double>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(bcp::classify(x, y, resolution));
  }
}
BENCHMARK(BM_ClassifyOmega)->Arg(50)->Arg(100)->Arg(200)->Unit(benchmark::kMillisecond);

void BM_ClassifySpace(benchmark::State & state)
{
  const auto ps = pairs(32, 3.0);
  std::size_t i = 0;
  for (auto _ : state) {
    const auto & [x, y] = ps[i++ % ps.size()];
    benchmark::DoNotOptimize(bcp::classify_space(x, y, 2));
  }
}
BENCHMARK(BM_ClassifySpace)->Unit(benchmark::kMillisecond);

void BM_WindingNumber(benchmark::State & state)
{
  std::mt19937 rng(2);
  std::vector<std::pair<bcp::CsPath, bcp::ClosurePath>> cases;
  for (int i = 0; i < 256; ++i) {
    auto p = bcp::testing::random_cscsc(rng, bcp::testing::random_point(rng));
    auto c = bcp::make_closure(p.start(), p.end());
    cases.emplace_back(std::move(p), std::move(c));
  }
  std::size_t i = 0;
  for (auto _ : state) {
    const auto & [p, c] = cases[i++ % cases.size()];
    benchmark::DoNotOptimize(bcp::winding_number(p, c));
  }
}
BENCHMARK(BM_WindingNumber);

void BM_NormalizeSpline(benchmark::State & state)
{
  std::mt19937 rng(3);
  const auto s = bcp::testing::random_spline_path(
    rng, bcp::testing::random_point(rng), static_cast<double>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(bcp::normalize_to_cs(s));
  }
}
BENCHMARK(BM_NormalizeSpline)->Arg(3)->Arg(6)->Arg(12)->Unit(benchmark::kMillisecond);

void BM_LatticeOracle(benchmark::State & state)
{
  const auto x = DirectedPoint::make(0, 0, 0);
  const auto y = DirectedPoint::make(3, 2, 1.0);
  bcp::LatticeConfig cfg;
  cfg.position_step = 1.0 / static_cast<double>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(bcp::shortest_path(x, y, cfg));
  }
}
BENCHMARK(BM_LatticeOracle)->Arg(5)->Arg(10)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
