// Copyright 2025 The streetflow Authors
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

#include "streetflow/homotopy.h"
#include "streetflow/semigroup.h"

namespace streetflow {
namespace {

const transition::BrokenIsometry& Isometry() {
  static const transition::BrokenIsometry bi = [] {
    const FoliationSpec spec{Scalar(1), Scalar::SqrtOf(2), Scalar(7, 10),
                             Scalar(mpq_class(0), mpq_class(1, 2), 2),
                             Scalar(9, 10)};
    return transition::BrokenIsometry(streets::ComputeStreetTriple(spec, 1),
                                      streets::ComputeStreetTriple(spec, 2));
  }();
  return bi;
}

static void BM_EnumerateLevel(benchmark::State& state) {
  const auto& bi = Isometry();
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        semigroup::EnumerateLevel(bi, static_cast<int>(state.range(0))));
  }
}
BENCHMARK(BM_EnumerateLevel)->Arg(4)->Arg(8)->Arg(12);

static void BM_CodeTrajectory(benchmark::State& state) {
  const auto& bi = Isometry();
  const Scalar x0(13, 64);
  for (auto _ : state) {
    benchmark::DoNotOptimize(semigroup::CodeTrajectory(bi, x0, 1000));
  }
}
BENCHMARK(BM_CodeTrajectory);

static void BM_DehnReduce(benchmark::State& state) {
  using homotopy::GroupWord;
  const GroupWord rel =
      homotopy::Kappa() * GroupWord{homotopy::kA2, homotopy::kB2,
                                    -homotopy::kA2, -homotopy::kB2};
  GroupWord w;
  for (int i = 0; i < 6; ++i) w = w * rel * GroupWord{homotopy::kA1};
  for (auto _ : state) {
    benchmark::DoNotOptimize(homotopy::DehnReduce(w));
  }
}
BENCHMARK(BM_DehnReduce);

}  // namespace
}  // namespace streetflow
