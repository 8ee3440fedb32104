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

#include "streetflow/oracle.h"
#include "streetflow/streets.h"
#include "streetflow/transition.h"

namespace streetflow {
namespace {

FoliationSpec Spec() {
  return FoliationSpec{Scalar(1), Scalar::SqrtOf(2), Scalar(7, 10),
                       Scalar(mpq_class(0), mpq_class(1, 2), 2),
                       Scalar(9, 10)};
}

static void BM_StreetTriple(benchmark::State& state) {
  const FoliationSpec spec = Spec();
  for (auto _ : state) {
    benchmark::DoNotOptimize(streets::ComputeStreetTriple(spec, 1));
  }
}
BENCHMARK(BM_StreetTriple);

static void BM_EmpiricalStreets(benchmark::State& state) {
  const auto pr = oracle::PlanarRealization::FromSpec(Spec(), 1);
  for (auto _ : state) {
    benchmark::DoNotOptimize(oracle::EmpiricalStreets(pr, 1));
  }
}
BENCHMARK(BM_EmpiricalStreets);

static void BM_BuildTransition(benchmark::State& state) {
  const FoliationSpec spec = Spec();
  const auto t1 = streets::ComputeStreetTriple(spec, 1);
  const auto t2 = streets::ComputeStreetTriple(spec, 2);
  for (auto _ : state) {
    benchmark::DoNotOptimize(transition::BrokenIsometry(t1, t2));
  }
}
BENCHMARK(BM_BuildTransition);

}  // namespace
}  // namespace streetflow
