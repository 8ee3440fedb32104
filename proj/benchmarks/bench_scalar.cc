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

#include "streetflow/scalar.h"

namespace streetflow {
namespace {

static void BM_ScalarMul(benchmark::State& state) {
  const Scalar x(mpq_class(355, 113), mpq_class(-22, 7), 2);
  const Scalar y(mpq_class(13, 17), mpq_class(5, 19), 2);
  for (auto _ : state) {
    benchmark::DoNotOptimize(x * y);
  }
}
BENCHMARK(BM_ScalarMul);

static void BM_ScalarCmp(benchmark::State& state) {
  // Opposite-sign parts force the quadratic comparison path.
  const Scalar x(mpq_class(1393, 985), mpq_class(-1, 1), 2);
  const Scalar y(mpq_class(0), mpq_class(1, 100), 2);
  for (auto _ : state) {
    benchmark::DoNotOptimize(x.Cmp(y));
  }
}
BENCHMARK(BM_ScalarCmp);

}  // namespace
}  // namespace streetflow
