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

#include <doctest.h>

#include <cmath>
#include <random>

#include "streetflow/oracle.h"
#include "test_util.h"

namespace streetflow {
namespace {

using oracle::EmpiricalStreets;
using oracle::FirstReturn;
using oracle::PlanarRealization;
using oracle::TimeProfile;
using oracle::TimeProfileEval;
using testutil::Q;
using testutil::R2;

TEST_SUITE_BEGIN("oracle");

TEST_CASE("trivial displacements and landing points") {
  const auto pr = PlanarRealization::FromMeasures(Q(1, 2), Q(7, 10), Q(9, 10));
  // Street 1 carrier [0, 2/5) lands through (1, 0) in the extreme right.
  const auto left = FirstReturn(pr, Q(1, 5));
  CHECK(left.shift == LatticeVector{1, 0});
  CHECK(left.landing == Q(1, 5) + Q(1, 2));
  const auto mid = FirstReturn(pr, Q(9, 20));
  CHECK(mid.shift == LatticeVector{1, 1});
  const auto right = FirstReturn(pr, Q(4, 5));
  CHECK(right.shift == LatticeVector{0, 1});
  CHECK(right.landing == Q(4, 5) - Q(7, 10));
}

TEST_CASE("displacements of the quadratic reference data") {
  const auto pr = PlanarRealization::FromMeasures(Q(1), R2(0, 1), Q(9, 10));
  const auto t = EmpiricalStreets(pr, 1);
  CHECK(t.h1 == LatticeVector{2, 1});
  CHECK(t.h0 == LatticeVector{3, 2});
  CHECK(t.h2 == LatticeVector{1, 1});
}

TEST_CASE("backward flow returns to the origin") {
  const auto pr = PlanarRealization::FromMeasures(Q(1), R2(0, 1), Q(9, 10));
  std::mt19937_64 rng(9101);
  std::uniform_int_distribution<long> d(1, 899);
  for (int i = 0; i < 50; ++i) {
    const Scalar x = Q(d(rng), 1000);
    const auto hit = FirstReturn(pr, x, +1);
    const auto back = FirstReturn(pr, hit.landing, -1);
    CHECK(back.landing == x);
    CHECK(back.shift == -hit.shift);
  }
}

TEST_CASE("endpoint hits are flagged as non-generic") {
  const auto pr = PlanarRealization::FromMeasures(Q(1, 2), Q(7, 10), Q(9, 10));
  CHECK_THROWS_AS(FirstReturn(pr, Q(7, 10)), NonGenericityError);
}

TEST_CASE("empirical streets match the computed triple exactly") {
  std::mt19937_64 rng(9102);
  int done = 0;
  while (done < 25) {
    const FoliationSpec spec = testutil::RandomSqrt2Spec(rng);
    for (int plane = 1; plane <= 2; ++plane) {
      try {
        const auto lhs = streets::ComputeStreetTriple(spec, plane);
        const auto rhs =
            EmpiricalStreets(PlanarRealization::FromSpec(spec, plane), plane);
        CHECK(lhs.w0 == rhs.w0);
        CHECK(lhs.w1 == rhs.w1);
        CHECK(lhs.w2 == rhs.w2);
        CHECK(lhs.h0 == rhs.h0);
        CHECK(lhs.h1 == rhs.h1);
        CHECK(lhs.h2 == rhs.h2);
      } catch (const NonGenericityError&) {
        continue;
      }
      ++done;
    }
  }
}

TEST_CASE("time profile model") {
  TimeProfile tp;
  tp.width = Q(2);
  tp.c1 = 0.7;
  tp.c2 = 1.3;
  tp.street_role = 0;
  tp.t0 = 0.25;

  // Midpoint value t0 + (cL + cR) ln 2.
  CHECK(TimeProfileEval(tp, 1.0) ==
        doctest::Approx(0.25 + 2.0 * std::log(2.0)));

  // Fitted log-slope near zero approaches c2 within 1%.
  const double x1 = 1e-7 * 2.0, x2 = 1e-9 * 2.0;
  const double slope = (TimeProfileEval(tp, x2) - TimeProfileEval(tp, x1)) /
                       (std::log(1.0 / x2) - std::log(1.0 / x1));
  CHECK(std::abs(slope - tp.c2) / tp.c2 < 0.01);

  // Streets 1 and 2 halve the constants on the matching sides.
  TimeProfile s1 = tp;
  s1.street_role = 1;
  TimeProfile s2 = tp;
  s2.street_role = 2;
  CHECK(s1.near_zero_constant() == doctest::Approx(tp.c2 / 2));
  CHECK(s1.near_width_constant() == doctest::Approx(tp.c1 / 2));
  CHECK(s2.near_zero_constant() == doctest::Approx(tp.c1 / 2));
  CHECK(s2.near_width_constant() == doctest::Approx(tp.c2 / 2));

  CHECK_THROWS_AS(TimeProfileEval(tp, 2.5), ValidationError);
  CHECK_THROWS_AS(TimeProfileEval(tp, 0.0), ValidationError);
}

TEST_SUITE_END();

}  // namespace
}  // namespace streetflow
