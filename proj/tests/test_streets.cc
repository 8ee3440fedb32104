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

#include <random>

#include "streetflow/oracle.h"
#include "streetflow/streets.h"
#include "test_util.h"

namespace streetflow {
namespace {

using streets::ComputeStreetTriple;
using streets::FindMinimalPairs;
using streets::MBasisHomology;
using streets::StreetTriple;
using testutil::Q;
using testutil::R2;

TEST_SUITE_BEGIN("streets");

TEST_CASE("minimal pairs on the reference data") {
  const auto p1 = FindMinimalPairs(Q(1), R2(0, 1), Q(9, 10));
  CHECK(p1.ua == LatticeVector{2, 1});
  CHECK(p1.by == LatticeVector{1, 1});

  const auto p2 = FindMinimalPairs(Q(1, 2), Q(7, 10), Q(9, 10));
  CHECK(p2.ua == LatticeVector{1, 0});
  CHECK(p2.by == LatticeVector{0, 1});

  CHECK_THROWS_AS(FindMinimalPairs(Q(1), Q(1), Q(1, 2)), NonGenericityError);
}

TEST_CASE("street triple on the reference data") {
  FoliationSpec spec{Q(1), R2(0, 1), R2(0, 1), Q(1), Q(9, 10)};
  const StreetTriple t = ComputeStreetTriple(spec, 1);
  CHECK(t.w0 == Q(1, 10));
  CHECK(t.w1 == R2(-11, 10, 10));      // sqrt(2) - 11/10
  CHECK(t.w2 == R2(19, -10, 10));      // 19/10 - sqrt(2)
  CHECK(t.h0 == LatticeVector{3, 2});
  CHECK(t.h1 == LatticeVector{2, 1});
  CHECK(t.h2 == LatticeVector{1, 1});

  FoliationSpec trivial{Q(1, 2), Q(7, 10), Q(1, 2), Q(7, 10), Q(9, 10)};
  const StreetTriple s = ComputeStreetTriple(trivial, 2);
  CHECK(s.w0 == Q(3, 10));
  CHECK(s.w1 == Q(2, 5));
  CHECK(s.w2 == Q(1, 5));
  CHECK(s.h0 == LatticeVector{1, 1});
  CHECK(s.h1 == LatticeVector{1, 0});
  CHECK(s.h2 == LatticeVector{0, 1});

  FoliationSpec degenerate{Q(1), Q(1), Q(1), Q(1), Q(2)};
  CHECK_THROWS_AS(ComputeStreetTriple(degenerate, 1), ValidationError);
}

TEST_CASE("minimal pairs agree with the brute-force oracle") {
  std::mt19937_64 rng(9001);
  int done = 0;
  while (done < 60) {
    const FoliationSpec spec = testutil::RandomSqrt2Spec(rng);
    try {
      const auto fast = FindMinimalPairs(spec.a1, spec.b1, spec.m);
      const auto brute =
          testutil::BruteForceMinimalPairs(spec.a1, spec.b1, spec.m, 60);
      REQUIRE(brute.ua.has_value());
      REQUIRE(brute.by.has_value());
      CHECK(fast.ua == *brute.ua);
      CHECK(fast.by == *brute.by);
      ++done;
    } catch (const NonGenericityError&) {
      continue;
    }
  }
}

TEST_CASE("street invariants hold on random specs") {
  std::mt19937_64 rng(9002);
  int done = 0;
  while (done < 120) {
    const FoliationSpec spec = testutil::RandomSqrt2Spec(rng);
    for (int plane = 1; plane <= 2; ++plane) {
      StreetTriple t;
      try {
        t = ComputeStreetTriple(spec, plane);
      } catch (const NonGenericityError&) {
        continue;
      }
      CHECK(t.w0 + t.w1 + t.w2 == spec.m);
      CHECK(t.h1 + t.h2 == t.h0);
      CHECK(t.w0.sign() > 0);
      CHECK(t.w1.sign() > 0);
      CHECK(t.w2.sign() > 0);
      // Both short-street measures stay below m and sum above it.
      const Scalar mu1 = TransversalMeasure(t.h1, t.a, t.b);
      const Scalar mu2 = -TransversalMeasure(t.h2, t.a, t.b);
      CHECK(mu1.sign() > 0);
      CHECK(mu2.sign() > 0);
      CHECK(mu1 < spec.m);
      CHECK(mu2 < spec.m);
      CHECK(mu1 + mu2 > spec.m);
      // Measures of the m-dependent basis cycles.
      CHECK(t.w0 + t.w2 == mu1);
      CHECK(t.w0 + t.w1 == mu2);
      const auto mb = MBasisHomology(t);
      CHECK(mb.det == 1);
      ++done;
    }
  }
}

TEST_CASE("m-dependent basis of the reference data") {
  FoliationSpec spec{Q(1), R2(0, 1), R2(0, 1), Q(1), Q(9, 10)};
  const auto mb = MBasisHomology(ComputeStreetTriple(spec, 1));
  CHECK(mb.a_star == LatticeVector{2, 1});
  CHECK(mb.b_star == LatticeVector{1, 1});
  CHECK(mb.det == 1);

  FoliationSpec trivial{Q(1, 2), Q(7, 10), Q(1, 2), Q(7, 10), Q(9, 10)};
  const auto id = MBasisHomology(ComputeStreetTriple(trivial, 1));
  CHECK(id.a_star == LatticeVector{1, 0});
  CHECK(id.b_star == LatticeVector{0, 1});
  CHECK(id.det == 1);

  // Negative-time classes are the opposites.
  CHECK(-mb.a_star == LatticeVector{-2, -1});
}

TEST_CASE("carriers partition s in the order 1, 0, 2") {
  FoliationSpec spec{Q(1), R2(0, 1), R2(0, 1), Q(1), Q(9, 10)};
  const StreetTriple t = ComputeStreetTriple(spec, 1);
  CHECK(t.Carrier(1).lo() == Q(0));
  CHECK(t.Carrier(1).hi() == t.Carrier(0).lo());
  CHECK(t.Carrier(0).hi() == t.Carrier(2).lo());
  CHECK(t.Carrier(2).hi() == spec.m);
  CHECK(t.StreetAt(Q(1, 10)) == 1);
  CHECK(t.StreetAt(Q(2, 5)) == 0);
  CHECK(t.StreetAt(Q(7, 10)) == 2);
  CHECK_THROWS_AS(t.StreetAt(t.w1), CutPointError);
}

TEST_SUITE_END();

}  // namespace
}  // namespace streetflow
