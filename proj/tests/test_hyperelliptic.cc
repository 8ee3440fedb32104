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

#include "streetflow/hyperelliptic.h"
#include "test_util.h"

namespace streetflow {
namespace {

using hyper::ClassifyClass;
using hyper::CountRootsOpen;
using hyper::FoliationClass;
using hyper::FormSpec;
using hyper::PerturbationNote;
using hyper::RatPoly;
using hyper::RealHyperelliptic;
using testutil::Q;

RealHyperelliptic Roots(std::initializer_list<long> zs) {
  RealHyperelliptic c;
  for (long z : zs) c.roots.push_back(Q(z));
  return c;
}

RatPoly Poly(std::initializer_list<long> ascending) {
  std::vector<mpq_class> c;
  for (long x : ascending) c.emplace_back(x);
  return RatPoly(std::move(c));
}

TEST_SUITE_BEGIN("hyperelliptic");

TEST_CASE("sturm counts on fixed polynomials") {
  const RatPoly p = Poly({2, -3, 1});  // (z-1)(z-2)
  CHECK(CountRootsOpen(p, Q(3, 2), Q(3)) == 1);
  CHECK(CountRootsOpen(p, Q(0), Q(3)) == 2);
  CHECK(CountRootsOpen(Poly({1, 0, 1}), Q(-10), Q(10)) == 0);
  CHECK(CountRootsOpen(p, std::nullopt, std::nullopt) == 2);
  CHECK(CountRootsOpen(p, std::nullopt, Q(3, 2)) == 1);
  CHECK_THROWS_AS(CountRootsOpen(p, Q(1), Q(3)), ValidationError);
  // Repeated roots are counted once, by the square-free part.
  CHECK(CountRootsOpen(Poly({1, -2, 1}), Q(0), Q(2)) == 1);
}

TEST_CASE("sturm agrees with the numerical root finder") {
  std::mt19937_64 rng(9601);
  std::uniform_int_distribution<long> coeff(-9, 9);
  std::uniform_int_distribution<int> deg(2, 8);
  int done = 0;
  while (done < 100) {
    std::vector<mpq_class> c;
    const int n = deg(rng);
    for (int i = 0; i <= n; ++i) c.emplace_back(coeff(rng));
    const RatPoly p(std::move(c));
    if (p.degree() < 2) continue;
    // The endpoints +-16 clear every root (coefficients are below 10).
    if (p.SignAt(Q(-16)) == 0 || p.SignAt(Q(16)) == 0) continue;
    const int exact = CountRootsOpen(p, Q(-16), Q(16));
    const int numeric = testutil::NumericRootsOpen(p, -16.0, 16.0);
    CHECK(exact == numeric);
    ++done;
  }
}

TEST_CASE("constant forms: T for g <= 2, T2 above") {
  for (int g = 1; g <= 5; ++g) {
    RealHyperelliptic c;
    for (long z = 1; z <= 2 * g + 2; ++z) c.roots.push_back(Q(z));
    const FormSpec f{RatPoly::Constant(1), RatPoly::Constant(2)};
    const auto verdict = ClassifyClass(c, f);
    if (g <= 2) {
      CHECK(verdict.clazz == FoliationClass::kT);
    } else {
      CHECK(verdict.clazz == FoliationClass::kT2);
    }
    CHECK(PerturbationNote(c, f).stable);
  }
}

TEST_CASE("the g = 3 conclusion lists the printed cycles") {
  const auto verdict = ClassifyClass(Roots({1, 2, 3, 4, 5, 6, 7, 8}),
                                     {RatPoly::Constant(3), RatPoly::Constant(5)});
  REQUIRE(verdict.clazz == FoliationClass::kT2);
  REQUIRE(verdict.chosen_cycles.size() == 5);
  CHECK(verdict.chosen_cycles[0].first == "a1");
  CHECK(verdict.chosen_cycles[0].second.lo_index == 2);
  CHECK(verdict.chosen_cycles[1].second.lo_index == 7);  // a2 = [z7 z8]
  CHECK(verdict.chosen_cycles[2].second.lo_index == 4);  // a3 = [z4 z5]
  CHECK(verdict.chosen_cycles[3].second.lo_index == 1);  // b1 = [z1 z2]
  CHECK(verdict.chosen_cycles[4].second.lo_index == 6);  // b2 = [z6 z7]
}

TEST_CASE("a u-zero inside an a-segment demotes T to T0 at g = 2") {
  const auto curve = Roots({1, 2, 3, 4, 5, 6});
  // u = z - 5/2 vanishes inside [z2, z3].
  const RatPoly u({mpq_class(-5, 2), mpq_class(1)});
  const auto verdict = ClassifyClass(curve, {u, RatPoly::Constant(1)});
  CHECK(verdict.clazz == FoliationClass::kT0);
  CHECK(verdict.chosen_cycles.size() == 2);
  CHECK(PerturbationNote(curve, {u, RatPoly::Constant(1)}).stable);
}

TEST_CASE("verdicts never upgrade when zeros are added") {
  const auto rank = [](FoliationClass c) {
    switch (c) {
      case FoliationClass::kT:
      case FoliationClass::kT2:
        return 2;
      case FoliationClass::kT0:
        return 1;
      default:
        return 0;
    }
  };
  const auto curve = Roots({1, 2, 3, 4, 5, 6});
  const RatPoly one = RatPoly::Constant(1);
  const int base = rank(ClassifyClass(curve, {one, one}).clazz);
  // Zeros swept across every gap, one position at a time.
  for (long num = 3; num < 12; num += 2) {
    const RatPoly factor({mpq_class(-num, 2), mpq_class(1)});
    const int with_u = rank(ClassifyClass(curve, {factor, one}).clazz);
    const int with_v = rank(ClassifyClass(curve, {one, factor}).clazz);
    CHECK(with_u <= base);
    CHECK(with_v <= base);
  }
}

TEST_CASE("form assumptions are enforced") {
  const auto curve = Roots({1, 2, 3, 4, 5, 6});
  // u vanishing at a branch point violates the standing assumption.
  const RatPoly u({mpq_class(-2), mpq_class(1)});
  CHECK_THROWS_AS(ClassifyClass(curve, {u, RatPoly::Constant(1)}),
                  ValidationError);
  CHECK(!PerturbationNote(curve, {u, RatPoly::Constant(1)}).stable);
  // Degree must stay below g.
  CHECK_THROWS_AS(
      ClassifyClass(curve, {Poly({1, 1, 1}), RatPoly::Constant(1)}),
      ValidationError);
}

TEST_SUITE_END();

}  // namespace
}  // namespace streetflow
