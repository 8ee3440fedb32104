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

#include <string>

#include "streetflow/builder.h"
#include "test_util.h"

namespace streetflow {
namespace {

using builder::BuildingData;
using builder::Classification;
using builder::Classify;
using builder::DiagramSegment;
using builder::FluxCheck;
using builder::FluxData;
using builder::Glue;
using builder::GluedSurface;
using builder::MinimalTypes;
using builder::PsiEventLog;
using builder::SaddleType;
using builder::ValidateBuildingData;
using testutil::Q;

bool HasViolation(const std::vector<builder::BuildViolation>& v,
                  const std::string& code) {
  for (const auto& x : v) {
    if (x.code == code) return true;
  }
  return false;
}

TEST_SUITE_BEGIN("builder");

TEST_CASE("minimal type availability by genus") {
  const auto types_of = [](int g) {
    std::string s;
    for (const auto& inst : MinimalTypes(g)) s += inst.type;
    return s;
  };
  CHECK(types_of(2) == "a");
  CHECK(types_of(3) == "ac");
  CHECK(types_of(4) == "abc");
  CHECK(types_of(5) == "abc");
  CHECK(types_of(6) == "abc");
  CHECK_THROWS_AS(MinimalTypes(1), ValidationError);
}

TEST_CASE("every generated instance validates, glues and is minimal") {
  for (int g = 2; g <= 6; ++g) {
    for (const auto& inst : MinimalTypes(g)) {
      INFO("type " << inst.type << " genus " << g);
      CHECK(ValidateBuildingData(inst.data).empty());
      const GluedSurface gs = Glue(inst.data);
      CHECK(gs.genus == g);
      CHECK(static_cast<int>(gs.saddles.size()) == 2 * g - 2);
      CHECK((gs.t - gs.r == 2));
      CHECK(gs.t == 2);
      CHECK(gs.r == 0);
      const Classification c = Classify(gs);
      CHECK(c.minimal);
      CHECK(c.simple);
      CHECK(c.rank == 0);
      CHECK((!c.maximal || g == 2));
    }
  }
}

TEST_CASE("the genus-2 gluing in detail") {
  const auto insts = MinimalTypes(2);
  const GluedSurface gs = Glue(insts[0].data);
  REQUIRE(gs.saddles.size() == 2);
  CHECK(gs.saddles[0].SameType(SaddleType{{1, 1, 2, 2}}));
  CHECK(gs.saddles[1].SameType(SaddleType{{2, 2, 1, 1}}));
  CHECK(gs.selected == std::vector<int>{1, 2});
  CHECK(Classify(gs).simple);

  const auto events = PsiEventLog(insts[0].data.diagram);
  CHECK(events.size() == 2);  // the two center meetings
  CHECK(events.front().kind == "meet-center");
}

TEST_CASE("violations are reported by condition") {
  // Start from the valid genus-3 chain instance and break it.
  BuildingData base = MinimalTypes(3)[1].data;
  REQUIRE(ValidateBuildingData(base).empty());

  BuildingData touching = base;
  // A segment end at a saddle height needs an inner vertex; build a Y tree.
  touching.diagram.tree.heights = {Q(0), Q(2), Q(3), Q(1)};
  touching.diagram.tree.edges = {{3, 0}, {3, 1}, {3, 2}};
  touching.diagram.segments = {
      {1, {0, 1}, Q(0), Q(2), mpq_class(0)},
      {2, {0, 2}, Q(0), Q(3), mpq_class(1, 4)},
      {3, {2}, Q(1), Q(3), mpq_class(1, 2)},  // lo sits at the saddle height
  };
  touching.tori = {{Q(2), Q(2), Q(2)}, {Q(3), Q(3), Q(3)}, {Q(2), Q(2), Q(2)}};
  CHECK(HasViolation(ValidateBuildingData(touching), "a"));

  BuildingData gap = base;
  gap.diagram.segments = {
      {1, {0}, Q(0), Q(2, 5), mpq_class(0)},
      {2, {0}, Q(0), Q(1, 2), mpq_class(1, 4)},
      {3, {0}, Q(11, 20), Q(1), mpq_class(1, 2)},
      {4, {0}, Q(3, 5), Q(1), mpq_class(3, 4)},
  };
  gap.tori = {{Q(1), Q(1), Q(2, 5)},
              {Q(1), Q(1), Q(1, 2)},
              {Q(1), Q(1), Q(9, 20)},
              {Q(1), Q(1), Q(2, 5)}};
  CHECK(HasViolation(ValidateBuildingData(gap), "b"));

  BuildingData mismatch = base;
  mismatch.tori[0].m += Q(1, 7);
  mismatch.tori[0].a += Q(1, 7);
  CHECK(HasViolation(ValidateBuildingData(mismatch), "measure_match"));

  BuildingData thin = base;
  thin.tori[1].a = Q(1, 3);
  thin.tori[1].b = Q(1, 3);  // |a| + |b| <= m = 1
  CHECK(HasViolation(ValidateBuildingData(thin), "torus"));
}

TEST_CASE("maximal inventories reject odd genus") {
  GluedSurface odd;
  odd.genus = 3;
  odd.saddles = {SaddleType{{1, 1, 2, 2}}, SaddleType{{2, 2, 3, 3}},
                 SaddleType{{3, 3, 1, 1}}, SaddleType{{1, 2, 3, 2}}};
  odd.t = 3;
  odd.r = 1;
  odd.boundary = 0;
  CHECK_THROWS_AS(Classify(odd), ValidationError);

  GluedSurface even;
  even.genus = 4;
  even.saddles = {SaddleType{{1, 1, 2, 2}}, SaddleType{{2, 2, 3, 3}},
                  SaddleType{{3, 3, 4, 4}}, SaddleType{{4, 4, 1, 1}},
                  SaddleType{{1, 2, 3, 4}}, SaddleType{{1, 3, 2, 4}}};
  even.t = 4;
  even.r = 2;
  even.boundary = 0;
  const Classification c = Classify(even);
  CHECK(c.maximal);
  CHECK(c.cycle_type == std::vector<int>{2});

  GluedSurface pairs;
  pairs.genus = 4;
  pairs.saddles = {SaddleType{{1, 1, 2, 2}}, SaddleType{{2, 2, 1, 1}},
                   SaddleType{{3, 3, 4, 4}}, SaddleType{{4, 4, 3, 3}},
                   SaddleType{{1, 2, 3, 4}}, SaddleType{{1, 3, 2, 4}}};
  pairs.t = 4;
  pairs.r = 2;
  pairs.boundary = 0;
  CHECK(Classify(pairs).cycle_type == std::vector<int>{1, 1});
}

TEST_CASE("flux round trip recovers a planted asymmetry") {
  FluxData data;
  data.m[12] = Q(1, 3);
  data.m[21] = Q(1, 3) - Q(1, 7);
  data.m[23] = Q(1, 5);
  data.m[32] = Q(1, 5) - Q(1, 7);
  data.m[34] = Q(1, 4);
  data.m[43] = Q(1, 4) - Q(1, 7);
  data.m[41] = Q(1, 6);
  data.m[14] = Q(1, 6) - Q(1, 7);
  data.A = {data.m.at(12) + data.m.at(14), data.m.at(21) + data.m.at(23),
            data.m.at(32) + data.m.at(34), data.m.at(43) + data.m.at(41)};
  const auto res = FluxCheck(data);
  CHECK(res.flux == Q(1, 7));
  CHECK(res.direction == "clockwise");
  // The alternating identity comes for free from conservation.
  CHECK((data.A[0] - data.A[1] + data.A[2] - data.A[3] == Q(0)));
}

TEST_CASE("symmetric measures are degenerate; broken sums are named") {
  FluxData sym;
  for (int code : {12, 21, 23, 32, 34, 43, 41, 14}) sym.m[code] = Q(1, 4);
  sym.A = {Q(1, 2), Q(1, 2), Q(1, 2), Q(1, 2)};
  const auto res = FluxCheck(sym);
  CHECK(res.flux == Q(0));
  CHECK(res.direction == "degenerate");

  FluxData bad;
  bad.m[12] = Q(2);
  bad.m[14] = Q(1);
  bad.m[21] = Q(1, 2);
  bad.m[23] = Q(1, 2);
  bad.m[41] = Q(5, 2);
  bad.m[43] = Q(5, 2);
  bad.m[32] = Q(1);
  bad.m[34] = Q(1);
  bad.A = {Q(3), Q(1), Q(2), Q(5)};
  CHECK_THROWS_WITH_AS(FluxCheck(bad),
                       doctest::Contains("flux identity failed"),
                       ValidationError);
}

TEST_SUITE_END();

}  // namespace
}  // namespace streetflow
