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

#include "streetflow/semigroup.h"
#include "test_util.h"

namespace streetflow {
namespace {

using semigroup::ClosedCurveVerdict;
using semigroup::CodeTrajectory;
using semigroup::CurveSign;
using semigroup::EmptyWord;
using semigroup::EnumerateLevel;
using semigroup::LeftMultiply;
using semigroup::Product;
using semigroup::SemigroupWord;
using semigroup::WordFromItinerary;
using testutil::Q;
using testutil::R2;

transition::BrokenIsometry ReferenceIsometry() {
  FoliationSpec spec{Q(1), R2(0, 1), Q(7, 10), R2(0, 1, 2), Q(9, 10)};
  return transition::BrokenIsometry(streets::ComputeStreetTriple(spec, 1),
                                    streets::ComputeStreetTriple(spec, 2));
}

// A nonzero word sampled by coding a random orbit window.
SemigroupWord RandomWord(const transition::BrokenIsometry& bi,
                         std::mt19937_64& rng, int len) {
  std::uniform_int_distribution<long> d(1, 9999);
  for (;;) {
    try {
      const Scalar x0 = bi.m() * Q(d(rng), 10000);
      return WordFromItinerary(bi, CodeTrajectory(bi, x0, len));
    } catch (const CutPointError&) {
    }
  }
}

TEST_SUITE_BEGIN("semigroup");

TEST_CASE("level one is the tau partition") {
  const auto bi = ReferenceIsometry();
  const auto level = EnumerateLevel(bi, 1);
  REQUIRE(level.size() == 5);
  for (int q = 0; q < 5; ++q) {
    CHECK(level[q].letters == std::vector<int>{q + 1});
    CHECK(level[q].carrier == bi.tau()[q]);
    CHECK(level[q].shift == bi.shifts()[q]);
  }
}

TEST_CASE("left multiplication base cases") {
  const auto bi = ReferenceIsometry();
  const auto w3 = LeftMultiply(bi, 3, EmptyWord(bi));
  CHECK(w3.carrier == bi.tau()[2]);
  CHECK(w3.shift == bi.shifts()[2]);

  // Zero products at level 2 exist and are values, not errors.
  int zeros = 0;
  for (int p = 1; p <= 5; ++p) {
    for (int q = 1; q <= 5; ++q) {
      const auto w = LeftMultiply(bi, p, LeftMultiply(bi, q, EmptyWord(bi)));
      if (w.is_zero()) {
        ++zeros;
        CHECK(w.measure().sign() == 0);
        CHECK(LeftMultiply(bi, 1, w).is_zero());
      }
    }
  }
  CHECK(zeros > 0);
  CHECK(zeros <= 20);
}

TEST_CASE("levels partition s with bounded shifts") {
  const auto bi = ReferenceIsometry();
  for (int n = 1; n <= 10; ++n) {
    const auto level = EnumerateLevel(bi, n);
    Scalar total(0);
    for (size_t i = 0; i < level.size(); ++i) {
      CHECK(!level[i].is_zero());
      CHECK(level[i].length() == n);
      CHECK(level[i].shift < bi.m());
      CHECK(-bi.m() < level[i].shift);
      if (i > 0) {
        CHECK(level[i - 1].carrier.hi() == level[i].carrier.lo());
      }
      total += level[i].measure();
    }
    CHECK(total == bi.m());
    if (n == 2) CHECK(level.size() <= 25);
  }
  CHECK_THROWS_AS(EnumerateLevel(bi, 17), ResourceError);
}

TEST_CASE("level two matches the street pair measures") {
  const auto bi = ReferenceIsometry();
  // Summing level-1 carriers by street pair reproduces p_{alpha beta}.
  std::array<std::array<Scalar, 3>, 3> sums;
  for (auto& row : sums) row.fill(Scalar(0));
  for (int q = 0; q < 5; ++q) {
    const auto [alpha, beta] = bi.street_pairs()[q];
    sums[transition::StreetSlot(alpha)][transition::StreetSlot(beta)] +=
        bi.tau()[q].measure();
  }
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      CHECK(sums[i][j] == bi.pair_measures()[i][j]);
    }
  }
}

TEST_CASE("associativity on random triples") {
  const auto bi = ReferenceIsometry();
  std::mt19937_64 rng(9301);
  std::uniform_int_distribution<int> len(1, 4);
  for (int i = 0; i < 1000; ++i) {
    const auto w1 = RandomWord(bi, rng, len(rng));
    const auto w2 = RandomWord(bi, rng, len(rng));
    const auto w3 = RandomWord(bi, rng, len(rng));
    const auto left = Product(bi, Product(bi, w1, w2), w3);
    const auto right = Product(bi, w1, Product(bi, w2, w3));
    CHECK(left.carrier == right.carrier);
    CHECK(left.shift == right.shift);
    CHECK(left.letters == right.letters);
  }
}

TEST_CASE("coding windows are nonzero words holding the orbit point") {
  const auto bi = ReferenceIsometry();
  CHECK(CodeTrajectory(bi, Q(1, 7), 0).empty());
  CHECK_THROWS_AS(CodeTrajectory(bi, Q(0), 3), CutPointError);

  std::mt19937_64 rng(9302);
  std::uniform_int_distribution<long> d(1, 9999);
  for (int trial = 0; trial < 20; ++trial) {
    Scalar x0 = bi.m() * Q(d(rng), 10000);
    std::vector<int> code;
    try {
      code = CodeTrajectory(bi, x0, 60);
    } catch (const CutPointError&) {
      continue;
    }
    Scalar x = x0;
    for (size_t start = 0; start < code.size(); ++start) {
      for (size_t len = 1; len <= 10 && start + len <= code.size(); ++len) {
        const std::vector<int> window(code.begin() + start,
                                      code.begin() + start + len);
        const auto w = WordFromItinerary(bi, window);
        CHECK(!w.is_zero());
        CHECK(w.carrier.Contains(x));
      }
      x += bi.shifts()[code[start] - 1];
    }
  }
}

TEST_CASE("cylinder measures match sampled orbit codings") {
  const auto bi = ReferenceIsometry();
  const auto words = EnumerateLevel(bi, 3);
  std::mt19937_64 rng(9303);
  std::uniform_int_distribution<long> d(1, 99999);
  const int samples = 10000;
  std::vector<int> hits(words.size(), 0);
  for (int i = 0; i < samples; ++i) {
    const Scalar x0 = bi.m() * Q(d(rng), 100000);
    std::vector<int> code;
    try {
      code = CodeTrajectory(bi, x0, 3);
    } catch (const CutPointError&) {
      continue;
    }
    const auto w = WordFromItinerary(bi, code);
    for (size_t k = 0; k < words.size(); ++k) {
      if (words[k].letters == w.letters) {
        ++hits[k];
        break;
      }
    }
  }
  for (size_t k = 0; k < words.size(); ++k) {
    const double p = (words[k].measure() / bi.m()).ToDouble();
    const double sigma = std::sqrt(p * (1 - p) * samples);
    CHECK(std::abs(hits[k] - p * samples) <= 3 * sigma + 1.0);
  }
}

TEST_CASE("closed curve verdicts follow the sign rule") {
  const auto bi = ReferenceIsometry();
  SemigroupWord w = EmptyWord(bi);
  w.shift = Q(-1, 10);
  w.letters = {1};
  const auto pos = ClosedCurveVerdict(w);
  CHECK(pos.sign == CurveSign::kPositiveClosed);
  CHECK(pos.transversal_measure == Q(1, 10));

  w.shift = Q(1, 10);
  CHECK(ClosedCurveVerdict(w).sign == CurveSign::kNegativeClosed);

  w.shift = Q(0);
  CHECK_THROWS_AS(ClosedCurveVerdict(w), NonGenericityError);

  // Exactness: no nonzero word up to level 6 has zero shift here.
  for (int n = 1; n <= 6; ++n) {
    for (const auto& word : EnumerateLevel(bi, n)) {
      CHECK(word.shift.sign() != 0);
    }
  }
}

TEST_SUITE_END();

}  // namespace
}  // namespace streetflow
