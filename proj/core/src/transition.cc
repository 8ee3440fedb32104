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

#include "streetflow/transition.h"

#include <algorithm>

namespace streetflow {
namespace transition {
namespace {

struct TypeRow {
  std::array<int, 5> sigma;
  std::array<std::pair<int, int>, 5> pairs;
};

// Indexed by TopType - 1.  The sigma rows are the printed ones (type III is
// printed garbled and is stored as the composition actually produces it);
// the (alpha, beta) street pairs per tau piece follow from the common
// refinement and carry the five nonzero p_{alpha beta} positions.
const TypeRow kTypeRows[6] = {
    // I: 0=2* < 1' < 2' < 3* < 0* < 1*=3
    {{3, 2, 5, 4, 1}, {{{1, 2}, {0, 2}, {2, 1}, {2, 0}, {2, 2}}}},
    // II: 0=2* < 1' < 3* < 2' < 0* < 1*=3
    {{2, 4, 1, 5, 3}, {{{1, 2}, {0, 0}, {0, 2}, {2, 1}, {2, 0}}}},
    // III: 0=2* < 1' < 3* < 0* < 2' < 1*=3
    {{4, 1, 3, 5, 2}, {{{1, 0}, {1, 2}, {0, 0}, {2, 1}, {2, 0}}}},
    // IV: 0=2* < 3* < 1' < 2' < 0* < 1*=3
    {{2, 5, 3, 1, 4}, {{{1, 2}, {0, 1}, {0, 0}, {0, 2}, {2, 1}}}},
    // V: 0=2* < 3* < 1' < 0* < 2' < 1*=3
    {{3, 1, 5, 2, 4}, {{{1, 0}, {1, 2}, {0, 1}, {0, 0}, {2, 1}}}},
    // VI: 0=2* < 3* < 0* < 1' < 2' < 1*=3
    {{5, 2, 1, 4, 3}, {{{1, 1}, {1, 0}, {1, 2}, {0, 1}, {2, 1}}}},
};

TopType DetectType(const Scalar& one_p, const Scalar& two_p,
                   const Scalar& three_s, const Scalar& zero_s) {
  // Generic foliations never let the four comparison points collide.
  for (const Scalar* x : {&one_p, &two_p}) {
    for (const Scalar* y : {&three_s, &zero_s}) {
      if (*x == *y) {
        throw NonGenericityError("transition comparison points coincide");
      }
    }
  }
  if (two_p < three_s) return TopType::kI;
  if (one_p < three_s) return two_p < zero_s ? TopType::kII : TopType::kIII;
  if (one_p < zero_s) return two_p < zero_s ? TopType::kIV : TopType::kV;
  return TopType::kVI;
}

}  // namespace

std::string TopTypeName(TopType t) {
  static const char* names[] = {"I", "II", "III", "IV", "V", "VI"};
  return names[static_cast<int>(t) - 1];
}

const std::array<int, 5>& ExpectedSigma(TopType t) {
  return kTypeRows[static_cast<int>(t) - 1].sigma;
}

const std::array<std::pair<int, int>, 5>& ExpectedStreetPairs(TopType t) {
  return kTypeRows[static_cast<int>(t) - 1].pairs;
}

ThreePieceExchange::ThreePieceExchange(const Scalar& w1, const Scalar& w0,
                                       const Scalar& w2)
    : m_(w1 + w0 + w2),
      c1_(w1),
      c2_(w1 + w0),
      d1_(w2),
      d2_(w2 + w0),
      s1_(m_ - w1),        // [0,w1) -> [m-w1, m)
      s0_(w2 - w1),        // [w1,w1+w0) -> [w2, w2+w0)
      s2_(-(m_ - w2)) {    // [w1+w0,m) -> [0,w2)
  if (w1.sign() <= 0 || w0.sign() <= 0 || w2.sign() <= 0) {
    throw ValidationError("exchange needs positive block widths");
  }
}

int ThreePieceExchange::BlockAt(const Scalar& x) const {
  if (x.sign() < 0 || x >= m_) throw ValidationError("point outside [0, m)");
  if (x.sign() == 0 || x == c1_ || x == c2_) {
    throw CutPointError("point is a block cut", 0);
  }
  if (x < c1_) return 1;
  if (x < c2_) return 0;
  return 2;
}

int ThreePieceExchange::ImageBlockAt(const Scalar& y) const {
  if (y.sign() < 0 || y >= m_) throw ValidationError("point outside [0, m)");
  if (y.sign() == 0 || y == d1_ || y == d2_) {
    throw CutPointError("point is an image cut", 0);
  }
  if (y < d1_) return 2;
  if (y < d2_) return 0;
  return 1;
}

Scalar ThreePieceExchange::Apply(const Scalar& x) const {
  return x + Shift(BlockAt(x));
}

Scalar ThreePieceExchange::ApplyInverse(const Scalar& y) const {
  return y - Shift(ImageBlockAt(y));
}

const Scalar& ThreePieceExchange::Shift(int street) const {
  switch (street) {
    case 1:
      return s1_;
    case 0:
      return s0_;
    case 2:
      return s2_;
    default:
      throw ValidationError("street index must be 1, 0 or 2");
  }
}

BrokenIsometry::BrokenIsometry(const streets::StreetTriple& plane1,
                               const streets::StreetTriple& plane2)
    : t1_(plane1), t2_(plane2), m_(plane1.m()) {
  if (m_ != plane2.m()) {
    throw ValidationError("the two planes must share the segment measure m");
  }
  const ThreePieceExchange eta12 = ThreePieceExchange::ForTriple(t1_);
  const ThreePieceExchange eta21 = ThreePieceExchange::ForTriple(t2_);

  const Scalar one_p = eta21.cut1();     // 1'
  const Scalar two_p = eta21.cut2();     // 2'
  const Scalar three_s = eta12.three_star();
  const Scalar zero_s = eta12.zero_star();
  type_ = DetectType(one_p, two_p, three_s, zero_s);

  points_ = {{"0=2*", Scalar(0)}};
  std::vector<LabeledPoint> inner = {{"1'", one_p},
                                     {"2'", two_p},
                                     {"3*", three_s},
                                     {"0*", zero_s}};
  std::sort(inner.begin(), inner.end(),
            [](const LabeledPoint& x, const LabeledPoint& y) {
              return x.value < y.value;
            });
  points_.insert(points_.end(), inner.begin(), inner.end());
  points_.push_back({"3=1*", m_});

  // Domain cuts: the plane-1 cuts plus the pullbacks of 1', 2'.
  std::vector<Scalar> cuts = {eta12.cut1(), eta12.cut2(),
                              eta12.ApplyInverse(one_p),
                              eta12.ApplyInverse(two_p)};
  std::sort(cuts.begin(), cuts.end());
  for (size_t i = 0; i + 1 < cuts.size(); ++i) {
    if (cuts[i] == cuts[i + 1]) {
      throw NonGenericityError("coinciding domain cuts");
    }
  }
  if (cuts.front().sign() <= 0 || cuts.back() >= m_) {
    throw NonGenericityError("domain cut on the segment boundary");
  }

  std::vector<Scalar> ends = {Scalar(0)};
  ends.insert(ends.end(), cuts.begin(), cuts.end());
  ends.push_back(m_);

  for (auto& row : measures_) row.fill(Scalar(0));

  struct ImageSlot {
    Scalar lo;
    int piece;
  };
  std::vector<ImageSlot> image;
  Scalar total(0);
  for (int q = 0; q < 5; ++q) {
    tau_[q] = Interval(ends[q], ends[q + 1]);
    const Scalar sample = (tau_[q].lo() + tau_[q].hi()) / Scalar(2);
    const int alpha = eta12.BlockAt(sample);
    const Scalar mid = eta12.Apply(sample);
    const int beta = eta21.BlockAt(mid);
    const Scalar out = eta21.Apply(mid);
    shifts_[q] = out - sample;
    pairs_[q] = {alpha, beta};
    measures_[StreetSlot(alpha)][StreetSlot(beta)] += tau_[q].measure();
    image.push_back({tau_[q].lo() + shifts_[q], q});
    total += tau_[q].measure();

    if (!(shifts_[q] < m_) || !(-m_ < shifts_[q])) {
      throw InternalError("piece shift out of (-m, m)");
    }
  }
  if (total != m_) throw InternalError("tau measures do not sum to m");

  // Destination slots, plus the exact partition check of the images.
  std::sort(image.begin(), image.end(),
            [](const ImageSlot& x, const ImageSlot& y) { return x.lo < y.lo; });
  Scalar expect(0);
  for (int slot = 0; slot < 5; ++slot) {
    const int q = image[slot].piece;
    if (image[slot].lo != expect) {
      throw InternalError("image intervals do not partition [0, m)");
    }
    expect += tau_[q].measure();
    sigma_[q] = slot + 1;
  }
  if (expect != m_) throw InternalError("image intervals do not reach m");

  // The detected type must reproduce the stored rows exactly.
  if (sigma_ != ExpectedSigma(type_)) {
    throw InternalError("permutation disagrees with the type table");
  }
  if (pairs_ != ExpectedStreetPairs(type_)) {
    throw InternalError("street pairs disagree with the type table");
  }
}

int BrokenIsometry::PieceAt(const Scalar& x) const {
  if (x.sign() < 0 || x >= m_) throw ValidationError("point outside [0, m)");
  for (int q = 0; q < 5; ++q) {
    if (x == tau_[q].lo()) throw CutPointError("point is a cut of i_sigma", 0);
    if (tau_[q].Contains(x)) return q + 1;
  }
  throw InternalError("point not in any piece");
}

Scalar BrokenIsometry::Apply(const Scalar& x) const {
  return x + shifts_[PieceAt(x) - 1];
}

}  // namespace transition
}  // namespace streetflow
