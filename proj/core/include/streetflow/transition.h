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

#ifndef STREETFLOW_TRANSITION_H_
#define STREETFLOW_TRANSITION_H_

#include <array>
#include <string>
#include <vector>

#include "streetflow/interval.h"
#include "streetflow/streets.h"

namespace streetflow {
namespace transition {

// The three-block exchange of one plane: the street blocks [0,w1), [w1,w1+w0)
// and [w1+w0, m) land in the order 2, 0, 1 with orientation and widths
// preserved (the left street ends in the extreme right part of the image and
// the right street in the extreme left part).  This is the passage through
// one torus plane expressed in the measure coordinate of s.
class ThreePieceExchange {
 public:
  ThreePieceExchange(const Scalar& w1, const Scalar& w0, const Scalar& w2);

  static ThreePieceExchange ForTriple(const streets::StreetTriple& t) {
    return ThreePieceExchange(t.w1, t.w0, t.w2);
  }

  const Scalar& m() const { return m_; }
  // Interior domain cut points (the points 1 and 2 of the row 0,1,2,3).
  const Scalar& cut1() const { return c1_; }
  const Scalar& cut2() const { return c2_; }
  // Interior image cut points: 3* = w2 and 0* = m - w1.
  const Scalar& three_star() const { return d1_; }
  const Scalar& zero_star() const { return d2_; }

  // Street index (1, 0 or 2) of the block containing x; cut points throw.
  int BlockAt(const Scalar& x) const;
  // Street index of the image block containing y.
  int ImageBlockAt(const Scalar& y) const;

  Scalar Apply(const Scalar& x) const;
  Scalar ApplyInverse(const Scalar& y) const;
  // Per-block shift (equals the transversal measure of the street height).
  const Scalar& Shift(int street) const;

 private:
  Scalar m_, c1_, c2_;  // domain cuts
  Scalar d1_, d2_;      // image cuts
  Scalar s1_, s0_, s2_; // block shifts
};

enum class TopType { kI = 1, kII, kIII, kIV, kV, kVI };

std::string TopTypeName(TopType t);

// One labeled point of the composed picture, e.g. {"1'", value}.
struct LabeledPoint {
  std::string label;
  Scalar value;
};

// The broken isometry i_sigma = eta21 . eta12 on s: a 5-piece interval
// exchange, classified into one of the six topological types by the
// interleaving of the plane-2 cuts {1', 2'} with the plane-1 image cuts
// {3*, 0*}.
class BrokenIsometry {
 public:
  BrokenIsometry(const streets::StreetTriple& plane1,
                 const streets::StreetTriple& plane2);

  TopType type() const { return type_; }
  const Scalar& m() const { return m_; }
  const std::array<Interval, 5>& tau() const { return tau_; }
  const std::array<Scalar, 5>& shifts() const { return shifts_; }
  // One-line destination-slot permutation: the image of tau_q is the
  // sigma(q)-th interval of the image order, counted from the left.
  const std::array<int, 5>& sigma() const { return sigma_; }
  // (alpha, beta): tau_q passes street alpha of plane 1 then beta of plane 2.
  const std::array<std::pair<int, int>, 5>& street_pairs() const {
    return pairs_;
  }
  // The ordered labeled points 0=2*, ..., 3=1* of the intermediate segment.
  const std::vector<LabeledPoint>& cut_points() const { return points_; }

  // p_{alpha beta} in street order (1, 0, 2) x (1, 0, 2); exactly five
  // entries are nonzero.
  const std::array<std::array<Scalar, 3>, 3>& pair_measures() const {
    return measures_;
  }

  const streets::StreetTriple& plane(int k) const {
    return k == 1 ? t1_ : t2_;
  }

  // Index in 1..5 of the piece containing x; cut points throw CutPointError.
  int PieceAt(const Scalar& x) const;
  Scalar Apply(const Scalar& x) const;

 private:
  streets::StreetTriple t1_, t2_;
  Scalar m_;
  TopType type_;
  std::array<Interval, 5> tau_;
  std::array<Scalar, 5> shifts_;
  std::array<int, 5> sigma_;
  std::array<std::pair<int, int>, 5> pairs_;
  std::vector<LabeledPoint> points_;
  std::array<std::array<Scalar, 3>, 3> measures_;
};

// Expected per-type data, straight from the type rows (with the misprints in
// the printed lists resolved by the composition itself; see the tests).
const std::array<int, 5>& ExpectedSigma(TopType t);
const std::array<std::pair<int, int>, 5>& ExpectedStreetPairs(TopType t);

// Row index of a street in the (1, 0, 2) matrix order.
inline int StreetSlot(int street) { return street == 1 ? 0 : street == 0 ? 1 : 2; }

}  // namespace transition
}  // namespace streetflow

#endif  // STREETFLOW_TRANSITION_H_
