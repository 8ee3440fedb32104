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

#include "streetflow/streets.h"

namespace streetflow {
namespace streets {
namespace {

// One step bound for the mediant walk; reaching it means the measures are so
// extreme that the model is out of its intended desk range.
constexpr int kMaxWalkSteps = 100000;

void CheckCandidate(const Scalar& gap, const Scalar& m) {
  if (gap.sign() == 0) {
    throw NonGenericityError("candidate pair has measure exactly 0");
  }
  if (gap == m || gap == -m) {
    throw NonGenericityError("candidate pair has measure exactly m");
  }
}

}  // namespace

// Walks the Stern-Brocot tree of the ratio |a|/|b|.  P tracks the lower
// approximants (gap = u|a| - v|b| > 0, decreasing), Q the upper ones
// (gap < 0, increasing); each new vector is the sum of the current pair, so
// flow costs are strictly increasing along the walk and the first approximant
// landing inside (0, m) (resp. (-m, 0)) is the cost-minimal qualifying pair.
// The brute-force check of this minimality lives in the test suite.
MinimalPairs FindMinimalPairs(const Scalar& a, const Scalar& b,
                              const Scalar& m) {
  if (a.sign() <= 0 || b.sign() <= 0 || m.sign() <= 0 || !(m < a + b)) {
    throw ValidationError("minimal pairs need a, b, m > 0 and m < a + b");
  }
  LatticeVector p{1, 0}, q{0, 1};
  Scalar gap_p = a;        // u a - v b for P
  Scalar gap_q = -b;       // u a - v b for Q (negative)
  bool have_ua = false, have_by = false;
  MinimalPairs out;

  CheckCandidate(gap_p, m);
  CheckCandidate(gap_q, m);
  if (gap_p < m) {
    out.ua = p;
    have_ua = true;
  }
  if (-gap_q < m) {
    out.by = q;
    have_by = true;
  }

  for (int step = 0; !(have_ua && have_by); ++step) {
    if (step >= kMaxWalkSteps) {
      throw ResourceError("minimal-pair walk exceeded step bound");
    }
    const LatticeVector s{p.p + q.p, p.q + q.q};
    const Scalar gap_s = gap_p + gap_q;
    CheckCandidate(gap_s, m);
    if (gap_s.sign() > 0) {
      p = s;
      gap_p = gap_s;
      if (!have_ua && gap_p < m) {
        out.ua = p;
        have_ua = true;
      }
    } else {
      q = s;
      gap_q = gap_s;
      if (!have_by && -gap_q < m) {
        out.by = q;
        have_by = true;
      }
    }
  }
  return out;
}

Interval StreetTriple::Carrier(int street) const {
  switch (street) {
    case 1:
      return Interval(Scalar(0), w1);
    case 0:
      return Interval(w1, w1 + w0);
    case 2:
      return Interval(w1 + w0, m());
    default:
      throw ValidationError("street index must be 1, 0 or 2");
  }
}

int StreetTriple::StreetAt(const Scalar& x) const {
  if (x.sign() < 0 || x >= m()) {
    throw ValidationError("point outside [0, m)");
  }
  const Scalar c1 = w1;
  const Scalar c2 = w1 + w0;
  if (x.sign() == 0 || x == c1 || x == c2) {
    throw CutPointError("point is a street cut", 0);
  }
  if (x < c1) return 1;
  if (x < c2) return 0;
  return 2;
}

Scalar StreetTriple::Shift(int street) const {
  const LatticeVector h = street == 1 ? h1 : street == 2 ? h2 : h0;
  return TransversalMeasure(h, a, b);
}

StreetTriple ComputeStreetTriple(const FoliationSpec& spec, int plane) {
  RequireValidSpec(spec);
  const Scalar& a = spec.a(plane);
  const Scalar& b = spec.b(plane);
  const Scalar& m = spec.m;

  const MinimalPairs pairs = FindMinimalPairs(a, b, m);
  const Scalar mu1 = TransversalMeasure(pairs.ua, a, b);         // u a - v b
  const Scalar mu2_abs = -TransversalMeasure(pairs.by, a, b);    // y b - w a

  StreetTriple t;
  t.plane = plane;
  t.a = a;
  t.b = b;
  t.w0 = mu1 + mu2_abs - m;
  t.w1 = m - mu1;
  t.w2 = m - mu2_abs;
  t.h1 = pairs.ua;
  t.h2 = pairs.by;
  t.h0 = t.h1 + t.h2;
  t.ua_pair = pairs.ua;
  t.by_pair = pairs.by;

  if (t.w0.sign() <= 0 || t.w1.sign() <= 0 || t.w2.sign() <= 0) {
    // The two short-street measures always exceed m together; a zero width
    // is an exact tie, a negative one is a bug.
    if (t.w0.sign() == 0 || t.w1.sign() == 0 || t.w2.sign() == 0) {
      throw NonGenericityError("degenerate street of zero width");
    }
    throw InternalError("negative street width");
  }
  return t;
}

StreetTriple MakeTripleFromWidths(int plane, const Scalar& w1,
                                  const Scalar& w0, const Scalar& w2,
                                  const Scalar& a, const Scalar& b) {
  if (w0.sign() <= 0 || w1.sign() <= 0 || w2.sign() <= 0) {
    throw ValidationError("street widths must be positive");
  }
  StreetTriple t;
  t.plane = plane;
  t.a = a;
  t.b = b;
  t.w0 = w0;
  t.w1 = w1;
  t.w2 = w2;
  t.h1 = {1, 0};
  t.h2 = {0, 1};
  t.h0 = {1, 1};
  t.ua_pair = t.h1;
  t.by_pair = t.h2;
  return t;
}

MBasis MBasisHomology(const StreetTriple& t) {
  MBasis mb;
  mb.a_star = t.ua_pair;
  mb.b_star = t.by_pair;
  mb.det = t.ua_pair.p * t.by_pair.q - t.ua_pair.q * t.by_pair.p;
  return mb;
}

}  // namespace streets
}  // namespace streetflow
