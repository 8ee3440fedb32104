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

#ifndef STREETFLOW_STREETS_H_
#define STREETFLOW_STREETS_H_

#include <array>
#include <utility>

#include "streetflow/foliation_spec.h"
#include "streetflow/interval.h"
#include "streetflow/lattice.h"

namespace streetflow {
namespace streets {

// The minimal nontrivial nonnegative pairs of one plane:
//   (u > 0, v >= 0) with 0 < u|a| - v|b| < m, and
//   (w >= 0, y > 0) with 0 < y|b| - w|a| < m,
// each minimizing the flow cost u|a| + v|b| (resp. w|a| + y|b|) among all
// qualifying pairs.  They are the lattice shifts of the two translates of s
// reached first by the flow, hence the heights of the two short streets.
struct MinimalPairs {
  LatticeVector ua;  // (u, v)
  LatticeVector by;  // (w, y)
};

MinimalPairs FindMinimalPairs(const Scalar& a, const Scalar& b,
                              const Scalar& m);

// The three unextendable strips of trajectories over the segment s in one
// plane.  Carrier order along s is street 1, street 0, street 2 from left to
// right; the widths satisfy w1 + w0 + w2 = m and the heights h1 + h2 = h0.
struct StreetTriple {
  int plane = 1;
  Scalar w0, w1, w2;
  LatticeVector h0, h1, h2;
  LatticeVector ua_pair;  // (u, v)
  LatticeVector by_pair;  // (w, y)

  // Measures of the plane's basis cycles (carried along for bookkeeping).
  Scalar a, b;

  Scalar m() const { return w0 + w1 + w2; }

  // Carriers [0, w1), [w1, w1+w0), [w1+w0, m) of streets 1, 0, 2.
  Interval Carrier(int street) const;
  // Which street's carrier contains x; throws CutPointError on a boundary.
  int StreetAt(const Scalar& x) const;
  // The shift x -> x + mu(h) effected by passing the street.
  Scalar Shift(int street) const;
};

// Computes the street triple of one plane of a valid spec:
//   w0 = (ua - vb) + (yb - wa) - m,  w1 = m - (ua - vb),  w2 = m - (yb - wa),
//   h1 = (u, v),  h2 = (w, y),  h0 = h1 + h2.
StreetTriple ComputeStreetTriple(const FoliationSpec& spec, int plane);

// Assembles a triple directly from widths; heights are taken as given and
// not derived from measures.  Intended for transition-layer tests.
StreetTriple MakeTripleFromWidths(int plane, const Scalar& w1,
                                  const Scalar& w0, const Scalar& w2,
                                  const Scalar& a, const Scalar& b);

// The m-dependent homology basis of the plane and its change-of-basis data:
// [a*] = (u, v), [b*] = (w, y), det ((u, w), (v, y)).
struct MBasis {
  LatticeVector a_star;
  LatticeVector b_star;
  std::int64_t det = 0;
};

MBasis MBasisHomology(const StreetTriple& t);

}  // namespace streets
}  // namespace streetflow

#endif  // STREETFLOW_STREETS_H_
