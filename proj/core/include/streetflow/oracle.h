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

#ifndef STREETFLOW_ORACLE_H_
#define STREETFLOW_ORACLE_H_

#include <vector>

#include "streetflow/foliation_spec.h"
#include "streetflow/lattice.h"
#include "streetflow/streets.h"

namespace streetflow {
namespace oracle {

// Exact planar model of one torus plane: the vertical flow on the plane of
// the lattice generated by e_a and e_b against the periodic family of
// translates of the slit s.
//
// Canonical placement.  The slit is parametrized by its measure coordinate
// t in [0, m), oriented so that the three streets come out in carrier order
// 1, 0, 2 from left to right.  The translate by p e_a + q e_b then covers
// the coordinate range [-mu, m - mu) where mu = p|a| - q|b| is the
// transversal measure of the shift, and its flight height is taken as the
// flow cost p|a| + q|b|.  Any realization with the same measures yields the
// same first-hit combinatorics; this one keeps every comparison inside the
// scalar field.
struct PlanarRealization {
  Scalar a;  // measure of cycle a (positive transversal curve)
  Scalar b;  // measure of cycle b (b^-1 is the positive one)
  Scalar m;  // slit measure

  static PlanarRealization FromMeasures(const Scalar& a, const Scalar& b,
                                        const Scalar& m);
  static PlanarRealization FromSpec(const FoliationSpec& spec, int plane);
};

struct ReturnHit {
  Scalar landing;       // measure coordinate inside the hit translate
  LatticeVector shift;  // lattice displacement of that translate
};

// First intersection of the flow ray from slit point x with the translate
// family.  direction +1 follows the flow, -1 reverses it.  Throws
// NonGenericityError when the ray meets a translate endpoint exactly.
ReturnHit FirstReturn(const PlanarRealization& pr, const Scalar& x,
                      int direction = +1);

// Partitions the slit by first-hit displacement and asserts exactly three
// parts with h1 + h2 = h0.  The result can be compared field-by-field with
// streets::ComputeStreetTriple.
streets::StreetTriple EmpiricalStreets(const PlanarRealization& pr, int plane);

// Saddle passage-time model for one street.  Only the logarithmic
// singularities at the street edges are specified by the theory; the exact
// profile would need numerical integration of a concrete realization, so
// this is an explicit model, labeled as such in output:
//
//   t(x) = -cR ln(x/w) - cL ln(1 - x/w) + t0
//
// with the edge constants assigned per street role:
//   street 0: (cL, cR) = (c1, c2); street 1: (c1/2, c2/2);
//   street 2: (c2/2, c1/2).
struct TimeProfile {
  Scalar width;
  double c1 = 1.0;  // left-side saddle constant
  double c2 = 1.0;  // right-side saddle constant
  int street_role = 0;  // 0, 1 or 2
  double t0 = 0.0;

  double near_zero_constant() const;
  double near_width_constant() const;
};

double TimeProfileEval(const TimeProfile& tp, double x);

}  // namespace oracle
}  // namespace streetflow

#endif  // STREETFLOW_ORACLE_H_
