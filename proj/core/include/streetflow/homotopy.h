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

#ifndef STREETFLOW_HOMOTOPY_H_
#define STREETFLOW_HOMOTOPY_H_

#include <array>
#include <string>

#include "streetflow/free_word.h"
#include "streetflow/semigroup.h"
#include "streetflow/transition.h"

namespace streetflow {
namespace homotopy {

// Generators of pi_1 in the m-dependent transversal canonical basis
// a*_1, b*_1, a*_2, b*_2 (the plane-2 stars are the negative-time lifts).
enum Letter : int { kA1 = 1, kB1 = 2, kA2 = 3, kB2 = 4 };

using GroupWord = FreeWord;

const std::vector<std::string>& LetterNames();  // {"a1*","b1*","a2*","b2*"}

// Integer 4-vector in the basis ([a*_1], [b*_1], [a*_2], [b*_2]).
using HomologyClass4 = std::array<std::int64_t, 4>;

HomologyClass4 Abelianize(const GroupWord& w);

inline HomologyClass4 Add(const HomologyClass4& x, const HomologyClass4& y) {
  return {x[0] + y[0], x[1] + y[1], x[2] + y[2], x[3] + y[3]};
}
inline HomologyClass4 Neg(const HomologyClass4& x) {
  return {-x[0], -x[1], -x[2], -x[3]};
}

// kappa = a*_1 b*_1 (a*_1)^-1 (b*_1)^-1, the clockwise loop around s in the
// first plane; delta = kappa^-1.
GroupWord Kappa();
GroupWord Delta();

// The two-street homotopy table phi_{alpha beta}, exactly as printed; the
// indices run over streets 1, 0, 2.
GroupWord Phi(int alpha, int beta);

// Same-plane transversal two-street passes.  Supported (src, dst) pairs:
// plane 1: (0,2) -> a*_1, (1,0) -> (b*_1)^-1, (1,2) -> (b*_1)^-1 a*_1;
// plane 2: (0,1) -> a*_2, (2,0) -> (b*_2)^-1, (2,1) -> (b*_2)^-1 a*_2.
GroupWord PsiSamePlane(int src, int dst, int plane);

// pi_1 representation of a nonzero semigroup word: each letter q maps to the
// homotopy class of its (alpha, beta) street pass, and the classes multiply
// in written order.  In the printed table the class of the pass (alpha in
// plane 1, beta in plane 2) is the entry labeled "beta alpha'": the table's
// first label selects the plane-2 half of the word and the second the
// plane-1 half, as both the entry structure and the homology bookkeeping
// force.  With reversed = true the reversed-time classes phi^-1 are used.
GroupWord Represent(const semigroup::SemigroupWord& w, transition::TopType type,
                    bool reversed = false);

// Homology class of passing one street in positive time.  Plane-1 streets
// lie in the span of e1, e2; plane-2 streets carry -e3, -e4 because the
// basis vectors [a*_2], [b*_2] are the negative-time classes.
HomologyClass4 StreetHomology(int street, int plane, bool positive_time = true);

// Equality in the genus-2 surface group with relator
// [a*_1, b*_1][a*_2, b*_2], decided by Dehn's algorithm (the relator is
// C'(1/6): pieces are single letters against length 8).
bool SurfaceEqual(const GroupWord& x, const GroupWord& y);

// Dehn reduction to the shortest representative; empty iff trivial.
GroupWord DehnReduce(GroupWord w);

}  // namespace homotopy
}  // namespace streetflow

#endif  // STREETFLOW_HOMOTOPY_H_
