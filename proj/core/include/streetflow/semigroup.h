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

#ifndef STREETFLOW_SEMIGROUP_H_
#define STREETFLOW_SEMIGROUP_H_

#include <vector>

#include "streetflow/interval.h"
#include "streetflow/transition.h"

namespace streetflow {
namespace semigroup {

// A word R = R_{j1} ... R_{jN} over the five generators of S_{sigma,tau},
// together with its carrier interval tau_R and shift value r(R).
//
// Letters are stored in written order, which is most-recent first: the
// letter at index 0 is the piece reached last along the orbit, the letter at
// index N-1 is the piece the carrier sits in now.  Left multiplication by a
// generator therefore prepends a letter and costs one interval pullback:
// since i_sigma^N acts on tau_R as the translation by r(R),
//
//   tau_{R_p R} = ((tau_R + r(R)) ∩ tau_p) - r(R).
//
// A word is zero iff its carrier is empty; zero is a value, not an error.
struct SemigroupWord {
  std::vector<int> letters;  // values in 1..5, most recent first
  Interval carrier;
  Scalar shift;

  bool is_zero() const { return carrier.empty(); }
  int length() const { return static_cast<int>(letters.size()); }
  Scalar measure() const { return carrier.measure(); }
};

// The empty word: carrier [0, m), shift 0.
SemigroupWord EmptyWord(const transition::BrokenIsometry& bi);

// R_q * w.
SemigroupWord LeftMultiply(const transition::BrokenIsometry& bi, int q,
                           const SemigroupWord& w);

// w1 * w2 (all of w1 more recent than w2).
SemigroupWord Product(const transition::BrokenIsometry& bi,
                      const SemigroupWord& w1, const SemigroupWord& w2);

// All nonzero words of length n, ordered left to right by carrier position.
// Their carriers partition [0, m) exactly.  n above max_depth throws
// ResourceError.
std::vector<SemigroupWord> EnumerateLevel(const transition::BrokenIsometry& bi,
                                          int n, int max_depth = 16);

enum class CurveSign { kPositiveClosed, kNegativeClosed };

struct CurveVerdict {
  CurveSign sign;
  // Transversal measure -r(R) of the closed transversal curve the piece
  // defines: positive for positive-closed pieces.
  Scalar transversal_measure;
};

// Negative pieces close to positive transversal curves and vice versa; a
// zero shift cannot happen generically and throws NonGenericityError.
CurveVerdict ClosedCurveVerdict(const SemigroupWord& w);

// Itinerary of x0 under i_sigma for n steps, in time order (the step-t entry
// is the piece containing the orbit point at time t).  Hitting a cut point
// throws CutPointError carrying the step index.
std::vector<int> CodeTrajectory(const transition::BrokenIsometry& bi,
                                const Scalar& x0, int n);

// The word spelled by an itinerary window (time order in, written order
// out: the last-visited piece becomes the leading letter).
SemigroupWord WordFromItinerary(const transition::BrokenIsometry& bi,
                                const std::vector<int>& window);

}  // namespace semigroup
}  // namespace streetflow

#endif  // STREETFLOW_SEMIGROUP_H_
