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

#ifndef STREETFLOW_CURVES_H_
#define STREETFLOW_CURVES_H_

#include <cstdint>
#include <string>
#include <vector>

#include "streetflow/free_word.h"

namespace streetflow {
namespace curves {

// Classification data of a non-self-intersecting transversal closed curve on
// the punctured torus in homology class k a' + l b', gcd(k, l) = 1 with
// k > l > 0 (case I; the mirror and trivial classes are handled by the word
// functions).  The marker r in 1..k+l selects which gap of the standard form
// holds the puncture.
struct CurveClass {
  std::int64_t k = 0;
  std::int64_t l = 0;
  std::int64_t marker = 1;
};

void ValidateCurveClass(const CurveClass& c);

// One segment of the standard form, named [start, end'] by its boundary
// crossing labels; group is I, II or III per the printed lists.
struct ChainSegment {
  int index;  // subscript j of t_j
  std::int64_t start;
  std::int64_t end;  // the primed label
  int group;  // 1, 2 or 3
};

struct SegmentChain {
  std::vector<ChainSegment> segments;  // indexed t_1 .. t_{k+l}
  std::vector<int> order;              // chain order along the curve, from t_1
  bool single_cycle = false;
};

// The standard-form segments and their successor chaining (j' continues at
// j); coprime (k, l) always closes into a single cycle of length k + l.
SegmentChain ComputeSegmentChain(std::int64_t k, std::int64_t l);

// The positive word of the class, k letters 'a' and l letters 'b', one cyclic
// representative (the chain started at t_1).  Trivial classes (k or l zero,
// or |k| = |l| = 1) are returned directly; l < 0 is the mirror of (k, -l).
std::string CurveWord(std::int64_t k, std::int64_t l);

// True when two words agree up to cyclic rotation.
bool CyclicEqual(const std::string& w1, const std::string& w2);

// Crossing sequence of the straight-line representative of (k, l), computed
// by lifting to the universal cover and recording lattice-line crossings.
// Independent of the chain construction; agrees with CurveWord up to
// rotation.
std::string LineCrossingWord(std::int64_t k, std::int64_t l);

// The upper-triangle decomposition of the marked class: the product of the
// domain words kappa^c, a kappa^c, kappa^c b^-1, a kappa^c b^-1 along the
// chain, in the alphabet a = a, b = b^-1 with kappa = b^-1 a b a^-1.
// Letters: 1 = a, 2 = b.
FreeWord UpperTriangle(const CurveClass& c);

// 2x2 unimodular matrix with nonnegative entries: a' -> k a' + l b',
// b' -> p a' + q b'.
struct UniMatrix {
  std::int64_t k = 1, l = 0, p = 0, q = 1;

  std::int64_t Det() const { return k * q - l * p; }
  std::int64_t EntrySum() const { return k + l + p + q; }
  bool IsIdentity() const { return k == 1 && l == 0 && p == 0 && q == 1; }
  UniMatrix operator*(const UniMatrix& o) const {
    return {k * o.k + p * o.l, l * o.k + q * o.l, k * o.p + p * o.q,
            l * o.p + q * o.q};
  }
  bool operator==(const UniMatrix& o) const {
    return k == o.k && l == o.l && p == o.p && q == o.q;
  }
};

inline UniMatrix T1() { return {1, 1, 0, 1}; }
inline UniMatrix T2() { return {1, 0, 1, 1}; }

// Unique factorization into T1, T2 by Euclidean row peeling (1 stands for
// T1, 2 for T2, in product order).  Identity factors as the empty word.
std::vector<int> MatrixFactor(UniMatrix t);

// A pair of positive words over a' = 1, b' = 2.
struct BasisPair {
  FreeWord A, B;
  bool operator==(const BasisPair& o) const { return A == o.A && B == o.B; }
};

// Canonical lift T^ of the matrix to a positive automorphism of F_2:
// T1^: a' -> a'b', b' -> b'; T2^: a' -> a', b' -> b'a'.  Lifts preserve the
// commutator a'b'a'^-1 b'^-1 exactly.
BasisPair Lift(const UniMatrix& t);

// Iterates the head rotation (A = xA~, B = xB~) -> (A~x, B~x) while both
// words start with the same letter; returns the irreducible pair and the
// step count.  Pairs that are powers of a common word would never stop and
// throw ValidationError instead.
std::pair<BasisPair, int> ReducePair(BasisPair p);

// The simultaneous tail rotations of Lift(t): rotating the common last
// letter to the front while the last letters agree enumerates the positive
// automorphisms over t; their number is k + l + p + q - 2.
std::vector<BasisPair> FiberEnumerate(const UniMatrix& t);

}  // namespace curves
}  // namespace streetflow

#endif  // STREETFLOW_CURVES_H_
