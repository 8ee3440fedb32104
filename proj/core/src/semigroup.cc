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

#include "streetflow/semigroup.h"

namespace streetflow {
namespace semigroup {
namespace {

void CheckLetter(int q) {
  if (q < 1 || q > 5) throw ValidationError("generator index must be in 1..5");
}

}  // namespace

SemigroupWord EmptyWord(const transition::BrokenIsometry& bi) {
  return SemigroupWord{{}, Interval(Scalar(0), bi.m()), Scalar(0)};
}

SemigroupWord LeftMultiply(const transition::BrokenIsometry& bi, int q,
                           const SemigroupWord& w) {
  CheckLetter(q);
  SemigroupWord out;
  out.letters.reserve(w.letters.size() + 1);
  out.letters.push_back(q);
  out.letters.insert(out.letters.end(), w.letters.begin(), w.letters.end());
  out.shift = bi.shifts()[q - 1] + w.shift;
  if (w.is_zero()) {
    out.carrier = w.carrier;
    return out;
  }
  const Interval ahead = w.carrier + w.shift;  // i_sigma^N of the carrier
  out.carrier = ahead.Intersect(bi.tau()[q - 1]) - w.shift;
  return out;
}

SemigroupWord Product(const transition::BrokenIsometry& /*bi*/,
                      const SemigroupWord& w1, const SemigroupWord& w2) {
  SemigroupWord out;
  out.letters = w1.letters;
  out.letters.insert(out.letters.end(), w2.letters.begin(), w2.letters.end());
  out.shift = w1.shift + w2.shift;
  if (w1.is_zero() || w2.is_zero()) {
    out.carrier = Interval(Scalar(0), Scalar(0));
    return out;
  }
  const Interval ahead = w2.carrier + w2.shift;
  out.carrier = ahead.Intersect(w1.carrier) - w2.shift;
  return out;
}

std::vector<SemigroupWord> EnumerateLevel(const transition::BrokenIsometry& bi,
                                          int n, int max_depth) {
  if (n < 1) throw ValidationError("level must be >= 1");
  if (n > max_depth) {
    throw ResourceError("word level " + std::to_string(n) +
                        " above the depth bound " + std::to_string(max_depth));
  }
  // Depth-first refinement: the five children of a word split its carrier
  // left to right, so an in-order walk emits level-n carriers already
  // ordered.  Zero branches are pruned; nothing like 5^n is ever built.
  std::vector<SemigroupWord> out;
  std::vector<SemigroupWord> stack;
  stack.push_back(EmptyWord(bi));
  while (!stack.empty()) {
    SemigroupWord w = std::move(stack.back());
    stack.pop_back();
    if (w.length() == n) {
      out.push_back(std::move(w));
      continue;
    }
    // Children in reverse carrier order: the stack pops them left first.
    const Interval ahead = w.carrier + w.shift;
    for (int q = 5; q >= 1; --q) {
      const Interval piece = ahead.Intersect(bi.tau()[q - 1]);
      if (piece.empty()) continue;
      SemigroupWord child;
      child.letters.reserve(w.letters.size() + 1);
      child.letters.push_back(q);
      child.letters.insert(child.letters.end(), w.letters.begin(),
                           w.letters.end());
      child.carrier = piece - w.shift;
      child.shift = bi.shifts()[q - 1] + w.shift;
      stack.push_back(std::move(child));
    }
  }

  Scalar total(0);
  for (size_t i = 0; i < out.size(); ++i) {
    total += out[i].measure();
    if (i > 0 && !(out[i - 1].carrier.hi() == out[i].carrier.lo())) {
      throw InternalError("level carriers are not contiguous");
    }
  }
  if (total != bi.m()) throw InternalError("level carriers do not sum to m");
  return out;
}

CurveVerdict ClosedCurveVerdict(const SemigroupWord& w) {
  if (w.is_zero()) throw ValidationError("verdict needs a nonzero word");
  const int s = w.shift.sign();
  if (s == 0) {
    throw NonGenericityError("nonzero word with zero shift function");
  }
  return CurveVerdict{s < 0 ? CurveSign::kPositiveClosed
                            : CurveSign::kNegativeClosed,
                      -w.shift};
}

std::vector<int> CodeTrajectory(const transition::BrokenIsometry& bi,
                                const Scalar& x0, int n) {
  if (n < 0) throw ValidationError("step count must be >= 0");
  std::vector<int> code;
  code.reserve(n);
  Scalar x = x0;
  for (int step = 0; step < n; ++step) {
    int piece;
    try {
      piece = bi.PieceAt(x);
    } catch (const CutPointError&) {
      throw CutPointError("orbit hit a cut point", step);
    }
    code.push_back(piece);
    x += bi.shifts()[piece - 1];
  }
  return code;
}

SemigroupWord WordFromItinerary(const transition::BrokenIsometry& bi,
                                const std::vector<int>& window) {
  SemigroupWord w = EmptyWord(bi);
  for (int q : window) w = LeftMultiply(bi, q, w);
  return w;
}

}  // namespace semigroup
}  // namespace streetflow
