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

#include "streetflow/curves.h"

#include <algorithm>
#include <numeric>

namespace streetflow {
namespace curves {
namespace {

std::int64_t Gcd(std::int64_t x, std::int64_t y) {
  return std::gcd(std::abs(x), std::abs(y));
}

void RotateHeadToTail(FreeWord& w) {
  std::vector<int> letters = w.letters();
  std::rotate(letters.begin(), letters.begin() + 1, letters.end());
  w = FreeWord::FromLetters(letters);
}

void RotateTailToHead(FreeWord& w) {
  std::vector<int> letters = w.letters();
  std::rotate(letters.begin(), letters.end() - 1, letters.end());
  w = FreeWord::FromLetters(letters);
}

FreeWord SubstituteHat(int generator, const FreeWord& w) {
  // T1^: a' -> a'b', b' -> b';  T2^: a' -> a', b' -> b'a'.
  FreeWord out;
  for (int letter : w.letters()) {
    if (letter == 1) {
      out.Append(1);
      if (generator == 1) out.Append(2);
    } else if (letter == 2) {
      if (generator == 2) {
        out.Append(2);
        out.Append(1);
      } else {
        out.Append(2);
      }
    } else {
      throw ValidationError("lift substitution expects a positive word");
    }
  }
  return out;
}

}  // namespace

void ValidateCurveClass(const CurveClass& c) {
  if (!(c.k > c.l && c.l > 0)) {
    throw ValidationError("curve class needs k > l > 0");
  }
  if (Gcd(c.k, c.l) != 1) {
    throw ValidationError("curve class needs coprime (k, l)");
  }
  if (c.marker < 1 || c.marker > c.k + c.l) {
    throw ValidationError("marker must lie in 1..k+l");
  }
}

SegmentChain ComputeSegmentChain(std::int64_t k, std::int64_t l) {
  if (!(k > l && l > 0)) throw ValidationError("segment chain needs k > l > 0");
  if (Gcd(k, l) != 1) {
    throw ValidationError("(k, l) share a divisor; the chain would split");
  }
  const std::int64_t n = k + l;
  SegmentChain chain;
  chain.segments.reserve(n);
  for (std::int64_t j = 1; j <= n; ++j) {
    ChainSegment s;
    s.index = static_cast<int>(j);
    s.start = j;
    if (j <= l) {
      s.end = k + j;
      s.group = 1;
    } else if (j <= k) {
      s.end = j - l;
      s.group = 2;
    } else {
      s.end = j - l;
      s.group = 3;
    }
    chain.segments.push_back(s);
  }
  // The successor of t_j starts where j's primed end sits, so the chain is
  // the orbit of j -> j + k modulo k + l; coprimality makes it one cycle.
  chain.order.reserve(n);
  std::int64_t at = 1;
  for (std::int64_t i = 0; i < n; ++i) {
    chain.order.push_back(static_cast<int>(at));
    at = chain.segments[at - 1].end;
  }
  chain.single_cycle = at == 1;
  std::vector<int> sorted = chain.order;
  std::sort(sorted.begin(), sorted.end());
  for (std::int64_t i = 0; i < n; ++i) {
    if (sorted[i] != i + 1) chain.single_cycle = false;
  }
  return chain;
}

std::string CurveWord(std::int64_t k, std::int64_t l) {
  if (l < 0) return CurveWord(k, -l);  // mirror of case I
  if (k < 0) return CurveWord(-k, l);
  if (k == 0 && l == 0) throw ValidationError("class (0, 0) has no curve");
  if (Gcd(k == 0 ? l : k, l) != 1 && k != 0 && l != 0) {
    throw ValidationError("(k, l) must be coprime");
  }
  if (l == 0) {
    if (k != 1) throw ValidationError("(k, 0) is embedded only for k = 1");
    return "a";
  }
  if (k == 0) {
    if (l != 1) throw ValidationError("(0, l) is embedded only for l = 1");
    return "b";
  }
  if (k == l) {
    if (k != 1) throw ValidationError("(k, k) is divisible for k > 1");
    return "ab";
  }
  if (l > k) {
    std::string swapped = CurveWord(l, k);
    for (char& c : swapped) c = c == 'a' ? 'b' : 'a';
    return swapped;
  }
  const SegmentChain chain = ComputeSegmentChain(k, l);
  std::string word;
  word.reserve(chain.order.size());
  for (int j : chain.order) word += j <= l ? 'b' : 'a';
  return word;
}

bool CyclicEqual(const std::string& w1, const std::string& w2) {
  if (w1.size() != w2.size()) return false;
  if (w1.empty()) return true;
  const std::string doubled = w1 + w1;
  return doubled.find(w2) != std::string::npos;
}

std::string LineCrossingWord(std::int64_t k, std::int64_t l) {
  if (k <= 0 || l <= 0 || Gcd(k, l) != 1) {
    throw ValidationError("line crossing word needs coprime k, l > 0");
  }
  // Walk the segment from (e, e') to (k + e, l + e') with a small generic
  // offset and merge the vertical crossings x = i (letter a) with the
  // horizontal ones y = j (letter b) by exact rational parameters:
  // a-crossing i at t = (i - e)/k, b-crossing j at t = (j - e')/l with
  // e = 1/(7(k+l)), e' = 2/(7(k+l)).
  const std::int64_t big = 7 * (k + l);
  // Compare (i*big - 1)/(k*big) with (j*big - 2)/(l*big): cross-multiply.
  std::string word;
  std::int64_t i = 1, j = 1;
  while (i <= k || j <= l) {
    if (j > l) {
      word += 'a';
      ++i;
      continue;
    }
    if (i > k) {
      word += 'b';
      ++j;
      continue;
    }
    const std::int64_t lhs = (i * big - 1) * l;
    const std::int64_t rhs = (j * big - 2) * k;
    if (lhs == rhs) throw InternalError("offsets failed to break a tie");
    if (lhs < rhs) {
      word += 'a';
      ++i;
    } else {
      word += 'b';
      ++j;
    }
  }
  return word;
}

FreeWord UpperTriangle(const CurveClass& c) {
  ValidateCurveClass(c);
  const std::int64_t k = c.k, l = c.l, n = k + l - 1;

  // Parallelogram presentation: starts and ends carry a primed flag, and the
  // successor of an end is the start with the same label and opposite flag.
  struct Seg {
    std::int64_t start, end;
    bool start_primed, end_primed;
    int group;
  };
  std::vector<Seg> segs(n + 1);  // 1-based
  for (std::int64_t j = 1; j <= l; ++j) {
    segs[j] = {l - j + 1, l + j, false, false, 1};
  }
  for (std::int64_t j = 1; j <= k - l; ++j) {
    segs[l + j] = {l + j, 2 * l + j, true, false, 2};
  }
  for (std::int64_t j = 1; j + 1 <= l; ++j) {
    segs[k + j] = {k + j, l - j + 1, true, true, 3};
  }

  std::vector<int> order;
  std::int64_t at = l;  // t_l starts at the vertex label 1
  for (std::int64_t i = 0; i < n; ++i) {
    order.push_back(static_cast<int>(at));
    const Seg& s = segs[at];
    if (s.end == k + l) break;  // the far vertex; the chain wraps
    const bool want_primed = !s.end_primed;
    std::int64_t next = 0;
    for (std::int64_t jj = 1; jj <= n; ++jj) {
      if (segs[jj].start == s.end && segs[jj].start_primed == want_primed) {
        next = jj;
        break;
      }
    }
    if (next == 0) throw InternalError("broken successor in the chain");
    at = next;
  }
  if (static_cast<std::int64_t>(order.size()) != n) {
    throw InternalError("chain does not traverse every segment");
  }

  const FreeWord kKappa{-2, 1, 2, -1};  // b^-1 a b a^-1
  FreeWord out;
  for (int j : order) {
    const Seg& s = segs[j];
    const bool marked = j >= c.marker;
    const bool vertex_start = s.group == 1 && s.start == 1;
    const bool vertex_end = s.group == 2 && s.end == k + l;
    // Domain boundary content by chord type: top->left holds neither full
    // cycle, right->left holds a, right->bottom holds both.  The vertex
    // chord enters from the right and (when it ends there) exits at the
    // bottom.
    const bool has_a = s.group != 1 || vertex_start;
    const bool has_b = s.group == 3 || vertex_end;
    if (has_a) out.Append(1);
    if (marked) out = out * kKappa;
    if (has_b) out.Append(-2);
  }
  return out;
}

std::vector<int> MatrixFactor(UniMatrix t) {
  if (t.k < 0 || t.l < 0 || t.p < 0 || t.q < 0) {
    throw ValidationError("matrix entries must be nonnegative");
  }
  if (t.Det() != 1) throw ValidationError("matrix must have determinant 1");
  std::vector<int> word;
  while (!t.IsIdentity()) {
    if (t.k >= t.l && t.p >= t.q) {
      // T2 * t' has top row = sum of rows.
      word.push_back(2);
      t = {t.k - t.l, t.l, t.p - t.q, t.q};
    } else if (t.l >= t.k && t.q >= t.p) {
      word.push_back(1);
      t = {t.k, t.l - t.k, t.p, t.q - t.p};
    } else {
      throw InternalError("no row dominates in a unimodular factorization");
    }
    if (t.k < 0 || t.l < 0 || t.p < 0 || t.q < 0) {
      throw InternalError("factorization left the nonnegative cone");
    }
  }
  return word;
}

BasisPair Lift(const UniMatrix& t) {
  const std::vector<int> factors = MatrixFactor(t);
  BasisPair pair{FreeWord{1}, FreeWord{2}};
  for (auto it = factors.rbegin(); it != factors.rend(); ++it) {
    pair.A = SubstituteHat(*it, pair.A);
    pair.B = SubstituteHat(*it, pair.B);
  }
  return pair;
}

std::pair<BasisPair, int> ReducePair(BasisPair p) {
  if (p.A.empty() || p.B.empty()) {
    throw ValidationError("reduce needs nonempty positive words");
  }
  const int bound = p.A.length() * p.B.length() + 1;
  int steps = 0;
  while (p.A.letters().front() == p.B.letters().front()) {
    RotateHeadToTail(p.A);
    RotateHeadToTail(p.B);
    ++steps;
    if (steps > bound) {
      throw ValidationError("words are powers of a common word");
    }
  }
  return {p, steps};
}

std::vector<BasisPair> FiberEnumerate(const UniMatrix& t) {
  if (t.k < 0 || t.l < 0 || t.p < 0 || t.q < 0) {
    throw ValidationError("matrix entries must be nonnegative");
  }
  if (t.Det() != 1) throw ValidationError("matrix must have determinant 1");
  if (t.EntrySum() < 3) {
    throw ValidationError("fiber needs entry sum >= 3");
  }
  BasisPair p = Lift(t);
  std::vector<BasisPair> fiber;
  const int bound = (p.A.length() + p.B.length()) * 2 + 2;
  while (p.A.letters().back() == p.B.letters().back()) {
    RotateTailToHead(p.A);
    RotateTailToHead(p.B);
    fiber.push_back(p);
    if (static_cast<int>(fiber.size()) > bound) {
      throw InternalError("fiber enumeration failed to terminate");
    }
  }
  return fiber;
}

}  // namespace curves
}  // namespace streetflow
