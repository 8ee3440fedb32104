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

#include "streetflow/oracle.h"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <utility>

namespace streetflow {
namespace oracle {
namespace {

// TODO: derive the search cutoff from the three-distance structure of the
// measures instead of a flat cap.
constexpr int kMaxTranslates = 200000;

// Enumerates candidate translates p e_a + q e_b, p, q >= 0, (p, q) != (0, 0),
// in strictly increasing flow cost p|a| + q|b|.  Mixed-sign translates never
// qualify: their measure displacement is at least |a| + |b| > m in absolute
// value, so they cannot overlap the slit.
class TranslateQueue {
 public:
  TranslateQueue(const Scalar& a, const Scalar& b) : a_(a), b_(b) {
    Push({1, 0});
    Push({0, 1});
  }

  LatticeVector Pop() {
    if (heap_.empty()) throw InternalError("translate queue exhausted");
    const auto it = heap_.begin();
    const LatticeVector v = it->second;
    heap_.erase(it);
    Push({v.p + 1, v.q});
    Push({v.p, v.q + 1});
    return v;
  }

  bool NextCostEquals(const Scalar& cost) const {
    return !heap_.empty() && heap_.begin()->first == cost;
  }

  Scalar CostOf(const LatticeVector& v) const {
    return Scalar(v.p) * a_ + Scalar(v.q) * b_;
  }

 private:
  struct CostLess {
    bool operator()(const Scalar& x, const Scalar& y) const {
      return x.Cmp(y) < 0;
    }
  };

  void Push(const LatticeVector& v) {
    if (!seen_.insert({v.p, v.q}).second) return;
    heap_.emplace(CostOf(v), v);
  }

  Scalar a_, b_;
  std::multimap<Scalar, LatticeVector, CostLess> heap_;
  std::set<std::pair<std::int64_t, std::int64_t>> seen_;
};

}  // namespace

PlanarRealization PlanarRealization::FromMeasures(const Scalar& a,
                                                  const Scalar& b,
                                                  const Scalar& m) {
  if (a.sign() <= 0 || b.sign() <= 0 || m.sign() <= 0 || !(m < a + b)) {
    throw ValidationError("realization needs a, b, m > 0 and m < a + b");
  }
  return PlanarRealization{a, b, m};
}

PlanarRealization PlanarRealization::FromSpec(const FoliationSpec& spec,
                                              int plane) {
  RequireValidSpec(spec);
  return PlanarRealization{spec.a(plane), spec.b(plane), spec.m};
}

ReturnHit FirstReturn(const PlanarRealization& pr, const Scalar& x,
                      int direction) {
  if (x.sign() <= 0 || x >= pr.m) {
    throw ValidationError("ray origin must be an interior slit point");
  }
  TranslateQueue queue(pr.a, pr.b);
  for (int n = 0; n < kMaxTranslates; ++n) {
    const LatticeVector v = queue.Pop();
    const Scalar mu = TransversalMeasure(v, pr.a, pr.b);
    const Scalar landing = direction > 0 ? x + mu : x - mu;
    const int lo = landing.sign();
    const int hi = landing.Cmp(pr.m);
    if (lo == 0 || hi == 0) {
      throw NonGenericityError("flow ray hits a translate endpoint exactly");
    }
    if (lo > 0 && hi < 0) {
      // A cost tie with another covering translate would make "first" ill
      // defined; it cannot happen for generic measures.
      if (queue.NextCostEquals(queue.CostOf(v))) {
        const LatticeVector w = queue.Pop();
        const Scalar other = direction > 0
                                 ? x + TransversalMeasure(w, pr.a, pr.b)
                                 : x - TransversalMeasure(w, pr.a, pr.b);
        if (other.sign() > 0 && other < pr.m) {
          throw NonGenericityError("two translates at equal flow cost");
        }
      }
      return ReturnHit{landing, direction > 0 ? v : LatticeVector{-v.p, -v.q}};
    }
  }
  throw ResourceError("first-return search exceeded translate bound");
}

streets::StreetTriple EmpiricalStreets(const PlanarRealization& pr,
                                       int plane) {
  // Sweep translates in cost order, peeling their coverage off the not yet
  // claimed part of [0, m).  Coverage of translate v is (-mu, m - mu).
  struct Part {
    Interval span;
    LatticeVector shift;
  };
  std::vector<Interval> open = {Interval(Scalar(0), pr.m)};
  std::vector<Part> parts;
  TranslateQueue queue(pr.a, pr.b);

  for (int n = 0; n < kMaxTranslates && !open.empty(); ++n) {
    const LatticeVector v = queue.Pop();
    const Scalar mu = TransversalMeasure(v, pr.a, pr.b);
    Scalar lo = -mu;
    Scalar hi = pr.m - mu;
    if (lo.sign() < 0) lo = Scalar(0);
    if (hi > pr.m) hi = pr.m;
    if (!(lo < hi)) continue;
    const Interval cover(lo, hi);

    std::vector<Interval> remaining;
    for (const Interval& gap : open) {
      const Interval hit = gap.Intersect(cover);
      if (hit.empty()) {
        remaining.push_back(gap);
        continue;
      }
      parts.push_back({hit, v});
      const Interval left(gap.lo(), hit.lo());
      const Interval right(hit.hi(), gap.hi());
      if (!left.empty()) remaining.push_back(left);
      if (!right.empty()) remaining.push_back(right);
    }
    open = std::move(remaining);
  }
  if (!open.empty()) {
    throw ResourceError("street sweep exceeded translate bound");
  }
  if (parts.size() != 3) {
    throw InternalError("slit split into " + std::to_string(parts.size()) +
                        " parts, expected exactly 3");
  }
  std::sort(parts.begin(), parts.end(), [](const Part& x, const Part& y) {
    return x.span.lo() < y.span.lo();
  });
  if (parts[0].shift + parts[2].shift != parts[1].shift) {
    throw InternalError("middle street height is not the sum of the sides");
  }

  streets::StreetTriple t;
  t.plane = plane;
  t.a = pr.a;
  t.b = pr.b;
  t.w1 = parts[0].span.measure();
  t.w0 = parts[1].span.measure();
  t.w2 = parts[2].span.measure();
  t.h1 = parts[0].shift;
  t.h0 = parts[1].shift;
  t.h2 = parts[2].shift;
  t.ua_pair = t.h1;
  t.by_pair = t.h2;
  return t;
}

double TimeProfile::near_zero_constant() const {
  switch (street_role) {
    case 0:
      return c2;
    case 1:
      return c2 / 2;
    case 2:
      return c1 / 2;
    default:
      throw ValidationError("street role must be 0, 1 or 2");
  }
}

double TimeProfile::near_width_constant() const {
  switch (street_role) {
    case 0:
      return c1;
    case 1:
      return c1 / 2;
    case 2:
      return c2 / 2;
    default:
      throw ValidationError("street role must be 0, 1 or 2");
  }
}

double TimeProfileEval(const TimeProfile& tp, double x) {
  const double w = tp.width.ToDouble();
  if (!(x > 0.0) || !(x < w)) {
    throw ValidationError("time profile evaluated outside (0, w)");
  }
  const double u = x / w;
  return -tp.near_zero_constant() * std::log(u) -
         tp.near_width_constant() * std::log(1.0 - u) + tp.t0;
}

}  // namespace oracle
}  // namespace streetflow
