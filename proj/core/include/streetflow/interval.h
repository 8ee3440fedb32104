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

#ifndef STREETFLOW_INTERVAL_H_
#define STREETFLOW_INTERVAL_H_

#include <string>

#include "streetflow/scalar.h"

namespace streetflow {

// A half-open subsegment [lo, hi) of the transversal segment.  Half-open so
// that the level-N word carriers partition [0, m) with no double counting.
// Zero-measure intervals are legal values; they encode the zero word.
class Interval {
 public:
  Interval() = default;
  Interval(Scalar lo, Scalar hi) : lo_(std::move(lo)), hi_(std::move(hi)) {
    if (lo_ > hi_) throw ValidationError("interval with lo > hi");
  }

  const Scalar& lo() const { return lo_; }
  const Scalar& hi() const { return hi_; }
  Scalar measure() const { return hi_ - lo_; }
  bool empty() const { return lo_ == hi_; }

  bool Contains(const Scalar& x) const { return lo_ <= x && x < hi_; }

  Interval Intersect(const Interval& o) const {
    const Scalar& lo = lo_ >= o.lo_ ? lo_ : o.lo_;
    const Scalar& hi = hi_ <= o.hi_ ? hi_ : o.hi_;
    if (lo >= hi) return Interval(lo, lo);
    return Interval(lo, hi);
  }

  // Translates both endpoints.
  Interval operator+(const Scalar& shift) const {
    return Interval(lo_ + shift, hi_ + shift);
  }
  Interval operator-(const Scalar& shift) const {
    return Interval(lo_ - shift, hi_ - shift);
  }

  // All empty intervals are equal to each other.
  bool operator==(const Interval& o) const {
    if (empty() && o.empty()) return true;
    return lo_ == o.lo_ && hi_ == o.hi_;
  }
  bool operator!=(const Interval& o) const { return !(*this == o); }

  std::string Str() const { return "[" + lo_.Str() + ", " + hi_.Str() + ")"; }

 private:
  Scalar lo_;
  Scalar hi_;
};

}  // namespace streetflow

#endif  // STREETFLOW_INTERVAL_H_
