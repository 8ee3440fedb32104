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

#ifndef STREETFLOW_LATTICE_H_
#define STREETFLOW_LATTICE_H_

#include <cstdint>
#include <string>

#include "streetflow/scalar.h"

namespace streetflow {

// The homology class p[a] + q[b] in the first homology of one torus plane.
struct LatticeVector {
  std::int64_t p = 0;
  std::int64_t q = 0;

  LatticeVector operator+(const LatticeVector& o) const {
    return {p + o.p, q + o.q};
  }
  LatticeVector operator-(const LatticeVector& o) const {
    return {p - o.p, q - o.q};
  }
  LatticeVector operator-() const { return {-p, -q}; }
  bool operator==(const LatticeVector& o) const { return p == o.p && q == o.q; }
  bool operator!=(const LatticeVector& o) const { return !(*this == o); }

  std::string Str() const {
    return "(" + std::to_string(p) + "," + std::to_string(q) + ")";
  }
};

// Transversal measure of the class p[a] + q[b].  The cycles a and b^-1 are
// the positive transversal curves, so mu(p, q) = p|a| - q|b|.
inline Scalar TransversalMeasure(const LatticeVector& h, const Scalar& a,
                                 const Scalar& b) {
  return Scalar(h.p) * a - Scalar(h.q) * b;
}

}  // namespace streetflow

#endif  // STREETFLOW_LATTICE_H_
