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

#ifndef STREETFLOW_FOLIATION_SPEC_H_
#define STREETFLOW_FOLIATION_SPEC_H_

#include <string>
#include <vector>

#include "streetflow/scalar.h"

namespace streetflow {

// The genus-2 measure data: transversal measures |a_1|, |b_1|, |a_2|, |b_2|
// of the canonical basis cycles of the two torus planes, and the measure m
// of the gluing segment s.  Valid data has every value strictly positive and
// 0 < m < |a_k| + |b_k| for k = 1, 2.
struct FoliationSpec {
  Scalar a1, b1, a2, b2, m;

  const Scalar& a(int plane) const { return plane == 1 ? a1 : a2; }
  const Scalar& b(int plane) const { return plane == 1 ? b1 : b2; }
};

struct SpecViolation {
  std::string code;    // "positivity" or "m_range"
  std::string detail;  // which field / plane failed
};

// Returns every violated invariant by name; violations are data, not faults.
std::vector<SpecViolation> ValidateSpec(const FoliationSpec& spec);

// Throws ValidationError when the spec is invalid.
void RequireValidSpec(const FoliationSpec& spec);

}  // namespace streetflow

#endif  // STREETFLOW_FOLIATION_SPEC_H_
