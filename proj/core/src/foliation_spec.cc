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

#include "streetflow/foliation_spec.h"

namespace streetflow {

std::vector<SpecViolation> ValidateSpec(const FoliationSpec& spec) {
  std::vector<SpecViolation> out;
  const struct {
    const char* name;
    const Scalar* value;
  } fields[] = {{"a1", &spec.a1},
                {"b1", &spec.b1},
                {"a2", &spec.a2},
                {"b2", &spec.b2},
                {"m", &spec.m}};
  for (const auto& f : fields) {
    if (f.value->sign() <= 0) out.push_back({"positivity", f.name});
  }
  if (!out.empty()) return out;
  for (int plane = 1; plane <= 2; ++plane) {
    if (!(spec.m < spec.a(plane) + spec.b(plane))) {
      out.push_back({"m_range", "plane" + std::to_string(plane)});
    }
  }
  return out;
}

void RequireValidSpec(const FoliationSpec& spec) {
  const auto violations = ValidateSpec(spec);
  if (violations.empty()) return;
  std::string msg = "invalid foliation data:";
  for (const auto& v : violations) msg += " " + v.code + "(" + v.detail + ")";
  throw ValidationError(msg);
}

}  // namespace streetflow
