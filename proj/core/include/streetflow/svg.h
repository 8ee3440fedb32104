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

#ifndef STREETFLOW_SVG_H_
#define STREETFLOW_SVG_H_

#include <string>

#include "streetflow/builder.h"
#include "streetflow/streets.h"

namespace streetflow {
namespace svg {

// Static picture of the two street triples over the segment s: one rectangle
// per street, height labels attached.  Presentation only.
std::string RenderStreets(const streets::StreetTriple& plane1,
                          const streets::StreetTriple& plane2);

// Static picture of a plane diagram: the Morse tree drawn by height with the
// transversal segments as ticks beside their edges.
std::string RenderPlaneDiagram(const builder::PlaneDiagram& pd);

}  // namespace svg
}  // namespace streetflow

#endif  // STREETFLOW_SVG_H_
