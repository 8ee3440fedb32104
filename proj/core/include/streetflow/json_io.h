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

#ifndef STREETFLOW_JSON_IO_H_
#define STREETFLOW_JSON_IO_H_

#include <json.hpp>

#include "streetflow/builder.h"
#include "streetflow/foliation_spec.h"

namespace streetflow {

using Json = nlohmann::ordered_json;

// Scalars in spec files are pairs ["num/den", "num/den"] of the rational and
// the sqrt(d) coefficient; the field index d lives in the enclosing object.
// Plain rational strings are also accepted where a scalar is expected.
Json ScalarToJson(const Scalar& s);
Scalar ScalarFromJson(const Json& j, long d);

// {"field": {"d": 2}, "a1": [p, q], "b1": ..., "a2": ..., "b2": ..., "m": ...}
Json SpecToJson(const FoliationSpec& spec);
FoliationSpec SpecFromJson(const Json& j);

// {"tree": {"heights": [...], "edges": [[i,j],...]},
//  "segments": [{"id": 1, "edges": [0], "lo": ..., "hi": ..., "pos": "p/q"}],
//  "tori": [{"a": ..., "b": ..., "m": ...}], "field": {"d": ...}}
Json BuildingDataToJson(const builder::BuildingData& data);
builder::BuildingData BuildingDataFromJson(const Json& j);

builder::FluxData FluxDataFromJson(const Json& j);

}  // namespace streetflow

#endif  // STREETFLOW_JSON_IO_H_
