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

#include "streetflow/json_io.h"

namespace streetflow {

Json ScalarToJson(const Scalar& s) {
  return Json::array({RationalString(s.rat()), RationalString(s.coef())});
}

Scalar ScalarFromJson(const Json& j, long d) {
  if (j.is_string()) return Scalar(ParseRational(j.get<std::string>()));
  if (j.is_number_integer()) return Scalar(static_cast<long>(j.get<long>()));
  if (!j.is_array() || j.empty() || j.size() > 2) {
    throw ValidationError("scalar must be \"num/den\" or a pair of them");
  }
  const mpq_class rat = ParseRational(j.at(0).get<std::string>());
  if (j.size() == 1) return Scalar(rat);
  const mpq_class coef = ParseRational(j.at(1).get<std::string>());
  if (coef == 0) return Scalar(rat);
  return Scalar(rat, coef, d);
}

namespace {

long FieldOf(const Json& j) {
  if (!j.contains("field")) return 0;
  const Json& f = j.at("field");
  if (f.is_null()) return 0;
  if (f.is_number_integer()) return f.get<long>();
  if (f.contains("d") && !f.at("d").is_null()) return f.at("d").get<long>();
  return 0;
}

}  // namespace

Json SpecToJson(const FoliationSpec& spec) {
  long d = 0;
  for (const Scalar* s : {&spec.a1, &spec.b1, &spec.a2, &spec.b2, &spec.m}) {
    if (s->d() != 0) d = s->d();
  }
  Json j;
  j["field"] = {{"d", d}};
  j["a1"] = ScalarToJson(spec.a1);
  j["b1"] = ScalarToJson(spec.b1);
  j["a2"] = ScalarToJson(spec.a2);
  j["b2"] = ScalarToJson(spec.b2);
  j["m"] = ScalarToJson(spec.m);
  return j;
}

FoliationSpec SpecFromJson(const Json& j) {
  const long d = FieldOf(j);
  for (const char* key : {"a1", "b1", "a2", "b2", "m"}) {
    if (!j.contains(key)) {
      throw ValidationError(std::string("spec is missing \"") + key + "\"");
    }
  }
  return FoliationSpec{ScalarFromJson(j.at("a1"), d),
                       ScalarFromJson(j.at("b1"), d),
                       ScalarFromJson(j.at("a2"), d),
                       ScalarFromJson(j.at("b2"), d),
                       ScalarFromJson(j.at("m"), d)};
}

Json BuildingDataToJson(const builder::BuildingData& data) {
  Json j;
  Json heights = Json::array();
  for (const Scalar& h : data.diagram.tree.heights) {
    heights.push_back(ScalarToJson(h));
  }
  Json edges = Json::array();
  for (const auto& [x, y] : data.diagram.tree.edges) {
    edges.push_back(Json::array({x, y}));
  }
  j["tree"] = {{"heights", heights}, {"edges", edges}};
  Json segments = Json::array();
  for (const auto& s : data.diagram.segments) {
    segments.push_back({{"id", s.id},
                        {"edges", s.edge_path},
                        {"lo", ScalarToJson(s.lo)},
                        {"hi", ScalarToJson(s.hi)},
                        {"pos", RationalString(s.pos)}});
  }
  j["segments"] = segments;
  Json tori = Json::array();
  for (const auto& t : data.tori) {
    tori.push_back({{"a", ScalarToJson(t.a)},
                    {"b", ScalarToJson(t.b)},
                    {"m", ScalarToJson(t.m)}});
  }
  j["tori"] = tori;
  return j;
}

builder::BuildingData BuildingDataFromJson(const Json& j) {
  const long d = FieldOf(j);
  builder::BuildingData data;
  const Json& tree = j.at("tree");
  for (const Json& h : tree.at("heights")) {
    data.diagram.tree.heights.push_back(ScalarFromJson(h, d));
  }
  for (const Json& e : tree.at("edges")) {
    data.diagram.tree.edges.emplace_back(e.at(0).get<int>(),
                                         e.at(1).get<int>());
  }
  for (const Json& s : j.at("segments")) {
    builder::DiagramSegment seg;
    seg.id = s.at("id").get<int>();
    for (const Json& e : s.at("edges")) seg.edge_path.push_back(e.get<int>());
    seg.lo = ScalarFromJson(s.at("lo"), d);
    seg.hi = ScalarFromJson(s.at("hi"), d);
    seg.pos = ParseRational(s.at("pos").get<std::string>());
    data.diagram.segments.push_back(std::move(seg));
  }
  for (const Json& t : j.at("tori")) {
    data.tori.push_back({ScalarFromJson(t.at("a"), d),
                         ScalarFromJson(t.at("b"), d),
                         ScalarFromJson(t.at("m"), d)});
  }
  return data;
}

builder::FluxData FluxDataFromJson(const Json& j) {
  const long d = FieldOf(j);
  builder::FluxData data;
  const Json& m = j.at("m");
  for (auto it = m.begin(); it != m.end(); ++it) {
    data.m[std::stoi(it.key())] = ScalarFromJson(it.value(), d);
  }
  const Json& a = j.at("A");
  if (a.size() != 4) throw ValidationError("flux data needs |A_1..A_4|");
  for (int k = 0; k < 4; ++k) data.A[k] = ScalarFromJson(a.at(k), d);
  return data;
}

}  // namespace streetflow
