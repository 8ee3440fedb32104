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
//
// Command line front end: every subsystem behind one binary with
// machine-readable JSON output and optional static SVG diagrams.

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <random>
#include <string>

#include "streetflow/builder.h"
#include "streetflow/curves.h"
#include "streetflow/homotopy.h"
#include "streetflow/hyperelliptic.h"
#include "streetflow/json_io.h"
#include "streetflow/oracle.h"
#include "streetflow/semigroup.h"
#include "streetflow/svg.h"
#include "streetflow/transition.h"

namespace streetflow {
namespace {

constexpr int kExitValidation = 1;
constexpr int kExitNonGeneric = 2;
constexpr int kExitResource = 3;

int MaxDepth() {
  if (const char* env = std::getenv("STREETFLOW_MAX_DEPTH")) {
    const int d = std::atoi(env);
    if (d > 0) return d;
  }
  return 16;
}

Json LoadJson(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open '" + path + "'");
  Json j;
  in >> j;
  return j;
}

void WriteOutput(const Json& j, const std::string& path) {
  if (path.empty()) {
    std::cout << j.dump(2) << "\n";
    return;
  }
  std::ofstream out(path);
  out << j.dump(2) << "\n";
}

void WriteFile(const std::string& text, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw ValidationError("cannot write '" + path + "'");
  out << text;
}

Json ScalarOut(const Scalar& s) {
  return Json{{"str", s.Str()}, {"exact", ScalarToJson(s)}};
}

Json IntervalOut(const Interval& v) {
  return Json{{"lo", ScalarOut(v.lo())},
              {"hi", ScalarOut(v.hi())},
              {"measure", ScalarOut(v.measure())}};
}

Json LatticeOut(const LatticeVector& h) { return Json::array({h.p, h.q}); }

Json TripleOut(const streets::StreetTriple& t) {
  const auto mb = streets::MBasisHomology(t);
  Json j;
  j["plane"] = t.plane;
  j["widths"] = {{"w1", ScalarOut(t.w1)},
                 {"w0", ScalarOut(t.w0)},
                 {"w2", ScalarOut(t.w2)}};
  j["heights"] = {{"h1", LatticeOut(t.h1)},
                  {"h0", LatticeOut(t.h0)},
                  {"h2", LatticeOut(t.h2)}};
  j["ua_pair"] = LatticeOut(t.ua_pair);
  j["by_pair"] = LatticeOut(t.by_pair);
  j["a_star"] = LatticeOut(mb.a_star);
  j["b_star"] = LatticeOut(mb.b_star);
  j["det"] = mb.det;
  return j;
}

FoliationSpec LoadSpec(const std::string& path) {
  const FoliationSpec spec = SpecFromJson(LoadJson(path));
  RequireValidSpec(spec);
  return spec;
}

transition::BrokenIsometry LoadIsometry(const FoliationSpec& spec) {
  return transition::BrokenIsometry(streets::ComputeStreetTriple(spec, 1),
                                    streets::ComputeStreetTriple(spec, 2));
}

Json TransitionOut(const transition::BrokenIsometry& bi) {
  Json j;
  j["type"] = transition::TopTypeName(bi.type());
  j["sigma"] = bi.sigma();
  Json tau = Json::array();
  for (int q = 0; q < 5; ++q) {
    tau.push_back({{"piece", q + 1},
                   {"carrier", IntervalOut(bi.tau()[q])},
                   {"shift", ScalarOut(bi.shifts()[q])},
                   {"alpha", bi.street_pairs()[q].first},
                   {"beta", bi.street_pairs()[q].second}});
  }
  j["tau"] = tau;
  Json shifts = Json::array();
  for (const Scalar& r : bi.shifts()) shifts.push_back(ScalarOut(r));
  j["shifts"] = shifts;
  Json points = Json::array();
  for (const auto& pt : bi.cut_points()) {
    points.push_back({{"label", pt.label}, {"value", ScalarOut(pt.value)}});
  }
  j["cut_points"] = points;
  Json pm = Json::array();
  for (int a : {1, 0, 2}) {
    Json row = Json::array();
    for (int b : {1, 0, 2}) {
      row.push_back(ScalarOut(
          bi.pair_measures()[transition::StreetSlot(a)]
                            [transition::StreetSlot(b)]));
    }
    pm.push_back(row);
  }
  j["pair_measures"] = pm;
  j["pair_measures_order"] = Json::array({1, 0, 2});
  return j;
}

Json WordOut(const semigroup::SemigroupWord& w) {
  return Json{{"letters", w.letters},
              {"zero", w.is_zero()},
              {"carrier", IntervalOut(w.carrier)},
              {"shift", ScalarOut(w.shift)},
              {"measure", ScalarOut(w.measure())}};
}

Json GroupWordOut(const homotopy::GroupWord& g) {
  Json letters = Json::array();
  for (int l : g.letters()) letters.push_back(l);
  return Json{{"letters", letters},
              {"str", g.Str(homotopy::LetterNames())}};
}

int RunStreets(const std::string& spec_path, int plane,
               const std::string& out_path, const std::string& svg_path) {
  const FoliationSpec spec = LoadSpec(spec_path);
  Json j;
  j["spec"] = SpecToJson(spec);
  Json planes = Json::array();
  for (int k : {1, 2}) {
    if (plane != 0 && plane != k) continue;
    planes.push_back(TripleOut(streets::ComputeStreetTriple(spec, k)));
  }
  j["planes"] = planes;
  if (!svg_path.empty()) {
    WriteFile(svg::RenderStreets(streets::ComputeStreetTriple(spec, 1),
                                 streets::ComputeStreetTriple(spec, 2)),
              svg_path);
    j["svg"] = svg_path;
  }
  WriteOutput(j, out_path);
  return 0;
}

int RunTransition(const std::string& spec_path, const std::string& out_path) {
  const FoliationSpec spec = LoadSpec(spec_path);
  const auto bi = LoadIsometry(spec);
  Json j;
  j["spec"] = SpecToJson(spec);
  j.update(TransitionOut(bi));
  WriteOutput(j, out_path);
  return 0;
}

int RunWords(const std::string& spec_path, int depth, const std::string& code,
             int steps, const std::string& out_path) {
  const FoliationSpec spec = LoadSpec(spec_path);
  const auto bi = LoadIsometry(spec);
  Json j;
  j["spec"] = SpecToJson(spec);
  j["depth"] = depth;
  Json words = Json::array();
  for (const auto& w : semigroup::EnumerateLevel(bi, depth, MaxDepth())) {
    words.push_back(WordOut(w));
  }
  j["words"] = words;
  if (!code.empty()) {
    const Scalar x0 = Scalar::FromString(code);
    j["coding"] = {{"x0", ScalarOut(x0)},
                   {"steps", steps},
                   {"itinerary", semigroup::CodeTrajectory(bi, x0, steps)}};
  }
  WriteOutput(j, out_path);
  return 0;
}

int RunPi1(const std::string& spec_path, const std::string& word_csv,
           bool reversed, const std::string& out_path) {
  const FoliationSpec spec = LoadSpec(spec_path);
  const auto bi = LoadIsometry(spec);
  semigroup::SemigroupWord w = semigroup::EmptyWord(bi);
  {
    std::stringstream ss(word_csv);
    std::string item;
    std::vector<int> letters;
    while (std::getline(ss, item, ',')) letters.push_back(std::stoi(item));
    // The written word has its most recent letter first; rebuild by left
    // multiplication from the right end.
    for (auto it = letters.rbegin(); it != letters.rend(); ++it) {
      w = semigroup::LeftMultiply(bi, *it, w);
    }
  }
  if (w.is_zero()) {
    throw ValidationError("the word is zero in the semigroup");
  }
  const homotopy::GroupWord g = homotopy::Represent(w, bi.type(), reversed);
  const auto h4 = homotopy::Abelianize(g);

  // Back to the original a_k, b_k basis through the street change of basis.
  // The plane-2 star letters are the negative-time lifts, so their
  // original-basis classes pick up a sign.
  const auto mb1 = streets::MBasisHomology(streets::ComputeStreetTriple(spec, 1));
  const auto mb2 = streets::MBasisHomology(streets::ComputeStreetTriple(spec, 2));
  const auto expand = [](const streets::MBasis& mb, std::int64_t na,
                         std::int64_t nb) {
    return Json::array({na * mb.a_star.p + nb * mb.b_star.p,
                        na * mb.a_star.q + nb * mb.b_star.q});
  };

  Json j;
  j["spec"] = SpecToJson(spec);
  j["type"] = transition::TopTypeName(bi.type());
  j["word"] = WordOut(w);
  j["free_word"] = GroupWordOut(g);
  j["homology4"] = Json::array({h4[0], h4[1], h4[2], h4[3]});
  j["homology_original_basis"] = {{"plane1", expand(mb1, h4[0], h4[1])},
                                  {"plane2", expand(mb2, -h4[2], -h4[3])}};
  WriteOutput(j, out_path);
  return 0;
}

int RunCurve(long k, long l, long marker, const std::string& out_path) {
  Json j;
  j["k"] = k;
  j["l"] = l;
  j["word"] = curves::CurveWord(k, l);
  if (k > l && l > 0) {
    const auto chain = curves::ComputeSegmentChain(k, l);
    Json segs = Json::array();
    for (const auto& s : chain.segments) {
      segs.push_back({{"index", s.index},
                      {"start", s.start},
                      {"end", std::to_string(s.end) + "'"},
                      {"group", s.group}});
    }
    j["segments"] = segs;
    j["chain"] = chain.order;
    j["single_cycle"] = chain.single_cycle;
    if (marker > 0) {
      const FreeWord ut = curves::UpperTriangle({k, l, marker});
      j["marker"] = marker;
      j["upper_triangle"] = ut.Str({"a", "b"});
      const auto ab = ut.Abelianize(2);
      j["upper_triangle_homology"] = Json::array({ab[0], ab[1]});
    }
  }
  WriteOutput(j, out_path);
  return 0;
}

int RunMatrix(const std::string& entries_csv, const std::string& out_path) {
  std::stringstream ss(entries_csv);
  std::string item;
  std::vector<long> e;
  while (std::getline(ss, item, ',')) e.push_back(std::stol(item));
  if (e.size() != 4) {
    throw ValidationError("--entries expects k,l,p,q");
  }
  const curves::UniMatrix t{e[0], e[1], e[2], e[3]};
  Json j;
  j["entries"] = {{"k", t.k}, {"l", t.l}, {"p", t.p}, {"q", t.q}};
  Json word = Json::array();
  for (int g : curves::MatrixFactor(t)) {
    word.push_back(g == 1 ? "T1" : "T2");
  }
  j["factorization"] = word;
  const auto lift = curves::Lift(t);
  j["lift"] = {{"A", lift.A.Str({"a'", "b'"})}, {"B", lift.B.Str({"a'", "b'"})}};
  if (t.EntrySum() >= 3) {
    const auto fiber = curves::FiberEnumerate(t);
    Json members = Json::array();
    for (const auto& p : fiber) {
      members.push_back(
          {{"A", p.A.Str({"a'", "b'"})}, {"B", p.B.Str({"a'", "b'"})}});
    }
    j["fiber"] = members;
    j["fiber_count"] = fiber.size();
  }
  WriteOutput(j, out_path);
  return 0;
}

int RunBuild(const std::string& path, const std::string& out_path,
             const std::string& svg_path) {
  const builder::BuildingData data = BuildingDataFromJson(LoadJson(path));
  Json j;
  j["input"] = BuildingDataToJson(data);
  Json violations = Json::array();
  for (const auto& v : builder::ValidateBuildingData(data)) {
    violations.push_back({{"code", v.code}, {"detail", v.detail}});
  }
  j["violations"] = violations;
  if (violations.empty()) {
    const auto gs = builder::Glue(data);
    Json saddles = Json::array();
    for (const auto& s : gs.saddles) saddles.push_back(s.Str());
    j["genus"] = gs.genus;
    j["saddles"] = saddles;
    j["t"] = gs.t;
    j["r"] = gs.r;
    const auto c = builder::Classify(gs);
    j["classification"] = {{"minimal", c.minimal},
                           {"simple", c.simple},
                           {"rank", c.rank},
                           {"maximal", c.maximal},
                           {"selected", c.selected},
                           {"cycle_type", c.cycle_type}};
    Json events = Json::array();
    for (const auto& ev : builder::PsiEventLog(data.diagram)) {
      events.push_back({{"height", ScalarOut(ev.height)},
                        {"kind", ev.kind},
                        {"segments", ev.segments}});
    }
    j["psi_events"] = events;
  }
  if (!svg_path.empty()) {
    WriteFile(svg::RenderPlaneDiagram(data.diagram), svg_path);
    j["svg"] = svg_path;
  }
  WriteOutput(j, out_path);
  return j["violations"].empty() ? 0 : kExitValidation;
}

int RunFlux(const std::string& path, const std::string& out_path) {
  const builder::FluxData data = FluxDataFromJson(LoadJson(path));
  const auto res = builder::FluxCheck(data);
  Json j;
  j["m"] = ScalarOut(res.flux);
  j["direction"] = res.direction;
  WriteOutput(j, out_path);
  return 0;
}

int RunHyper(const std::string& roots_csv, const std::string& u_csv,
             const std::string& v_csv, const std::string& out_path) {
  hyper::RealHyperelliptic curve;
  std::stringstream ss(roots_csv);
  std::string item;
  while (std::getline(ss, item, ',')) {
    curve.roots.push_back(Scalar::FromString(item));
  }
  const hyper::FormSpec form{hyper::RatPoly::FromString(u_csv),
                             hyper::RatPoly::FromString(v_csv)};
  const auto verdict = hyper::ClassifyClass(curve, form);
  const auto stability = hyper::PerturbationNote(curve, form);
  Json j;
  j["genus"] = curve.genus();
  j["class"] = hyper::FoliationClassName(verdict.clazz);
  Json surviving = Json::array();
  for (const auto& s : verdict.surviving) {
    surviving.push_back({{"segment", s.name},
                         {"roots", Json::array({s.lo_index, s.hi_index})}});
  }
  j["surviving"] = surviving;
  Json cycles = Json::array();
  for (const auto& [cycle, seg] : verdict.chosen_cycles) {
    cycles.push_back({{"cycle", cycle},
                      {"segment", seg.name},
                      {"roots", Json::array({seg.lo_index, seg.hi_index})}});
  }
  j["chosen_cycles"] = cycles;
  j["notes"] = verdict.notes;
  j["stable"] = stability.stable;
  j["stability_reason"] = stability.reason;
  WriteOutput(j, out_path);
  return 0;
}

int RunSimulate(const std::string& spec_path, int points, int steps,
                unsigned long seed, const std::string& out_path) {
  const FoliationSpec spec = LoadSpec(spec_path);
  Json j;
  j["spec"] = SpecToJson(spec);
  Json checks = Json::array();

  bool streets_ok = true;
  for (int plane : {1, 2}) {
    const auto lhs = streets::ComputeStreetTriple(spec, plane);
    const auto rhs = oracle::EmpiricalStreets(
        oracle::PlanarRealization::FromSpec(spec, plane), plane);
    const bool ok = lhs.w0 == rhs.w0 && lhs.w1 == rhs.w1 && lhs.w2 == rhs.w2 &&
                    lhs.h0 == rhs.h0 && lhs.h1 == rhs.h1 && lhs.h2 == rhs.h2;
    streets_ok &= ok;
    checks.push_back({{"check", "streets_plane" + std::to_string(plane)},
                      {"match", ok}});
  }

  const auto bi = LoadIsometry(spec);
  const auto pr1 = oracle::PlanarRealization::FromSpec(spec, 1);
  const auto pr2 = oracle::PlanarRealization::FromSpec(spec, 2);
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> d(1, 999983);
  int match = 0, tried = 0;
  for (int i = 0; i < points; ++i) {
    const Scalar x = spec.m * Scalar(d(rng), 999984ul);
    try {
      const Scalar via_bi = bi.Apply(x);
      const auto hop = oracle::FirstReturn(pr2,
                                           oracle::FirstReturn(pr1, x).landing);
      ++tried;
      match += via_bi == hop.landing;
    } catch (const NonGenericityError&) {
    }
  }
  checks.push_back({{"check", "return_map"},
                    {"points", tried},
                    {"match", match == tried}});

  int coding_ok = 0, coding_tried = 0;
  for (int i = 0; i < std::max(1, points / 100); ++i) {
    const Scalar x0 = spec.m * Scalar(d(rng), 999984ul);
    try {
      const auto code = semigroup::CodeTrajectory(bi, x0, steps);
      // Recompute geometrically: each piece label must match the street
      // pair the oracle traverses.
      Scalar x = x0;
      bool ok = true;
      for (int q : code) {
        const auto hop1 = oracle::FirstReturn(pr1, x);
        const auto hop2 = oracle::FirstReturn(pr2, hop1.landing);
        const auto [alpha, beta] = bi.street_pairs()[q - 1];
        ok &= streets::ComputeStreetTriple(spec, 1).Carrier(alpha).Contains(x);
        ok &= hop2.landing == bi.Apply(x);
        x = hop2.landing;
      }
      ++coding_tried;
      coding_ok += ok;
    } catch (const NonGenericityError&) {
    }
  }
  checks.push_back({{"check", "coding"},
                    {"orbits", coding_tried},
                    {"steps", steps},
                    {"match", coding_ok == coding_tried}});

  j["checks"] = checks;
  bool all = streets_ok && match == tried && coding_ok == coding_tried;
  j["all_match"] = all;
  WriteOutput(j, out_path);
  return 0;
}

int Dispatch(int argc, char** argv) {
  CLI::App app{"exact combinatorial engine for measured foliations built "
               "from transversal canonical bases"};
  app.require_subcommand(1);

  std::string spec_path, out_path, svg_path, code, word_csv, entries_csv;
  std::string roots_csv, u_csv = "1", v_csv = "1";
  int plane = 0, depth = 1, steps = 0, points = 100;
  long k = 0, l = 0, marker = 0;
  bool reversed = false;
  unsigned long seed = 0;

  auto* streets_cmd = app.add_subcommand("streets", "street decomposition");
  streets_cmd->add_option("--spec", spec_path)->required();
  streets_cmd->add_option("--plane", plane)->check(CLI::Range(1, 2));
  streets_cmd->add_option("--out,-o", out_path);
  streets_cmd->add_option("--svg", svg_path);

  auto* trans_cmd = app.add_subcommand("transition", "broken isometry");
  trans_cmd->add_option("--spec", spec_path)->required();
  trans_cmd->add_option("--out,-o", out_path);

  auto* words_cmd = app.add_subcommand("words", "semigroup level words");
  words_cmd->add_option("--spec", spec_path)->required();
  words_cmd->add_option("--depth", depth)->required();
  words_cmd->add_option("--code", code);
  words_cmd->add_option("--steps", steps);
  words_cmd->add_option("--out,-o", out_path);

  auto* pi1_cmd = app.add_subcommand("pi1", "fundamental group classes");
  pi1_cmd->add_option("--spec", spec_path)->required();
  pi1_cmd->add_option("--word", word_csv)->required();
  pi1_cmd->add_flag("--reversed", reversed);
  pi1_cmd->add_option("--out,-o", out_path);

  auto* curve_cmd = app.add_subcommand("curve", "curve classification");
  curve_cmd->add_option("--k", k)->required();
  curve_cmd->add_option("--l", l)->required();
  curve_cmd->add_option("--marker", marker);
  curve_cmd->add_option("--out,-o", out_path);

  auto* matrix_cmd = app.add_subcommand("matrix", "unimodular semigroup");
  matrix_cmd->add_option("--entries", entries_csv)->required();
  matrix_cmd->add_option("--out,-o", out_path);

  auto* build_cmd = app.add_subcommand("build", "building data report");
  build_cmd->add_option("--spec", spec_path)->required();
  build_cmd->add_option("--out,-o", out_path);
  build_cmd->add_option("--svg", svg_path);

  auto* flux_cmd = app.add_subcommand("flux", "genus-4 flux check");
  flux_cmd->add_option("--spec", spec_path)->required();
  flux_cmd->add_option("--out,-o", out_path);

  auto* hyper_cmd = app.add_subcommand("hyper", "class membership");
  hyper_cmd->add_option("--roots", roots_csv)->required();
  hyper_cmd->add_option("--u", u_csv);
  hyper_cmd->add_option("--v", v_csv);
  hyper_cmd->add_option("--out,-o", out_path);

  auto* sim_cmd = app.add_subcommand("simulate", "geometric cross-check");
  sim_cmd->add_option("--spec", spec_path)->required();
  sim_cmd->add_option("--points", points);
  sim_cmd->add_option("--steps", steps)->default_val(50);
  sim_cmd->add_option("--seed", seed);
  sim_cmd->add_option("--out,-o", out_path);

  CLI11_PARSE(app, argc, argv);

  if (streets_cmd->parsed()) {
    return RunStreets(spec_path, plane, out_path, svg_path);
  }
  if (trans_cmd->parsed()) return RunTransition(spec_path, out_path);
  if (words_cmd->parsed()) {
    return RunWords(spec_path, depth, code, steps, out_path);
  }
  if (pi1_cmd->parsed()) return RunPi1(spec_path, word_csv, reversed, out_path);
  if (curve_cmd->parsed()) return RunCurve(k, l, marker, out_path);
  if (matrix_cmd->parsed()) return RunMatrix(entries_csv, out_path);
  if (build_cmd->parsed()) return RunBuild(spec_path, out_path, svg_path);
  if (flux_cmd->parsed()) return RunFlux(spec_path, out_path);
  if (hyper_cmd->parsed()) return RunHyper(roots_csv, u_csv, v_csv, out_path);
  if (sim_cmd->parsed()) {
    return RunSimulate(spec_path, points, steps, seed, out_path);
  }
  return kExitValidation;
}

int Main(int argc, char** argv) {
  try {
    return Dispatch(argc, argv);
  } catch (const NonGenericityError& e) {
    std::cout << Json{{"error", "non_genericity"}, {"detail", e.what()}}.dump(2)
              << "\n";
    return kExitNonGeneric;
  } catch (const ResourceError& e) {
    std::cout << Json{{"error", "resource"}, {"detail", e.what()}}.dump(2)
              << "\n";
    return kExitResource;
  } catch (const Error& e) {
    // Name the violated invariant when the message carries one.
    std::string code = "validation";
    const std::string what = e.what();
    if (what.find("m_range") != std::string::npos) code = "m_range";
    if (what.find("positivity") != std::string::npos) code = "positivity";
    std::cout << Json{{"error", code}, {"detail", what}}.dump(2) << "\n";
    return kExitValidation;
  } catch (const Json::exception& e) {
    std::cout << Json{{"error", "json"}, {"detail", e.what()}}.dump(2) << "\n";
    return kExitValidation;
  }
}

}  // namespace
}  // namespace streetflow

int main(int argc, char** argv) { return streetflow::Main(argc, argv); }
