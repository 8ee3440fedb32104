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

#include "streetflow/svg.h"

#include <cmath>
#include <sstream>

namespace streetflow {
namespace svg {
namespace {

std::string Num(double v) {
  std::ostringstream ss;
  ss.precision(2);
  ss << std::fixed << v;
  return ss.str();
}

void Rect(std::ostringstream& out, double x, double y, double w, double h,
          const std::string& fill) {
  out << "  <rect x=\"" << Num(x) << "\" y=\"" << Num(y) << "\" width=\""
      << Num(w) << "\" height=\"" << Num(h) << "\" fill=\"" << fill
      << "\" stroke=\"#333\"/>\n";
}

void Text(std::ostringstream& out, double x, double y, const std::string& s) {
  out << "  <text x=\"" << Num(x) << "\" y=\"" << Num(y)
      << "\" font-size=\"11\" font-family=\"monospace\">" << s << "</text>\n";
}

void StreetRow(std::ostringstream& out, const streets::StreetTriple& t,
               double y0) {
  const double scale = 420.0 / t.m().ToDouble();
  const char* fills[] = {"#cfe3ff", "#ffe9b0", "#d8f5cd"};
  const Scalar widths[] = {t.w1, t.w0, t.w2};
  const LatticeVector heights[] = {t.h1, t.h0, t.h2};
  const int labels[] = {1, 0, 2};
  double x = 40.0;
  for (int i = 0; i < 3; ++i) {
    const double w = widths[i].ToDouble() * scale;
    const double h = 30.0 + 14.0 * (std::abs(static_cast<double>(heights[i].p)) +
                                    std::abs(static_cast<double>(heights[i].q)));
    Rect(out, x, y0 - h, w, h, fills[i]);
    Text(out, x + 2, y0 - h - 4,
         "p^" + std::to_string(labels[i]) + " h=" + heights[i].Str());
    x += w;
  }
  out << "  <line x1=\"40\" y1=\"" << Num(y0) << "\" x2=\"460\" y2=\""
      << Num(y0) << "\" stroke=\"#000\" stroke-width=\"2\"/>\n";
  Text(out, 466, y0 + 4, "s (plane " + std::to_string(t.plane) + ")");
}

}  // namespace

std::string RenderStreets(const streets::StreetTriple& plane1,
                          const streets::StreetTriple& plane2) {
  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"560\" "
         "height=\"400\">\n";
  StreetRow(out, plane1, 180.0);
  StreetRow(out, plane2, 380.0);
  out << "</svg>\n";
  return out.str();
}

std::string RenderPlaneDiagram(const builder::PlaneDiagram& pd) {
  double h_lo = 0.0, h_hi = 1.0;
  bool first = true;
  for (const Scalar& h : pd.tree.heights) {
    const double v = h.ToDouble();
    if (first || v < h_lo) h_lo = v;
    if (first || v > h_hi) h_hi = v;
    first = false;
  }
  const double span = h_hi > h_lo ? h_hi - h_lo : 1.0;
  const auto ypix = [&](double h) { return 360.0 - 320.0 * (h - h_lo) / span; };

  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"560\" "
         "height=\"400\">\n";
  // Edges spread horizontally, vertices placed by height.
  const int ecount = static_cast<int>(pd.tree.edges.size());
  for (int e = 0; e < ecount; ++e) {
    const auto& [a, b] = pd.tree.edges[e];
    const double x = 80.0 + 360.0 * (e + 0.5) / ecount;
    out << "  <line x1=\"" << Num(x) << "\" y1=\""
        << Num(ypix(pd.tree.heights[a].ToDouble())) << "\" x2=\"" << Num(x)
        << "\" y2=\"" << Num(ypix(pd.tree.heights[b].ToDouble()))
        << "\" stroke=\"#444\" stroke-width=\"2\"/>\n";
  }
  for (const auto& s : pd.segments) {
    const int e = s.edge_path.front();
    const double x =
        80.0 + 360.0 * (e + 0.5) / ecount + 8.0 + 14.0 * s.pos.get_d();
    out << "  <line x1=\"" << Num(x) << "\" y1=\"" << Num(ypix(s.lo.ToDouble()))
        << "\" x2=\"" << Num(x) << "\" y2=\"" << Num(ypix(s.hi.ToDouble()))
        << "\" stroke=\"#c33\" stroke-width=\"2\"/>\n";
    Text(out, x + 3, ypix(s.hi.ToDouble()) - 2, "t" + std::to_string(s.id));
  }
  for (int v = 0; v < pd.tree.VertexCount(); ++v) {
    Text(out, 20, ypix(pd.tree.heights[v].ToDouble()) + 4,
         (pd.tree.IsEnd(v) ? "center " : "saddle ") + std::to_string(v));
  }
  out << "</svg>\n";
  return out.str();
}

}  // namespace svg
}  // namespace streetflow
