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

#ifndef STREETFLOW_BUILDER_H_
#define STREETFLOW_BUILDER_H_

#include <array>
#include <map>
#include <string>
#include <vector>

#include "streetflow/scalar.h"

namespace streetflow {
namespace builder {

// Generic Morse data on the sphere, reduced to its combinatorics: a
// trivalent finite tree with distinct vertex heights.  Ends are the centers
// of the sphere flow, inner vertices its saddles; every inner vertex height
// lies strictly between the smallest and largest neighbor height.
struct MorseTree {
  std::vector<Scalar> heights;               // by vertex id
  std::vector<std::pair<int, int>> edges;    // vertex id pairs

  int VertexCount() const { return static_cast<int>(heights.size()); }
  int Degree(int v) const;
  bool IsEnd(int v) const { return Degree(v) == 1; }
  std::vector<int> Ends() const;
  std::vector<int> InnerVertices() const;

  // Height range of an edge, low to high.
  std::pair<Scalar, Scalar> EdgeRange(int e) const;
};

// One transversal segment of the plane diagram: a monotone branch over the
// edge path [lo, hi] in height, carrying a fixed angular marker position
// that orders the segments met by one trajectory circle.
struct DiagramSegment {
  int id = 0;                 // 1-based torus index
  std::vector<int> edge_path; // consecutive tree edges, low to high
  Scalar lo, hi;
  mpq_class pos;              // in [0, 1)

  Scalar measure() const { return hi - lo; }
};

struct PsiEvent {
  Scalar height;
  std::string kind;  // "appear" | "disappear" | "meet-center" | "saddle"
  std::vector<int> segments;
};

struct PlaneDiagram {
  MorseTree tree;
  std::vector<DiagramSegment> segments;
};

// Torical data glued to one segment.
struct TorusData {
  Scalar a, b, m;
};

struct BuildingData {
  PlaneDiagram diagram;
  std::vector<TorusData> tori;
};

struct BuildViolation {
  std::string code;    // "tree", "a", "b", "measure_match", "torus"
  std::string detail;
};

// Checks conditions a and b, the measure matching between sphere and torus
// segments, and |a_j| + |b_j| > m_j.  Violations are data, not faults.
std::vector<BuildViolation> ValidateBuildingData(const BuildingData& data);

// The derived marker event log along the tree, bottom to top.
std::vector<PsiEvent> PsiEventLog(const PlaneDiagram& pd);

// A saddle of the glued surface: the four boundary squares its separatrices
// connect to, in cyclic order (incoming, outgoing, incoming, outgoing).
// Cyclic rotations are the same type.
struct SaddleType {
  std::array<int, 4> idx;

  bool SameType(const SaddleType& o) const;
  // Positions of cyclically adjacent equal pairs (jj..), up to rotation.
  int AdjacentEqualPairs() const;
  bool AllDistinct() const;
  std::string Str() const;
};

struct GluedSurface {
  int genus = 0;
  std::vector<SaddleType> saddles;
  int t = 0;  // double-boundary saddles <jjkk>
  int r = 0;  // all-distinct saddles <jklm>
  int boundary = 0;  // saddles <jjkl> with exactly one equal pair
  std::vector<int> selected;  // indices j of the double-boundary saddles
};

// Measure-preserving gluing: each center yields one double-boundary saddle,
// each free segment end one boundary saddle, each sphere saddle one
// all-nonboundary saddle.  The saddle total must be exactly 2g - 2.
GluedSurface Glue(const BuildingData& data);

struct Classification {
  bool minimal = false;
  bool simple = false;
  int rank = 0;
  bool maximal = false;
  std::vector<int> selected;
  std::vector<int> cycle_type;  // (l_1, ..., l_f) when maximal
};

// Classifies by saddle inventory.  A maximal inventory on odd genus (or an
// odd pairing cycle) is a classification error.
Classification Classify(const GluedSurface& gs);

struct MinimalTypeInstance {
  char type;  // 'a', 'b' or 'c'
  BuildingData data;
};

// The minimal-foliation plane diagram types available at genus g:
// a (one length-2 cycle) for g >= 2, b (two pairs) for g >= 4,
// c (chain of three) for g >= 3; each returned as a concrete valid instance.
std::vector<MinimalTypeInstance> MinimalTypes(int g);

// Input of the genus-4 maximal flux check: the eight visible transition
// measures m_kl for (k, l) neighbors in the cyclic order 1234, plus the
// boundary measures |A_1..A_4|.
struct FluxData {
  // Keys are two-digit codes 12, 14, 32, 34 (north) and 21, 23, 41, 43
  // (south).
  std::map<int, Scalar> m;
  std::array<Scalar, 4> A;
};

struct FluxResult {
  Scalar flux;
  std::string direction;  // "clockwise", "counterclockwise" or "degenerate"
};

// Verifies the conservation laws, the alternating-sum identity
// A1 - A2 + A3 - A4 = 0 and the constancy of the asymmetry m_kl - m_lk,
// naming the first failing identity in the error.
FluxResult FluxCheck(const FluxData& data);

}  // namespace builder
}  // namespace streetflow

#endif  // STREETFLOW_BUILDER_H_
