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

#include "streetflow/builder.h"

#include <algorithm>
#include <optional>
#include <set>

namespace streetflow {
namespace builder {
namespace {

// Closed height range a segment occupies on one edge, if any.
std::optional<std::pair<Scalar, Scalar>> CoverOnEdge(const MorseTree& tree,
                                                     const DiagramSegment& s,
                                                     int e) {
  bool on_path = false;
  for (int pe : s.edge_path) on_path |= pe == e;
  if (!on_path) return std::nullopt;
  auto [elo, ehi] = tree.EdgeRange(e);
  const Scalar lo = s.lo > elo ? s.lo : elo;
  const Scalar hi = s.hi < ehi ? s.hi : ehi;
  if (!(lo < hi)) return std::nullopt;
  return std::make_pair(lo, hi);
}

bool CoversStrictly(const MorseTree& tree, const DiagramSegment& s, int e,
                    const Scalar& h) {
  const auto range = CoverOnEdge(tree, s, e);
  return range && range->first < h && h < range->second;
}

// Cyclic neighbors with respect to the marker position anchor.
std::pair<int, int> PosNeighbors(const std::vector<const DiagramSegment*>& on,
                                 const mpq_class& anchor) {
  if (on.empty()) throw InternalError("trajectory circle holds no marker");
  const DiagramSegment* succ = nullptr;
  const DiagramSegment* pred = nullptr;
  const DiagramSegment* min_pos = on.front();
  const DiagramSegment* max_pos = on.front();
  for (const DiagramSegment* s : on) {
    if (s->pos < min_pos->pos) min_pos = s;
    if (s->pos > max_pos->pos) max_pos = s;
    if (s->pos > anchor && (!succ || s->pos < succ->pos)) succ = s;
    if (s->pos < anchor && (!pred || s->pos > pred->pos)) pred = s;
  }
  if (!succ) succ = min_pos;  // wrap
  if (!pred) pred = max_pos;
  return {succ->id, pred->id};
}

}  // namespace

int MorseTree::Degree(int v) const {
  int d = 0;
  for (const auto& [x, y] : edges) d += (x == v) + (y == v);
  return d;
}

std::vector<int> MorseTree::Ends() const {
  std::vector<int> out;
  for (int v = 0; v < VertexCount(); ++v) {
    if (Degree(v) == 1) out.push_back(v);
  }
  return out;
}

std::vector<int> MorseTree::InnerVertices() const {
  std::vector<int> out;
  for (int v = 0; v < VertexCount(); ++v) {
    if (Degree(v) == 3) out.push_back(v);
  }
  return out;
}

std::pair<Scalar, Scalar> MorseTree::EdgeRange(int e) const {
  const auto& [x, y] = edges.at(e);
  const Scalar& hx = heights.at(x);
  const Scalar& hy = heights.at(y);
  return hx < hy ? std::make_pair(hx, hy) : std::make_pair(hy, hx);
}

std::vector<BuildViolation> ValidateBuildingData(const BuildingData& data) {
  std::vector<BuildViolation> out;
  const MorseTree& tree = data.diagram.tree;
  const auto& segments = data.diagram.segments;

  // Tree shape: trivalent, connected, distinct heights, saddle condition.
  if (tree.VertexCount() == 0 || tree.edges.empty()) {
    out.push_back({"tree", "empty tree"});
    return out;
  }
  for (int v = 0; v < tree.VertexCount(); ++v) {
    const int d = tree.Degree(v);
    if (d != 1 && d != 3) {
      out.push_back({"tree", "vertex " + std::to_string(v) + " has degree " +
                                 std::to_string(d)});
    }
  }
  {
    std::vector<int> seen(tree.VertexCount(), 0);
    std::vector<int> stack = {0};
    seen[0] = 1;
    while (!stack.empty()) {
      const int v = stack.back();
      stack.pop_back();
      for (const auto& [x, y] : tree.edges) {
        const int w = x == v ? y : y == v ? x : -1;
        if (w >= 0 && !seen[w]) {
          seen[w] = 1;
          stack.push_back(w);
        }
      }
    }
    for (int v = 0; v < tree.VertexCount(); ++v) {
      if (!seen[v]) out.push_back({"tree", "disconnected vertex"});
    }
  }
  for (int v = 0; v < tree.VertexCount(); ++v) {
    for (int w = v + 1; w < tree.VertexCount(); ++w) {
      if (tree.heights[v] == tree.heights[w]) {
        out.push_back({"tree", "equal vertex heights"});
      }
    }
  }
  for (int v : tree.InnerVertices()) {
    Scalar lo = tree.heights[v], hi = tree.heights[v];
    for (const auto& [x, y] : tree.edges) {
      if (x == v || y == v) {
        const Scalar& h = tree.heights[x == v ? y : x];
        if (h < lo) lo = h;
        if (h > hi) hi = h;
      }
    }
    if (!(lo < tree.heights[v] && tree.heights[v] < hi)) {
      out.push_back({"tree", "inner vertex is not a saddle of H"});
    }
  }
  if (!out.empty()) return out;

  // Condition a: monotone branches with positive measure, endpoint heights
  // distinct except the center pairings, saddles untouched, markers of
  // overlapping segments distinct.
  for (const auto& s : segments) {
    if (!(s.lo < s.hi)) out.push_back({"a", "segment of nonpositive measure"});
    if (s.pos < 0 || s.pos >= 1) out.push_back({"a", "marker outside [0,1)"});
    if (s.edge_path.empty()) {
      out.push_back({"a", "segment with empty edge path"});
      continue;
    }
    for (size_t i = 0; i + 1 < s.edge_path.size(); ++i) {
      const auto& e1 = tree.edges.at(s.edge_path[i]);
      const auto& e2 = tree.edges.at(s.edge_path[i + 1]);
      const bool share = e1.first == e2.first || e1.first == e2.second ||
                         e1.second == e2.first || e1.second == e2.second;
      if (!share) out.push_back({"a", "edge path is not connected"});
    }
  }

  std::set<int> center_vertices;
  for (int v : tree.Ends()) center_vertices.insert(v);
  std::map<int, int> ends_at_center;
  std::vector<Scalar> free_heights;
  for (const auto& s : segments) {
    for (const Scalar* endpoint : {&s.lo, &s.hi}) {
      bool at_center = false;
      for (int v : center_vertices) {
        if (tree.heights[v] == *endpoint) {
          ends_at_center[v] += 1;
          at_center = true;
        }
      }
      if (!at_center) {
        for (int v : tree.InnerVertices()) {
          if (tree.heights[v] == *endpoint) {
            out.push_back({"a", "segment end at a saddle height"});
          }
        }
        free_heights.push_back(*endpoint);
      }
    }
  }
  for (int v : center_vertices) {
    if (ends_at_center[v] != 2) {
      out.push_back({"a", "center " + std::to_string(v) + " hosts " +
                              std::to_string(ends_at_center[v]) +
                              " segment ends, needs exactly 2"});
    }
  }
  for (size_t i = 0; i < free_heights.size(); ++i) {
    for (size_t j = i + 1; j < free_heights.size(); ++j) {
      if (free_heights[i] == free_heights[j]) {
        out.push_back({"a", "coinciding free end heights"});
      }
    }
  }
  for (size_t i = 0; i < segments.size(); ++i) {
    for (size_t j = i + 1; j < segments.size(); ++j) {
      for (int e = 0; e < static_cast<int>(tree.edges.size()); ++e) {
        const auto ci = CoverOnEdge(tree, segments[i], e);
        const auto cj = CoverOnEdge(tree, segments[j], e);
        if (!ci || !cj) continue;
        const Scalar lo = ci->first > cj->first ? ci->first : cj->first;
        const Scalar hi = ci->second < cj->second ? ci->second : cj->second;
        if (lo < hi && segments[i].pos == segments[j].pos) {
          out.push_back({"a", "overlapping segments share a marker position"});
        }
      }
    }
  }

  // Condition b: every trajectory circle (edge point) meets a segment.
  for (int e = 0; e < static_cast<int>(tree.edges.size()); ++e) {
    auto [elo, ehi] = tree.EdgeRange(e);
    std::vector<std::pair<Scalar, Scalar>> covers;
    for (const auto& s : segments) {
      if (const auto c = CoverOnEdge(tree, s, e)) covers.push_back(*c);
    }
    std::sort(covers.begin(), covers.end(),
              [](const auto& x, const auto& y) { return x.first < y.first; });
    Scalar reach = elo;
    for (const auto& [lo, hi] : covers) {
      if (lo > reach) break;
      if (hi > reach) reach = hi;
    }
    if (reach < ehi) {
      out.push_back({"b", "edge " + std::to_string(e) +
                              " has an uncovered trajectory band"});
    }
  }

  // Torical data.
  if (data.tori.size() != segments.size()) {
    out.push_back({"measure_match", "torus count differs from segment count"});
  } else {
    for (size_t j = 0; j < segments.size(); ++j) {
      if (data.tori[j].m != segments[j].measure()) {
        out.push_back(
            {"measure_match", "m_" + std::to_string(j + 1) + " differs"});
      }
      if (data.tori[j].a.sign() <= 0 || data.tori[j].b.sign() <= 0 ||
          data.tori[j].m.sign() <= 0) {
        out.push_back({"torus", "nonpositive measures in torus " +
                                    std::to_string(j + 1)});
      } else if (!(data.tori[j].m < data.tori[j].a + data.tori[j].b)) {
        out.push_back({"torus", "|a|+|b| <= m in torus " +
                                    std::to_string(j + 1)});
      }
    }
  }
  return out;
}

std::vector<PsiEvent> PsiEventLog(const PlaneDiagram& pd) {
  std::vector<PsiEvent> events;
  std::set<int> centers;
  for (int v : pd.tree.Ends()) centers.insert(v);
  std::map<std::string, std::vector<int>> at_center;
  for (const auto& s : pd.segments) {
    for (const Scalar* endpoint : {&s.lo, &s.hi}) {
      bool center = false;
      for (int v : centers) {
        if (pd.tree.heights[v] == *endpoint) center = true;
      }
      if (center) continue;
      events.push_back(
          {*endpoint, endpoint == &s.lo ? "appear" : "disappear", {s.id}});
    }
  }
  for (int v : centers) {
    PsiEvent ev{pd.tree.heights[v], "meet-center", {}};
    for (const auto& s : pd.segments) {
      if (s.lo == ev.height || s.hi == ev.height) ev.segments.push_back(s.id);
    }
    if (!ev.segments.empty()) events.push_back(ev);
  }
  for (int v : pd.tree.InnerVertices()) {
    PsiEvent ev{pd.tree.heights[v], "saddle", {}};
    for (const auto& s : pd.segments) {
      if (s.lo < ev.height && ev.height < s.hi) ev.segments.push_back(s.id);
    }
    events.push_back(ev);
  }
  std::sort(events.begin(), events.end(),
            [](const PsiEvent& x, const PsiEvent& y) {
              return x.height < y.height;
            });
  return events;
}

bool SaddleType::SameType(const SaddleType& o) const {
  for (int r = 0; r < 4; ++r) {
    bool same = true;
    for (int i = 0; i < 4; ++i) same &= idx[(i + r) % 4] == o.idx[i];
    if (same) return true;
  }
  return false;
}

int SaddleType::AdjacentEqualPairs() const {
  int pairs = 0;
  for (int i = 0; i < 4; ++i) pairs += idx[i] == idx[(i + 1) % 4];
  return pairs;
}

bool SaddleType::AllDistinct() const {
  for (int i = 0; i < 4; ++i) {
    for (int j = i + 1; j < 4; ++j) {
      if (idx[i] == idx[j]) return false;
    }
  }
  return true;
}

std::string SaddleType::Str() const {
  std::string s = "<";
  for (int i : idx) s += std::to_string(i);
  return s + ">";
}

GluedSurface Glue(const BuildingData& data) {
  {
    const auto violations = ValidateBuildingData(data);
    if (!violations.empty()) {
      throw ValidationError("building data invalid: " + violations[0].code +
                            " (" + violations[0].detail + ")");
    }
  }
  const MorseTree& tree = data.diagram.tree;
  const auto& segments = data.diagram.segments;
  GluedSurface gs;
  gs.genus = static_cast<int>(data.tori.size());

  // Centers: the two segment ends meeting there close up into one
  // double-boundary saddle <jjkk>.
  for (int v : tree.Ends()) {
    std::vector<int> meet;
    for (const auto& s : segments) {
      if (s.lo == tree.heights[v] || s.hi == tree.heights[v]) {
        meet.push_back(s.id);
      }
    }
    if (meet.size() != 2) throw InternalError("center without its two ends");
    gs.saddles.push_back(SaddleType{{meet[0], meet[0], meet[1], meet[1]}});
  }

  // Free segment ends: the level circle through the end meets the cyclic
  // neighbors of the segment's marker, giving a boundary saddle <jjkl>.
  for (const auto& s : segments) {
    for (const bool top : {false, true}) {
      const Scalar& h = top ? s.hi : s.lo;
      bool at_center = false;
      for (int v : tree.Ends()) at_center |= tree.heights[v] == h;
      if (at_center) continue;
      const int edge = top ? s.edge_path.back() : s.edge_path.front();
      std::vector<const DiagramSegment*> on;
      for (const auto& other : segments) {
        if (other.id != s.id && CoversStrictly(tree, other, edge, h)) {
          on.push_back(&other);
        }
      }
      const auto [succ, pred] = PosNeighbors(on, s.pos);
      gs.saddles.push_back(SaddleType{{s.id, s.id, succ, pred}});
    }
  }

  // Sphere saddles: the singular level at an inner vertex is a wedge of two
  // loops around the like-side edges; each loop contributes its markers
  // nearest to the pinch (anchor position 0).
  for (int v : tree.InnerVertices()) {
    std::vector<int> up, down;
    for (int e = 0; e < static_cast<int>(tree.edges.size()); ++e) {
      const auto& [x, y] = tree.edges[e];
      if (x != v && y != v) continue;
      const int w = x == v ? y : x;
      (tree.heights[w] > tree.heights[v] ? up : down).push_back(e);
    }
    const std::vector<int>& loops = up.size() == 2 ? up : down;
    if (loops.size() != 2) throw InternalError("inner vertex is not trivalent");
    std::array<int, 4> idx{};
    int at = 0;
    for (int e : loops) {
      std::vector<const DiagramSegment*> on;
      for (const auto& s : segments) {
        if (CoversStrictly(tree, s, e, tree.heights[v])) on.push_back(&s);
      }
      const auto [succ, pred] = PosNeighbors(on, mpq_class(0));
      idx[at++] = succ;
      idx[at++] = pred;
    }
    gs.saddles.push_back(SaddleType{idx});
  }

  if (static_cast<int>(gs.saddles.size()) != 2 * gs.genus - 2) {
    throw InternalError("saddle count " + std::to_string(gs.saddles.size()) +
                        " differs from 2g-2");
  }

  std::map<int, int> in_doubles;
  for (const auto& s : gs.saddles) {
    const int pairs = s.AdjacentEqualPairs();
    if (pairs >= 2) {
      ++gs.t;
      std::set<int> uniq(s.idx.begin(), s.idx.end());
      for (int i : uniq) in_doubles[i] += 1;
    } else if (s.AllDistinct()) {
      ++gs.r;
    } else {
      ++gs.boundary;
    }
  }
  for (const auto& [index, count] : in_doubles) {
    if (count >= 2) gs.selected.push_back(index);
  }
  return gs;
}

Classification Classify(const GluedSurface& gs) {
  Classification c;
  c.rank = gs.r;
  c.simple = gs.t == 2;
  c.minimal = gs.r == 0 && gs.t + gs.boundary ==
                              static_cast<int>(gs.saddles.size());
  c.selected = gs.selected;
  c.maximal = gs.r == gs.genus - 2 && gs.t == gs.genus;
  if (c.maximal) {
    if (gs.genus % 2 != 0) {
      throw ValidationError("maximal saddle inventory on odd genus " +
                            std::to_string(gs.genus));
    }
    // Pairing cycles of the double-boundary saddles.
    std::multimap<int, int> adj;
    std::set<int> nodes;
    for (const auto& s : gs.saddles) {
      if (s.AdjacentEqualPairs() < 2) continue;
      std::set<int> uniq(s.idx.begin(), s.idx.end());
      if (uniq.size() != 2) continue;
      const int a = *uniq.begin();
      const int b = *uniq.rbegin();
      adj.insert({a, b});
      adj.insert({b, a});
      nodes.insert(a);
      nodes.insert(b);
    }
    std::set<int> seen;
    for (int start : nodes) {
      if (seen.count(start)) continue;
      int len = 0;
      std::vector<int> stack = {start};
      seen.insert(start);
      std::set<int> component = {start};
      while (!stack.empty()) {
        const int v = stack.back();
        stack.pop_back();
        auto [lo, hi] = adj.equal_range(v);
        for (auto it = lo; it != hi; ++it) {
          ++len;
          if (!component.count(it->second)) {
            component.insert(it->second);
            seen.insert(it->second);
            stack.push_back(it->second);
          }
        }
      }
      len /= 2;  // each pairing counted from both ends
      if (len % 2 != 0) {
        throw ValidationError("odd pairing cycle of boundary saddles");
      }
      c.cycle_type.push_back(len / 2);
    }
    std::sort(c.cycle_type.rbegin(), c.cycle_type.rend());
  }
  return c;
}

std::vector<MinimalTypeInstance> MinimalTypes(int g) {
  if (g < 2) throw ValidationError("minimal types need genus >= 2");
  std::vector<MinimalTypeInstance> out;

  const auto base_tree = [] {
    MorseTree tree;
    tree.heights = {Scalar(0), Scalar(1)};
    tree.edges = {{0, 1}};
    return tree;
  };
  const auto finish = [g](BuildingData& data, int used) {
    // The g - used disjoint low segments, stacked below every other free
    // end with fresh marker positions.
    for (int j = used + 1; j <= g; ++j) {
      DiagramSegment s;
      s.id = j;
      s.edge_path = {0};
      s.lo = Scalar(3 * j, 10 * static_cast<unsigned long>(g));
      s.hi = Scalar(3 * j + 1, 10 * static_cast<unsigned long>(g));
      s.pos = mpq_class(7 * static_cast<long>(g) + j,
                        8 * static_cast<long>(g) + 8);
      s.pos.canonicalize();
      data.diagram.segments.push_back(s);
    }
    for (const auto& s : data.diagram.segments) {
      data.tori.push_back({s.measure(), s.measure(), s.measure()});
      // a = b = m keeps |a| + |b| > m; the flows themselves are not modeled
      // here.
    }
  };

  {
    BuildingData a;
    a.diagram.tree = base_tree();
    a.diagram.segments = {
        {1, {0}, Scalar(0), Scalar(1), mpq_class(0)},
        {2, {0}, Scalar(0), Scalar(1), mpq_class(1, 2)},
    };
    finish(a, 2);
    out.push_back({'a', std::move(a)});
  }
  if (g >= 3) {
    BuildingData c;
    c.diagram.tree = base_tree();
    c.diagram.segments = {
        {1, {0}, Scalar(0), Scalar(3, 5), mpq_class(0)},
        {2, {0}, Scalar(0), Scalar(1), mpq_class(1, 4)},
        {3, {0}, Scalar(2, 5), Scalar(1), mpq_class(1, 2)},
    };
    finish(c, 3);
    out.push_back({'c', std::move(c)});
  }
  if (g >= 4) {
    BuildingData b;
    b.diagram.tree = base_tree();
    b.diagram.segments = {
        {1, {0}, Scalar(0), Scalar(3, 5), mpq_class(0)},
        {2, {0}, Scalar(0), Scalar(7, 10), mpq_class(1, 4)},
        {3, {0}, Scalar(1, 2), Scalar(1), mpq_class(1, 2)},
        {4, {0}, Scalar(2, 5), Scalar(1), mpq_class(3, 4)},
    };
    finish(b, 4);
    out.push_back({'b', std::move(b)});
  }
  std::sort(out.begin(), out.end(),
            [](const MinimalTypeInstance& x, const MinimalTypeInstance& y) {
              return x.type < y.type;
            });
  return out;
}

FluxResult FluxCheck(const FluxData& data) {
  static const int kNorth[] = {12, 14, 32, 34};
  static const int kSouth[] = {21, 23, 41, 43};
  for (const int code : kNorth) {
    if (!data.m.count(code)) {
      throw ValidationError("missing north transition m_" +
                            std::to_string(code));
    }
  }
  for (const int code : kSouth) {
    if (!data.m.count(code)) {
      throw ValidationError("missing south transition m_" +
                            std::to_string(code));
    }
  }
  for (const auto& [code, value] : data.m) {
    const bool north = std::find(std::begin(kNorth), std::end(kNorth), code) !=
                       std::end(kNorth);
    const bool south = std::find(std::begin(kSouth), std::end(kSouth), code) !=
                       std::end(kSouth);
    if (!north && !south) {
      throw ValidationError("transition m_" + std::to_string(code) +
                            " is not visible from either pole");
    }
    if (value.sign() < 0) {
      throw ValidationError("negative transition measure m_" +
                            std::to_string(code));
    }
  }
  const auto get = [&data](int k, int l) { return data.m.at(10 * k + l); };
  const auto A = [&data](int k) { return data.A[k - 1]; };

  // Conservation: sums over the cyclic neighbors of each index.
  for (int k = 1; k <= 4; ++k) {
    const int prev = k == 1 ? 4 : k - 1;
    const int next = k == 4 ? 1 : k + 1;
    if (get(k, prev) + get(k, next) != A(k)) {
      throw ValidationError("flux identity failed: sum_l m_" +
                            std::to_string(k) + "l = |A_" +
                            std::to_string(k) + "|");
    }
    if (get(prev, k) + get(next, k) != A(k)) {
      throw ValidationError("flux identity failed: sum_k m_k" +
                            std::to_string(k) + " = |A_" + std::to_string(k) +
                            "|");
    }
  }
  if (A(1) - A(2) + A(3) - A(4) != Scalar(0)) {
    throw ValidationError("flux identity failed: A1 - A2 + A3 - A4 = 0");
  }
  const Scalar m = get(1, 2) - get(2, 1);
  if (get(2, 3) - get(3, 2) != m || get(3, 4) - get(4, 3) != m ||
      get(4, 1) - get(1, 4) != m) {
    throw ValidationError("flux identity failed: constant asymmetry m");
  }
  FluxResult res{m, "degenerate"};
  if (m.sign() > 0) res.direction = "clockwise";
  if (m.sign() < 0) res.direction = "counterclockwise";
  return res;
}

}  // namespace builder
}  // namespace streetflow
