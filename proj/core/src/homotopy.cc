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

#include "streetflow/homotopy.h"

#include <algorithm>

namespace streetflow {
namespace homotopy {
namespace {

// phi table in street-index order (1, 0, 2) x (1, 0, 2), row = first printed
// label, column = second.  kappa is spelled out so entries are plain free
// words.
const GroupWord& PhiEntry(int row, int col) {
  static const std::array<std::array<GroupWord, 3>, 3> kTable = [] {
    std::array<std::array<GroupWord, 3>, 3> t;
    // Row 1: 11', 10', 12'
    t[0][0] = GroupWord{kA1, kB1, kA1, -kB1, -kA1, -kA2};  // a1* k^-1 a2*^-1
    t[0][1] = GroupWord{kA1, kB1, -kA2};
    t[0][2] = GroupWord{kB1, -kA2};
    // Row 0: 01', 00', 02'
    t[1][0] = GroupWord{kA1, -kB2, -kA2};
    t[1][1] = GroupWord{kA1, kB1, kA1, kB1, -kA1, -kB1, -kB2, -kA2};
    t[1][2] = GroupWord{kB1, kA1, kB1, -kA1, -kB1, -kB2, -kA2};
    // Row 2: 21', 20', 22'
    t[2][0] = GroupWord{kA1, -kB2};
    t[2][1] = GroupWord{kA1, kB1, kA1, kB1, -kA1, -kB1, -kB2};
    t[2][2] = GroupWord{kB1, kA1, kB1, -kA1, -kB1, -kB2};
    return t;
  }();
  return kTable[transition::StreetSlot(row)][transition::StreetSlot(col)];
}

// The sixteen >half-relator matches for Dehn reduction are generated from
// the cyclic rotations of the relator and its inverse.
const std::vector<std::vector<int>>& RelatorRotations() {
  static const std::vector<std::vector<int>> kRotations = [] {
    const std::vector<int> r = {kA1, kB1, -kA1, -kB1, kA2, kB2, -kA2, -kB2};
    std::vector<std::vector<int>> rots;
    std::vector<int> ri(r.rbegin(), r.rend());
    for (int& l : ri) l = -l;
    for (const auto& base : {r, ri}) {
      for (size_t s = 0; s < base.size(); ++s) {
        std::vector<int> rot;
        for (size_t i = 0; i < base.size(); ++i) {
          rot.push_back(base[(s + i) % base.size()]);
        }
        rots.push_back(rot);
      }
    }
    return rots;
  }();
  return kRotations;
}

}  // namespace

const std::vector<std::string>& LetterNames() {
  static const std::vector<std::string> kNames = {"a1*", "b1*", "a2*", "b2*"};
  return kNames;
}

HomologyClass4 Abelianize(const GroupWord& w) {
  const auto v = w.Abelianize(4);
  return {v[0], v[1], v[2], v[3]};
}

GroupWord Kappa() { return GroupWord{kA1, kB1, -kA1, -kB1}; }

GroupWord Delta() { return Kappa().Inverse(); }

GroupWord Phi(int alpha, int beta) { return PhiEntry(alpha, beta); }

GroupWord PsiSamePlane(int src, int dst, int plane) {
  if (plane == 1) {
    if (src == 0 && dst == 2) return GroupWord{kA1};
    if (src == 1 && dst == 0) return GroupWord{-kB1};
    if (src == 1 && dst == 2) return GroupWord{-kB1, kA1};
  } else if (plane == 2) {
    if (src == 0 && dst == 1) return GroupWord{kA2};
    if (src == 2 && dst == 0) return GroupWord{-kB2};
    if (src == 2 && dst == 1) return GroupWord{-kB2, kA2};
  }
  throw ValidationError("same-plane pass (" + std::to_string(src) + "," +
                        std::to_string(dst) + ") has zero measure");
}

GroupWord Represent(const semigroup::SemigroupWord& w,
                    transition::TopType type, bool reversed) {
  if (w.is_zero()) throw ValidationError("cannot represent the zero word");
  const auto& pairs = transition::ExpectedStreetPairs(type);
  GroupWord out;
  for (int q : w.letters) {
    if (q < 1 || q > 5) throw ValidationError("letter outside 1..5");
    const auto [alpha, beta] = pairs[q - 1];
    out = out * Phi(beta, alpha);
  }
  return reversed ? out.Inverse() : out;
}

HomologyClass4 StreetHomology(int street, int plane, bool positive_time) {
  if (plane != 1 && plane != 2) throw ValidationError("plane must be 1 or 2");
  HomologyClass4 h{0, 0, 0, 0};
  const int base = plane == 1 ? 0 : 2;
  // Positive-time plane-2 passes are the inverses of the basis letters,
  // since [a*_2], [b*_2] are the negative-time classes.
  const std::int64_t sign = (plane == 1) == positive_time ? 1 : -1;
  switch (street) {
    case 1:
      h[base] = sign;
      break;
    case 2:
      h[base + 1] = sign;
      break;
    case 0:
      h[base] = sign;
      h[base + 1] = sign;
      break;
    default:
      throw ValidationError("street index must be 1, 0 or 2");
  }
  return h;
}

GroupWord DehnReduce(GroupWord w) {
  const auto& rotations = RelatorRotations();
  bool progressed = true;
  while (progressed && w.length() >= 5) {
    progressed = false;
    const auto& letters = w.letters();
    for (size_t i = 0; !progressed && i < letters.size(); ++i) {
      for (const auto& rot : rotations) {
        size_t match = 0;
        while (match < rot.size() && i + match < letters.size() &&
               letters[i + match] == rot[match]) {
          ++match;
        }
        if (match <= rot.size() / 2) continue;
        // letters[i .. i+match) equals rot[0 .. match); replace it with the
        // inverse of the remainder of the relator, which is shorter.
        GroupWord next;
        for (size_t j = 0; j < i; ++j) next.Append(letters[j]);
        for (size_t j = rot.size(); j > match; --j) next.Append(-rot[j - 1]);
        for (size_t j = i + match; j < letters.size(); ++j) {
          next.Append(letters[j]);
        }
        w = std::move(next);
        progressed = true;
        break;
      }
    }
  }
  return w;
}

bool SurfaceEqual(const GroupWord& x, const GroupWord& y) {
  return DehnReduce(x * y.Inverse()).empty();
}

}  // namespace homotopy
}  // namespace streetflow
