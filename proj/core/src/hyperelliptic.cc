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

#include "streetflow/hyperelliptic.h"

#include <algorithm>
#include <sstream>

namespace streetflow {
namespace hyper {
namespace {

// Sign changes in a sign sequence, zeros skipped.
int Variations(const std::vector<int>& signs) {
  int count = 0;
  int last = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (last != 0 && s != last) ++count;
    last = s;
  }
  return count;
}

std::vector<RatPoly> SturmChain(const RatPoly& p) {
  std::vector<RatPoly> chain;
  chain.push_back(p);
  chain.push_back(p.Derivative());
  while (!chain.back().is_zero() && chain.back().degree() > 0) {
    RatPoly next = -chain[chain.size() - 2].Rem(chain.back());
    if (next.is_zero()) break;
    chain.push_back(std::move(next));
  }
  return chain;
}

}  // namespace

RatPoly::RatPoly(std::vector<mpq_class> coeffs) : coeffs_(std::move(coeffs)) {
  Trim();
}

void RatPoly::Trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

RatPoly RatPoly::FromString(const std::string& comma_separated) {
  std::vector<mpq_class> coeffs;
  std::stringstream ss(comma_separated);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto begin = item.find_first_not_of(" \t");
    const auto end = item.find_last_not_of(" \t");
    if (begin == std::string::npos) {
      throw ValidationError("empty coefficient in polynomial literal");
    }
    coeffs.push_back(ParseRational(item.substr(begin, end - begin + 1)));
  }
  return RatPoly(std::move(coeffs));
}

Scalar RatPoly::Eval(const Scalar& x) const {
  Scalar acc(0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc = acc * x + Scalar(*it);
  }
  return acc;
}

int RatPoly::SignAtMinusInf() const {
  if (is_zero()) return 0;
  const int lead = sgn(coeffs_.back());
  return degree() % 2 == 0 ? lead : -lead;
}

int RatPoly::SignAtPlusInf() const {
  return is_zero() ? 0 : sgn(coeffs_.back());
}

RatPoly RatPoly::Derivative() const {
  std::vector<mpq_class> out;
  for (size_t i = 1; i < coeffs_.size(); ++i) {
    out.push_back(mpq_class(static_cast<long>(i)) * coeffs_[i]);
  }
  return RatPoly(std::move(out));
}

RatPoly RatPoly::operator-() const {
  std::vector<mpq_class> out = coeffs_;
  for (auto& c : out) c = -c;
  return RatPoly(std::move(out));
}

RatPoly RatPoly::operator+(const RatPoly& o) const {
  std::vector<mpq_class> out(std::max(coeffs_.size(), o.coeffs_.size()), 0);
  for (size_t i = 0; i < coeffs_.size(); ++i) out[i] += coeffs_[i];
  for (size_t i = 0; i < o.coeffs_.size(); ++i) out[i] += o.coeffs_[i];
  return RatPoly(std::move(out));
}

RatPoly RatPoly::operator*(const RatPoly& o) const {
  if (is_zero() || o.is_zero()) return RatPoly();
  std::vector<mpq_class> out(coeffs_.size() + o.coeffs_.size() - 1, 0);
  for (size_t i = 0; i < coeffs_.size(); ++i) {
    for (size_t j = 0; j < o.coeffs_.size(); ++j) {
      out[i + j] += coeffs_[i] * o.coeffs_[j];
    }
  }
  return RatPoly(std::move(out));
}

RatPoly RatPoly::Rem(const RatPoly& o) const {
  if (o.is_zero()) throw ValidationError("polynomial division by zero");
  std::vector<mpq_class> rem = coeffs_;
  const int od = o.degree();
  const mpq_class& lead = o.coeffs_.back();
  while (static_cast<int>(rem.size()) - 1 >= od) {
    const mpq_class factor = rem.back() / lead;
    const size_t shift = rem.size() - 1 - od;
    for (int i = 0; i <= od; ++i) rem[shift + i] -= factor * o.coeffs_[i];
    while (!rem.empty() && rem.back() == 0) rem.pop_back();
    if (rem.empty()) break;
  }
  return RatPoly(std::move(rem));
}

RatPoly RatPoly::Gcd(const RatPoly& o) const {
  RatPoly x = *this, y = o;
  while (!y.is_zero()) {
    RatPoly r = x.Rem(y);
    x = std::move(y);
    y = std::move(r);
  }
  if (!x.is_zero()) {
    // Monic normal form.
    std::vector<mpq_class> c = x.coeffs();
    const mpq_class lead = c.back();
    for (auto& q : c) q /= lead;
    return RatPoly(std::move(c));
  }
  return x;
}

RatPoly RatPoly::SquareFreePart() const {
  if (is_zero() || degree() == 0) return *this;
  const RatPoly g = Gcd(Derivative());
  if (g.degree() == 0) return *this;
  // Exact division p / g.
  std::vector<mpq_class> quot;
  std::vector<mpq_class> rem = coeffs_;
  const int gd = g.degree();
  const mpq_class& lead = g.coeffs().back();
  while (static_cast<int>(rem.size()) - 1 >= gd) {
    const mpq_class factor = rem.back() / lead;
    const size_t shift = rem.size() - 1 - gd;
    if (quot.size() < shift + 1) quot.resize(shift + 1, 0);
    quot[shift] = factor;
    for (int i = 0; i <= gd; ++i) rem[shift + i] -= factor * g.coeffs()[i];
    while (!rem.empty() && rem.back() == 0) rem.pop_back();
    if (rem.empty()) break;
  }
  return RatPoly(std::move(quot));
}

std::string RatPoly::Str() const {
  if (is_zero()) return "0";
  std::string s;
  for (size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    if (!s.empty()) s += " + ";
    s += coeffs_[i].get_str();
    if (i > 0) s += "*z^" + std::to_string(i);
  }
  return s;
}

int CountRootsOpen(const RatPoly& p, const MaybeScalar& lo,
                   const MaybeScalar& hi) {
  if (p.is_zero()) throw ValidationError("root count of the zero polynomial");
  if (p.degree() == 0) return 0;
  if (lo && p.SignAt(*lo) == 0) {
    throw ValidationError("interval endpoint is a root");
  }
  if (hi && p.SignAt(*hi) == 0) {
    throw ValidationError("interval endpoint is a root");
  }
  if (lo && hi && !(*lo < *hi)) return 0;
  const RatPoly sf = p.SquareFreePart();
  const auto chain = SturmChain(sf);
  std::vector<int> at_lo, at_hi;
  for (const RatPoly& q : chain) {
    at_lo.push_back(lo ? q.SignAt(*lo) : q.SignAtMinusInf());
    at_hi.push_back(hi ? q.SignAt(*hi) : q.SignAtPlusInf());
  }
  return Variations(at_lo) - Variations(at_hi);
}

void ValidateCurve(const RealHyperelliptic& c) {
  if (c.roots.size() < 4 || c.roots.size() % 2 != 0) {
    throw ValidationError("need an even number >= 4 of branch points");
  }
  for (size_t i = 0; i + 1 < c.roots.size(); ++i) {
    if (!(c.roots[i] < c.roots[i + 1])) {
      throw ValidationError("branch points must be strictly increasing");
    }
  }
}

void ValidateForm(const RealHyperelliptic& c, const FormSpec& f) {
  if (f.u.is_zero() && f.v.is_zero()) {
    throw ValidationError("u and v cannot both vanish");
  }
  const int g = c.genus();
  if (f.u.degree() > g - 1 || f.v.degree() > g - 1) {
    throw ValidationError("deg(u), deg(v) must be at most g - 1");
  }
  for (const Scalar& z : c.roots) {
    if (f.u.SignAt(z) == 0) {
      throw ValidationError("u vanishes at a branch point");
    }
    if (f.v.SignAt(z) == 0) {
      throw ValidationError("v vanishes at a branch point");
    }
  }
}

namespace {

// Root count in the open interior of the named segment; constants have none.
int RootsInside(const RatPoly& p, const RealHyperelliptic& c, int lo_index,
                int hi_index) {
  if (p.is_zero() || p.degree() < 1) return 0;
  return CountRootsOpen(p, c.roots[lo_index - 1], c.roots[hi_index - 1]);
}

}  // namespace

std::string FoliationClassName(FoliationClass c) {
  switch (c) {
    case FoliationClass::kT0:
      return "T0";
    case FoliationClass::kT:
      return "T";
    case FoliationClass::kT2:
      return "T2";
    default:
      return "inconclusive";
  }
}

ClassVerdict ClassifyClass(const RealHyperelliptic& c, const FormSpec& f) {
  ValidateCurve(c);
  ValidateForm(c, f);
  const int g = c.genus();
  ClassVerdict out;

  // Candidate segments in line order: c1 a1 c2 a2 ... c_{g+1}; the
  // R-imaginary c-segments are killed by zeros of v, the R-real a-segments
  // by zeros of u.
  struct Candidate {
    NamedSegment seg;
    bool survives;
  };
  std::vector<Candidate> line;
  for (int q = 1; q <= g + 1; ++q) {
    NamedSegment cs{"c" + std::to_string(q), 2 * q - 1, 2 * q};
    line.push_back({cs, RootsInside(f.v, c, cs.lo_index, cs.hi_index) == 0});
    if (q <= g) {
      NamedSegment as{"a" + std::to_string(q), 2 * q, 2 * q + 1};
      line.push_back({as, RootsInside(f.u, c, as.lo_index, as.hi_index) == 0});
    }
  }
  for (const auto& cand : line) {
    if (cand.survives) out.surviving.push_back(cand.seg);
  }

  // Greedy disjoint pick: consecutive candidates share a branch point.
  std::vector<NamedSegment> picked;
  int last_end = 0;
  for (const auto& cand : line) {
    if (!cand.survives || cand.seg.lo_index <= last_end) continue;
    picked.push_back(cand.seg);
    last_end = cand.seg.hi_index;
  }
  const bool t0 = static_cast<int>(picked.size()) >= g;

  const auto u_free = [&](int lo, int hi) {
    return RootsInside(f.u, c, lo, hi) == 0;
  };
  const auto v_free = [&](int lo, int hi) {
    return RootsInside(f.v, c, lo, hi) == 0;
  };

  if (g <= 2) {
    // Class T needs v-free outer c-segments and u-free a-segments: for g = 2
    // these are [z1 z2], [z5 z6] and [z2 z3], [z4 z5].
    bool t_class = v_free(1, 2) && v_free(2 * g + 1, 2 * g + 2);
    for (int j = 1; j <= g && t_class; ++j) {
      t_class = u_free(2 * j, 2 * j + 1);
    }
    if (t_class) {
      out.clazz = FoliationClass::kT;
      out.chosen_cycles.push_back({"b1", {"c1", 1, 2}});
      for (int j = 1; j <= g; ++j) {
        out.chosen_cycles.push_back(
            {"a" + std::to_string(j),
             {"a" + std::to_string(j), 2 * j, 2 * j + 1}});
      }
      if (g == 2) {
        out.chosen_cycles.push_back({"b2", {"c3", 5, 6}});
      }
      return out;
    }
  } else {
    // Class T2 windows.  Allowed intervals for zeros of v: (-inf, z1), the
    // interiors of c2..cg, (z_{2g+2}, +inf); for zeros of u: (-inf, z2), the
    // same middle windows, (z_{2g+2}, +inf).  The printed u-list drops a
    // parenthesis; it is restored parallel to the v-list.
    out.notes.push_back(
        "u-window list repaired to mirror the v-window pattern");
    bool t2 = v_free(1, 2) && v_free(2 * g + 1, 2 * g + 2);
    for (int j = 1; j <= g && t2; ++j) {
      t2 = u_free(2 * j, 2 * j + 1) && v_free(2 * j, 2 * j + 1);
    }
    if (t2) t2 = u_free(2 * g + 1, 2 * g + 2);
    if (t2) {
      out.clazz = FoliationClass::kT2;
      if (g == 3) {
        out.chosen_cycles = {
            {"a1", {"a1", 2, 3}}, {"a2", {"c4", 7, 8}}, {"a3", {"a2", 4, 5}},
            {"b1", {"c1", 1, 2}}, {"b2", {"a3", 6, 7}},
        };
      }
      return out;
    }
  }

  if (t0) {
    out.clazz = FoliationClass::kT0;
    for (int j = 0; j < g; ++j) {
      out.chosen_cycles.push_back(
          {"a" + std::to_string(j + 1), picked[j]});
    }
    return out;
  }
  out.clazz = FoliationClass::kInconclusive;
  return out;
}

StabilityReport PerturbationNote(const RealHyperelliptic& c,
                                 const FormSpec& f) {
  ValidateCurve(c);
  if (f.u.degree() < 1 && f.v.degree() < 1) {
    return {true, "constant coefficients: transversality is open"};
  }
  for (const Scalar& z : c.roots) {
    if ((!f.u.is_zero() && f.u.SignAt(z) == 0) ||
        (!f.v.is_zero() && f.v.SignAt(z) == 0)) {
      return {false, "a zero of u or v sits exactly on a branch point"};
    }
  }
  return {true, "all zeros of u and v clear the branch points"};
}

}  // namespace hyper
}  // namespace streetflow
