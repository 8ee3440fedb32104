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

#ifndef STREETFLOW_HYPERELLIPTIC_H_
#define STREETFLOW_HYPERELLIPTIC_H_

#include <optional>
#include <string>
#include <vector>

#include "streetflow/scalar.h"

namespace streetflow {
namespace hyper {

// Dense polynomial over Q, coefficients by ascending degree.
class RatPoly {
 public:
  RatPoly() = default;
  explicit RatPoly(std::vector<mpq_class> coeffs);
  static RatPoly Constant(const mpq_class& c) { return RatPoly({c}); }
  static RatPoly FromString(const std::string& comma_separated);

  const std::vector<mpq_class>& coeffs() const { return coeffs_; }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }

  Scalar Eval(const Scalar& x) const;
  int SignAt(const Scalar& x) const { return Eval(x).sign(); }
  int SignAtMinusInf() const;
  int SignAtPlusInf() const;

  RatPoly Derivative() const;
  RatPoly operator-() const;
  RatPoly operator+(const RatPoly& o) const;
  RatPoly operator*(const RatPoly& o) const;
  // Polynomial remainder (exact rational division).
  RatPoly Rem(const RatPoly& o) const;
  RatPoly Gcd(const RatPoly& o) const;
  RatPoly SquareFreePart() const;

  std::string Str() const;

 private:
  void Trim();
  std::vector<mpq_class> coeffs_;
};

// Endpoint of a root-counting interval; nullopt encodes the infinity of the
// matching side.
using MaybeScalar = std::optional<Scalar>;

// Exact count of real roots in the open interval (lo, hi) by Sturm's chain
// on the square-free part.  Interval endpoints must not be roots.
int CountRootsOpen(const RatPoly& p, const MaybeScalar& lo,
                   const MaybeScalar& hi);

// Real hyperelliptic data: the 2g+2 ordered real branch points.
struct RealHyperelliptic {
  std::vector<Scalar> roots;

  int genus() const { return static_cast<int>(roots.size()) / 2 - 1; }
};

void ValidateCurve(const RealHyperelliptic& c);

// The numerator polynomial P = u + iv of the differential.
struct FormSpec {
  RatPoly u, v;
};

void ValidateForm(const RealHyperelliptic& c, const FormSpec& f);

enum class FoliationClass { kT0, kT, kT2, kInconclusive };

std::string FoliationClassName(FoliationClass c);

struct NamedSegment {
  std::string name;  // "c1", "a2", ...
  int lo_index, hi_index;  // root indices, 1-based
};

struct ClassVerdict {
  FoliationClass clazz = FoliationClass::kInconclusive;
  std::vector<NamedSegment> surviving;
  // A chosen disjoint half-basis when the class is at least T0, or the
  // printed cycle assignment for the g = 3 conclusion.
  std::vector<std::pair<std::string, NamedSegment>> chosen_cycles;
  std::vector<std::string> notes;
};

// Root-condition classification: drop the c-segments holding zeros of v and
// the a-segments holding zeros of u; at least g pairwise disjoint survivors
// give T0.  For g <= 2 the stronger segment conditions give T, for g > 2 the
// window conditions give T2.
ClassVerdict ClassifyClass(const RealHyperelliptic& c, const FormSpec& f);

struct StabilityReport {
  bool stable = false;
  std::string reason;
};

// Whether the verdict survives a small perturbation of P: it does unless a
// zero of u or v sits exactly on a branch point.
StabilityReport PerturbationNote(const RealHyperelliptic& c, const FormSpec& f);

}  // namespace hyper
}  // namespace streetflow

#endif  // STREETFLOW_HYPERELLIPTIC_H_
