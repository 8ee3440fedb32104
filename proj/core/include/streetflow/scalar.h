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

#ifndef STREETFLOW_SCALAR_H_
#define STREETFLOW_SCALAR_H_

#include <gmpxx.h>

#include <string>

#include "streetflow/errors.h"

namespace streetflow {

// Parses "num/den" or "num" into a canonical rational.
mpq_class ParseRational(const std::string& s);

// Always prints an explicit denominator: 3 -> "3/1".
std::string RationalString(const mpq_class& q);

// An exact element of Q or of a real quadratic field Q(sqrt(d)):
//
//   value = rat + coef * sqrt(d)
//
// with arbitrary-precision rational parts and d a square-free integer >= 2.
// Rationals are the coef == 0 case and are stored with d == 0, so equal
// values have equal representations.  All arithmetic and every comparison is
// exact; there is no floating-point fast path.
//
// Elements of different irrational fields (distinct d) cannot be combined;
// attempting to do so throws FieldMismatchError.  Rationals combine with
// either field.
class Scalar {
 public:
  Scalar() : d_(0) {}
  Scalar(long n) : rat_(n), d_(0) {}  // NOLINT: implicit by design
  Scalar(long num, unsigned long den) : rat_(num, den), d_(0) {
    rat_.canonicalize();
  }
  explicit Scalar(mpq_class rat) : rat_(std::move(rat)), d_(0) {
    rat_.canonicalize();
  }

  // Validates that d is square-free and >= 2 (unless coef == 0).
  Scalar(mpq_class rat, mpq_class coef, long d);

  static Scalar SqrtOf(long d) { return Scalar(0, 1, d); }
  static Scalar FromString(const std::string& s);

  const mpq_class& rat() const { return rat_; }
  const mpq_class& coef() const { return coef_; }
  long d() const { return d_; }
  bool is_rational() const { return d_ == 0; }
  bool is_zero() const { return d_ == 0 && rat_ == 0; }

  // Exact sign in {-1, 0, +1}, decided by integer arithmetic only.
  int sign() const;
  int Cmp(const Scalar& other) const { return (*this - other).sign(); }

  Scalar operator-() const;
  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator*(const Scalar& o) const;
  Scalar operator/(const Scalar& o) const;
  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

  bool operator==(const Scalar& o) const { return Cmp(o) == 0; }
  bool operator!=(const Scalar& o) const { return Cmp(o) != 0; }
  bool operator<(const Scalar& o) const { return Cmp(o) < 0; }
  bool operator<=(const Scalar& o) const { return Cmp(o) <= 0; }
  bool operator>(const Scalar& o) const { return Cmp(o) > 0; }
  bool operator>=(const Scalar& o) const { return Cmp(o) >= 0; }

  double ToDouble() const;

  // "p/q" for rationals, "p/q+r/s√d" (or "p/q-r/s√d") otherwise.
  std::string Str() const;

 private:
  struct Unchecked {};
  Scalar(mpq_class rat, mpq_class coef, long d, Unchecked)
      : rat_(std::move(rat)), coef_(std::move(coef)), d_(d) {
    Normalize();
  }

  void Normalize() {
    if (coef_ == 0) d_ = 0;
  }
  // The field index of the combination, or a throw on a true mismatch.
  static long JoinField(const Scalar& x, const Scalar& y);

  mpq_class rat_;
  mpq_class coef_;
  long d_ = 0;
};

inline Scalar operator*(long n, const Scalar& x) { return Scalar(n) * x; }

bool IsSquareFree(long d);

}  // namespace streetflow

#endif  // STREETFLOW_SCALAR_H_
