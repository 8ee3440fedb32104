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

#include "streetflow/scalar.h"

#include <cmath>
#include <cstdlib>

namespace streetflow {

mpq_class ParseRational(const std::string& s) {
  if (s.empty()) throw ValidationError("empty rational literal");
  mpq_class q;
  if (q.set_str(s, 10) != 0) {
    throw ValidationError("bad rational literal: '" + s + "'");
  }
  if (q.get_den() == 0) throw ValidationError("zero denominator: '" + s + "'");
  q.canonicalize();
  return q;
}

std::string RationalString(const mpq_class& q) {
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

bool IsSquareFree(long d) {
  if (d < 1) return false;
  for (long p = 2; p * p <= d; ++p) {
    if (d % (p * p) == 0) return false;
    while (d % p == 0) d /= p;
  }
  return true;
}

Scalar::Scalar(mpq_class rat, mpq_class coef, long d)
    : rat_(std::move(rat)), coef_(std::move(coef)), d_(d) {
  rat_.canonicalize();
  coef_.canonicalize();
  if (coef_ == 0) {
    d_ = 0;
    return;
  }
  if (d_ < 2 || !IsSquareFree(d_)) {
    throw ValidationError("field index must be a square-free integer >= 2, got " +
                          std::to_string(d_));
  }
}

long Scalar::JoinField(const Scalar& x, const Scalar& y) {
  if (x.d_ == 0) return y.d_;
  if (y.d_ == 0 || y.d_ == x.d_) return x.d_;
  throw FieldMismatchError("cannot combine Q(sqrt(" + std::to_string(x.d_) +
                           ")) with Q(sqrt(" + std::to_string(y.d_) + "))");
}

int Scalar::sign() const {
  const int sr = sgn(rat_);
  if (d_ == 0) return sr;
  const int sc = sgn(coef_);
  if (sr == 0) return sc;
  if (sr == sc) return sr;
  // Opposite signs: compare rat^2 against d * coef^2.  Equality would make
  // sqrt(d) rational, impossible for square-free d >= 2.
  const int t = cmp(rat_ * rat_, d_ * coef_ * coef_);
  if (t == 0) throw InternalError("sqrt(d) resolved to a rational");
  return t > 0 ? sr : sc;
}

Scalar Scalar::operator-() const { return Scalar(-rat_, -coef_, d_, Unchecked{}); }

Scalar Scalar::operator+(const Scalar& o) const {
  const long d = JoinField(*this, o);
  return Scalar(rat_ + o.rat_, coef_ + o.coef_, d, Unchecked{});
}

Scalar Scalar::operator-(const Scalar& o) const {
  const long d = JoinField(*this, o);
  return Scalar(rat_ - o.rat_, coef_ - o.coef_, d, Unchecked{});
}

Scalar Scalar::operator*(const Scalar& o) const {
  const long d = JoinField(*this, o);
  // (a + b sqrt(d)) (a' + b' sqrt(d)) = aa' + d bb' + (ab' + a'b) sqrt(d).
  return Scalar(rat_ * o.rat_ + d * coef_ * o.coef_,
                rat_ * o.coef_ + o.rat_ * coef_, d, Unchecked{});
}

Scalar Scalar::operator/(const Scalar& o) const {
  const long d = JoinField(*this, o);
  if (o.sign() == 0) throw ValidationError("division by zero");
  // Multiply by the conjugate; the norm a'^2 - d b'^2 is a nonzero rational.
  const mpq_class norm = o.rat_ * o.rat_ - d * o.coef_ * o.coef_;
  const mpq_class na = (rat_ * o.rat_ - d * coef_ * o.coef_) / norm;
  const mpq_class nb = (coef_ * o.rat_ - rat_ * o.coef_) / norm;
  return Scalar(na, nb, d, Unchecked{});
}

double Scalar::ToDouble() const {
  double v = rat_.get_d();
  if (d_ != 0) v += coef_.get_d() * std::sqrt(static_cast<double>(d_));
  return v;
}

std::string Scalar::Str() const {
  if (d_ == 0) return RationalString(rat_);
  const bool neg = coef_ < 0;
  const mpq_class mag = neg ? mpq_class(-coef_) : coef_;
  return RationalString(rat_) + (neg ? "-" : "+") + RationalString(mag) +
         "√" + std::to_string(d_);
}

Scalar Scalar::FromString(const std::string& s) {
  // Accepts "p/q", "p/q+r/s√d" and "p/q-r/s√d" (ASCII "sqrt" also allowed).
  static const std::string kRoot = "√";
  size_t root = s.find(kRoot);
  size_t rootlen = kRoot.size();
  if (root == std::string::npos) {
    root = s.find("sqrt");
    rootlen = 4;
  }
  if (root == std::string::npos) return Scalar(ParseRational(s));

  // Split off the sign of the radical part: scan back for '+'/'-' that is not
  // a leading sign and not right after '/' (denominator signs never occur in
  // canonical output anyway).
  size_t split = std::string::npos;
  for (size_t i = root; i > 0; --i) {
    const char c = s[i - 1];
    if ((c == '+' || c == '-') && i - 1 > 0) {
      split = i - 1;
      break;
    }
  }
  if (split == std::string::npos) {
    throw ValidationError("bad scalar literal: '" + s + "'");
  }
  const mpq_class a = ParseRational(s.substr(0, split));
  mpq_class b = ParseRational(s.substr(split + 1, root - split - 1));
  if (s[split] == '-') b = -b;
  size_t dpos = root + rootlen;
  if (dpos < s.size() && s[dpos] == '(') ++dpos;  // sqrt(d)
  size_t dend = s.find_first_not_of("0123456789", dpos);
  const long d = std::strtol(s.substr(dpos, dend - dpos).c_str(), nullptr, 10);
  return Scalar(a, b, d);
}

}  // namespace streetflow
