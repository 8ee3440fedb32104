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

#ifndef STREETFLOW_TESTS_TEST_UTIL_H_
#define STREETFLOW_TESTS_TEST_UTIL_H_

#include <algorithm>
#include <cmath>
#include <complex>
#include <optional>
#include <random>
#include <vector>

#include "streetflow/foliation_spec.h"
#include "streetflow/hyperelliptic.h"
#include "streetflow/scalar.h"
#include "streetflow/streets.h"

namespace streetflow {
namespace testutil {

inline Scalar Q(long num, long den = 1) {
  return Scalar(num, static_cast<unsigned long>(den));
}

// p/den + (q/den) sqrt(2)
inline Scalar R2(long p, long q, long den = 1) {
  return Scalar(mpq_class(p, den), mpq_class(q, den), 2);
}

// Random generic-looking Q(sqrt(2)) spec: measures in roughly [1, 4) and
// m a proper fraction of min(a+b).  Retries on the (rare) exact ties.
inline FoliationSpec RandomSqrt2Spec(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> num(8, 31);
  std::uniform_int_distribution<long> coef(1, 7);
  std::uniform_int_distribution<long> frac(4, 14);
  const auto scalar = [&] {
    return Scalar(mpq_class(num(rng), 8), mpq_class(coef(rng), 8), 2);
  };
  FoliationSpec s;
  s.a1 = scalar();
  s.b1 = scalar();
  s.a2 = scalar();
  s.b2 = scalar();
  const Scalar cap1 = s.a1 + s.b1;
  const Scalar cap2 = s.a2 + s.b2;
  const Scalar cap = cap1 < cap2 ? cap1 : cap2;
  s.m = cap * Scalar(frac(rng), 16);
  return s;
}

// Exact floor, double first with an exact fix-up.
inline long FloorScalar(const Scalar& x) {
  long n = static_cast<long>(std::floor(x.ToDouble()));
  while (Scalar(n) > x) --n;
  while (Scalar(n + 1) <= x) ++n;
  return n;
}

// Independent oracle for the minimal pairs: scan every first index up to the
// bound; for each, the qualifying second indices form an explicit integer
// range, so all qualifying pairs with u <= bound (resp. y <= bound) are
// covered and the cheapest is kept.
struct BrutePairs {
  std::optional<LatticeVector> ua, by;
};

inline BrutePairs BruteForceMinimalPairs(const Scalar& a, const Scalar& b,
                                         const Scalar& m, long bound) {
  BrutePairs out;
  std::optional<Scalar> best_ua, best_by;
  for (long u = 1; u <= bound; ++u) {
    // 0 < u a - v b < m  <=>  (u a - m)/b < v < u a / b.
    const long vlo = std::max(0l, FloorScalar((Scalar(u) * a - m) / b) + 1);
    const long vhi = FloorScalar(Scalar(u) * a / b);
    for (long v = vlo; v <= vhi; ++v) {
      const Scalar gap = Scalar(u) * a - Scalar(v) * b;
      if (gap.sign() <= 0 || !(gap < m)) continue;
      const Scalar cost = Scalar(u) * a + Scalar(v) * b;
      if (!best_ua || cost < *best_ua) {
        best_ua = cost;
        out.ua = LatticeVector{u, v};
      }
    }
  }
  for (long y = 1; y <= bound; ++y) {
    // 0 < y b - w a < m  <=>  (y b - m)/a < w < y b / a.
    const long wlo = std::max(0l, FloorScalar((Scalar(y) * b - m) / a) + 1);
    const long whi = FloorScalar(Scalar(y) * b / a);
    for (long w = wlo; w <= whi; ++w) {
      const Scalar gap = Scalar(y) * b - Scalar(w) * a;
      if (gap.sign() <= 0 || !(gap < m)) continue;
      const Scalar cost = Scalar(w) * a + Scalar(y) * b;
      if (!best_by || cost < *best_by) {
        best_by = cost;
        out.by = LatticeVector{w, y};
      }
    }
  }
  return out;
}

// Durand-Kerner root finder used as the numerical cross-check for the Sturm
// counts.  Returns the number of roots in (lo, hi) with imaginary part below
// the tolerance.
inline int NumericRootsOpen(const hyper::RatPoly& p, double lo, double hi) {
  const int n = p.degree();
  if (n < 1) return 0;
  std::vector<std::complex<double>> c(n + 1);
  for (int i = 0; i <= n; ++i) c[i] = p.coeffs()[i].get_d();
  for (int i = 0; i <= n; ++i) c[i] /= p.coeffs()[n].get_d();
  std::vector<std::complex<double>> roots(n);
  for (int i = 0; i < n; ++i) {
    roots[i] = std::pow(std::complex<double>(0.4, 0.9), i + 1);
  }
  for (int iter = 0; iter < 500; ++iter) {
    double moved = 0.0;
    for (int i = 0; i < n; ++i) {
      std::complex<double> value = 1.0;
      std::complex<double> x = roots[i];
      for (int k = n - 1; k >= 0; --k) value = value * x + c[k];
      std::complex<double> denom = 1.0;
      for (int j = 0; j < n; ++j) {
        if (j != i) denom *= roots[i] - roots[j];
      }
      const std::complex<double> delta = value / denom;
      roots[i] -= delta;
      moved = std::max(moved, std::abs(delta));
    }
    if (moved < 1e-13) break;
  }
  // Distinct real roots in range: multiple roots make Durand-Kerner place
  // several iterates on one point, and Sturm counts the square-free part.
  std::vector<double> real;
  for (const auto& r : roots) {
    if (std::abs(r.imag()) < 1e-7 && r.real() > lo && r.real() < hi) {
      real.push_back(r.real());
    }
  }
  std::sort(real.begin(), real.end());
  int count = 0;
  for (size_t i = 0; i < real.size(); ++i) {
    if (i == 0 || real[i] - real[i - 1] > 1e-6) ++count;
  }
  return count;
}

}  // namespace testutil
}  // namespace streetflow

#endif  // STREETFLOW_TESTS_TEST_UTIL_H_
