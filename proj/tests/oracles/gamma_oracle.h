// Copyright 2026 The covertgame Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef COVERT_TESTS_ORACLES_GAMMA_ORACLE_H_
#define COVERT_TESTS_ORACLES_GAMMA_ORACLE_H_

#include <cmath>

namespace covert::oracle {

// Classical incomplete-gamma evaluation in extended precision: the Lentz
// continued fraction for Gamma(a, x) when x >= a + 1 and the power series
// for gamma(a, x) otherwise. Independent of the production Poisson sum.
inline long double RegGammaQ(int n, long double x) {
  if (x == 0.0L) return 1.0L;
  const long double a = n;
  const long double log_prefactor = -x + a * std::log(x) - std::lgamma(a);
  constexpr long double kEps = 1e-21L;
  constexpr long double kTiny = 1e-4000L;
  if (x < a + 1.0L) {
    long double ap = a;
    long double del = 1.0L / a;
    long double sum = del;
    for (int k = 0; k < 100000; ++k) {
      ap += 1.0L;
      del *= x / ap;
      sum += del;
      if (std::fabs(del) < std::fabs(sum) * kEps) break;
    }
    return 1.0L - sum * std::exp(log_prefactor);
  }
  long double b = x + 1.0L - a;
  long double c = 1.0L / kTiny;
  long double d = 1.0L / b;
  long double h = d;
  for (int i = 1; i < 100000; ++i) {
    const long double an = -i * (i - a);
    b += 2.0L;
    d = an * d + b;
    if (std::fabs(d) < kTiny) d = kTiny;
    c = b + an / c;
    if (std::fabs(c) < kTiny) c = kTiny;
    d = 1.0L / d;
    const long double del = d * c;
    h *= del;
    if (std::fabs(del - 1.0L) < kEps) break;
  }
  return std::exp(log_prefactor) * h;
}

// Gaussian tail via long double erfc, inverted by bisection.
inline long double GaussianQ(long double x) {
  return 0.5L * std::erfc(x / std::sqrt(2.0L));
}

inline long double InvQByBisection(long double p) {
  long double lo = -40.0L, hi = 40.0L;
  for (int i = 0; i < 200; ++i) {
    const long double mid = 0.5L * (lo + hi);
    if (GaussianQ(mid) > p) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return 0.5L * (lo + hi);
}

}  // namespace covert::oracle

#endif  // COVERT_TESTS_ORACLES_GAMMA_ORACLE_H_
