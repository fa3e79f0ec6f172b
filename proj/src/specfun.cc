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

#include "covert/specfun.h"

#include <array>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace covert {
namespace {

constexpr double kLnSqrt2Pi = 0.918938533204672741780329736406;

// Neumaier compensated accumulator.
class CompensatedSum {
 public:
  void Add(double v) {
    const double t = sum_ + v;
    if (std::abs(sum_) >= std::abs(v)) {
      comp_ += (sum_ - t) + v;
    } else {
      comp_ += (v - t) + sum_;
    }
    sum_ = t;
  }
  double Value() const { return sum_ + comp_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

double ExactSmallLogFactorial(int k) {
  double acc = 0.0;
  for (int j = 2; j <= k; ++j) acc += std::log(static_cast<double>(j));
  return acc;
}

// log(k!) - log(sqrt(2 pi k) (k/e)^k), the Stirling remainder.
double StirlingError(int k) {
  constexpr double S0 = 1.0 / 12.0;
  constexpr double S1 = 1.0 / 360.0;
  constexpr double S2 = 1.0 / 1260.0;
  constexpr double S3 = 1.0 / 1680.0;
  constexpr double S4 = 1.0 / 1188.0;
  if (k <= 15) {
    static const std::array<double, 16> table = [] {
      std::array<double, 16> t{};
      t[0] = 0.0;  // unused: k = 0 never reaches the Stirling path
      for (int j = 1; j < 16; ++j) {
        const double dj = j;
        t[j] = ExactSmallLogFactorial(j) - (dj + 0.5) * std::log(dj) + dj -
               kLnSqrt2Pi;
      }
      return t;
    }();
    return table[k];
  }
  const double n = k;
  const double nn = n * n;
  if (k > 500) return (S0 - S1 / nn) / n;
  if (k > 80) return (S0 - (S1 - S2 / nn) / nn) / n;
  if (k > 35) return (S0 - (S1 - (S2 - S3 / nn) / nn) / nn) / n;
  return (S0 - (S1 - (S2 - (S3 - S4 / nn) / nn) / nn) / nn) / n;
}

// Deviance term x log(x / mu) + mu - x, accurate when x is close to mu.
double DevianceTerm(double x, double mu) {
  if (std::abs(x - mu) < 0.1 * (x + mu)) {
    double v = (x - mu) / (x + mu);
    double s = (x - mu) * v;
    double ej = 2.0 * x * v;
    v *= v;
    for (int j = 1; j < 1000; ++j) {
      ej *= v;
      const double s1 = s + ej / (2 * j + 1);
      if (s1 == s) return s1;
      s = s1;
    }
    return s;
  }
  return x * std::log(x / mu) + mu - x;
}

void CheckGammaArgs(int n, double x) {
  if (n < 1) {
    throw std::domain_error("incomplete gamma: shape must be >= 1, got " +
                            std::to_string(n));
  }
  if (!std::isfinite(x) || x < 0.0) {
    throw std::domain_error("incomplete gamma: argument must be finite and "
                            ">= 0, got " + std::to_string(x));
  }
}

// Relative size below which further terms cannot change a double sum.
constexpr double kNegligible = 1e-18;

}  // namespace

double LogFactorial(int k) {
  if (k < 0) throw std::domain_error("LogFactorial: negative argument");
  if (k <= 15) return ExactSmallLogFactorial(k);
  const double n = k;
  return (n + 0.5) * std::log(n) - n + kLnSqrt2Pi + StirlingError(k);
}

double PoissonPmf(int k, double lambda) {
  if (k < 0 || lambda < 0.0) return 0.0;
  if (lambda == 0.0) return k == 0 ? 1.0 : 0.0;
  if (k == 0) return std::exp(-lambda);
  const double x = k;
  return std::exp(-StirlingError(k) - DevianceTerm(x, lambda)) /
         std::sqrt(2.0 * std::numbers::pi * x);
}

double RegGammaQ(int n, double x) {
  CheckGammaArgs(n, x);
  if (x == 0.0) return 1.0;
  // Left of the mode the complement is the small side.
  if (x < n) return 1.0 - RegGammaP(n, x);

  // Sum Poisson(x) masses over k = 0..n-1 starting at the largest one.
  const int peak = n - 1;
  const double anchor = PoissonPmf(peak, x);
  if (anchor == 0.0) {
    // Entire window is beyond double range; the nearest side decides.
    return x > n ? 0.0 : 1.0;
  }
  CompensatedSum sum;
  sum.Add(anchor);
  double term = anchor;
  for (int k = peak; k > 0; --k) {
    term *= k / x;
    sum.Add(term);
    if (term < kNegligible * sum.Value()) break;
  }
  term = anchor;
  for (int k = peak + 1; k < n; ++k) {
    term *= x / k;
    sum.Add(term);
    if (term < kNegligible * sum.Value()) break;
  }
  return std::min(1.0, sum.Value());
}

double RegGammaP(int n, double x) {
  CheckGammaArgs(n, x);
  if (x == 0.0) return 0.0;
  if (x >= n) return 1.0 - RegGammaQ(n, x);
  // Upper Poisson tail k >= n; terms decrease monotonically since x < n.
  double term = PoissonPmf(n, x);
  CompensatedSum sum;
  sum.Add(term);
  for (int k = n + 1; term > 0.0; ++k) {
    term *= x / k;
    sum.Add(term);
    if (term < kNegligible * sum.Value()) break;
  }
  return std::min(1.0, sum.Value());
}

double GaussianQ(double x) {
  return 0.5 * std::erfc(x / std::numbers::sqrt2);
}

double InvQ(double p) {
  if (!(p > 0.0 && p < 1.0)) {
    throw std::domain_error("InvQ: probability must lie in (0, 1), got " +
                            std::to_string(p));
  }
  // Acklam's rational approximation of the normal quantile.
  static constexpr double a[] = {-3.969683028665376e+01, 2.209460984245205e+02,
                                 -2.759285104469687e+02, 1.383577518672690e+02,
                                 -3.066479806614716e+01, 2.506628277459239e+00};
  static constexpr double b[] = {-5.447609879822406e+01, 1.615858368580409e+02,
                                 -1.556989798598866e+02, 6.680131188771972e+01,
                                 -1.328068155288572e+01};
  static constexpr double c[] = {-7.784894002430293e-03, -3.223964580411365e-01,
                                 -2.400758277161838e+00, -2.549732539343734e+00,
                                 4.374664141464968e+00,  2.938163982698783e+00};
  static constexpr double d[] = {7.784695709041462e-03, 3.224671290700398e-01,
                                 2.445134137142996e+00, 3.754408661907416e+00};
  constexpr double kLow = 0.02425;

  // Quantile of the lower tail mass p, i.e. z with Phi(z) = p.
  double z;
  if (p < kLow) {
    const double q = std::sqrt(-2.0 * std::log(p));
    z = (((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
        ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1.0);
  } else if (p > 1.0 - kLow) {
    const double q = std::sqrt(-2.0 * std::log1p(-p));
    z = -(((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
        ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1.0);
  } else {
    const double q = p - 0.5;
    const double r = q * q;
    z = (((((a[0] * r + a[1]) * r + a[2]) * r + a[3]) * r + a[4]) * r + a[5]) *
        q /
        (((((b[0] * r + b[1]) * r + b[2]) * r + b[3]) * r + b[4]) * r + 1.0);
  }

  // Q(x) = Phi(-x), so x = -z. Polish with Halley steps on Q(x) - p.
  double x = -z;
  for (int iter = 0; iter < 2; ++iter) {
    const double f = GaussianQ(x) - p;
    const double density =
        std::exp(-0.5 * x * x) / std::sqrt(2.0 * std::numbers::pi);
    const double u = f / density;
    x += u / (1.0 - 0.5 * x * u);
  }
  return x;
}

}  // namespace covert
