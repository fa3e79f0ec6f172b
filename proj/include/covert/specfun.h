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

#ifndef COVERT_SPECFUN_H_
#define COVERT_SPECFUN_H_

namespace covert {

// Regularized upper incomplete gamma function for integer shape,
//   Q(n, x) = Gamma(n, x) / Gamma(n) = sum_{k=0}^{n-1} x^k e^{-x} / k!,
// i.e. the probability that a Poisson(x) variable is below n. The sum is
// evaluated outward from its largest term, which is computed with Loader's
// saddle-point expansion so that n in the thousands stays accurate.
// Throws std::domain_error for n < 1 or x < 0 (or non-finite x).
double RegGammaQ(int n, double x);

// Regularized lower incomplete gamma, 1 - Q(n, x), without cancellation
// when Q is close to one.
double RegGammaP(int n, double x);

// Poisson probability mass e^{-lambda} lambda^k / k!.
double PoissonPmf(int k, double lambda);

// log(k!) for k >= 0.
double LogFactorial(int k);

// Gaussian tail probability Q(x) = P(Z > x) for standard normal Z.
double GaussianQ(double x);

// Inverse of GaussianQ on (0, 1). Throws std::domain_error outside it.
double InvQ(double p);

}  // namespace covert

#endif  // COVERT_SPECFUN_H_
