// Copyright 2026 The eznet Authors.
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

#ifndef EZNET_DISTRIBUTIONS_H_
#define EZNET_DISTRIBUTIONS_H_

#include <functional>
#include <span>

namespace eznet {

double NormalCdf(double x);
// 1 - Phi(x), computed through erfc so the upper tail keeps full precision.
double NormalSf(double x);
// exp(-x / 2); throws DomainError for x < 0.
double ChiSquared2Sf(double x);
double ChiSquared2Cdf(double x);

// Kolmogorov distribution tail P(K > lambda).
double KolmogorovSf(double lambda);

// sup_x |F_n(x) - F(x)| for the empirical CDF of `samples`.
double KsStatistic(std::span<const double> samples,
                   const std::function<double(double)>& cdf);

// Asymptotic p-value with Stephens' small-sample correction.
double KsPValue(double d, std::size_t sample_size);

}  // namespace eznet

#endif  // EZNET_DISTRIBUTIONS_H_
