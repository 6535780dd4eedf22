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

#include "eznet/distributions.h"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

#include "eznet/error.h"

namespace eznet {

double NormalCdf(double x) { return 0.5 * std::erfc(-x / std::numbers::sqrt2); }

double NormalSf(double x) { return 0.5 * std::erfc(x / std::numbers::sqrt2); }

double ChiSquared2Sf(double x) {
  if (!(x >= 0.0)) {
    throw DomainError("chi-squared survival function needs x >= 0");
  }
  return std::exp(-x / 2.0);
}

double ChiSquared2Cdf(double x) {
  if (x <= 0.0) return 0.0;
  return -std::expm1(-x / 2.0);
}

double KolmogorovSf(double lambda) {
  if (lambda <= 0.0) return 1.0;
  if (lambda < 0.2) return 1.0;
  // 2 sum_{j>=1} (-1)^{j-1} exp(-2 j^2 lambda^2); converges fast for
  // lambda >= 0.2.
  double sum = 0.0;
  for (int j = 1; j <= 100; ++j) {
    const double term = std::exp(-2.0 * j * j * lambda * lambda);
    sum += (j % 2 == 1 ? term : -term);
    if (term < 1e-17) break;
  }
  return std::clamp(2.0 * sum, 0.0, 1.0);
}

double KsStatistic(std::span<const double> samples,
                   const std::function<double(double)>& cdf) {
  std::vector<double> sorted(samples.begin(), samples.end());
  std::sort(sorted.begin(), sorted.end());
  const double n = static_cast<double>(sorted.size());
  double d = 0.0;
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    const double f = cdf(sorted[i]);
    d = std::max({d, static_cast<double>(i + 1) / n - f,
                  f - static_cast<double>(i) / n});
  }
  return d;
}

double KsPValue(double d, std::size_t sample_size) {
  const double sn = std::sqrt(static_cast<double>(sample_size));
  return KolmogorovSf((sn + 0.12 + 0.11 / sn) * d);
}

}  // namespace eznet
