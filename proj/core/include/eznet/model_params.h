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

#ifndef EZNET_MODEL_PARAMS_H_
#define EZNET_MODEL_PARAMS_H_

#include <cstdint>
#include <string>

#include "eznet/rng.h"

namespace eznet {

// Distribution of the degree weights W. Every family is normalized so that
// E W^2 = 1, which pins down the scale of (a, b).
class WeightDistribution {
 public:
  enum class Kind { kConstantOne, kTwoPoint, kScaledLognormal };

  WeightDistribution() = default;

  static WeightDistribution ConstantOne();
  // W = w_hi with probability prob_hi, else w_lo. Requires
  // prob_hi * w_hi^2 + (1 - prob_hi) * w_lo^2 == 1 within 1e-12.
  static WeightDistribution TwoPoint(double w_lo, double w_hi, double prob_hi);
  // Same family with w_hi solved from the second-moment constraint.
  static WeightDistribution TwoPointSolved(double w_lo, double prob_hi);
  // exp(sigma Z) / sqrt(E exp(2 sigma Z)) = exp(sigma Z - sigma^2).
  static WeightDistribution ScaledLognormal(double sigma);

  Kind kind() const { return kind_; }
  double w_lo() const { return w_lo_; }
  double w_hi() const { return w_hi_; }
  double prob_hi() const { return prob_hi_; }
  double sigma() const { return sigma_; }

  double Draw(Rng& rng) const;

  double Mean() const;
  double SecondMoment() const;
  double FourthMoment() const;
  double Variance() const { return SecondMoment() - Mean() * Mean(); }
  bool IsConstant() const;

  std::string Describe() const;

 private:
  Kind kind_ = Kind::kConstantOne;
  double w_lo_ = 1.0;
  double w_hi_ = 1.0;
  double prob_hi_ = 0.0;
  double sigma_ = 0.0;
};

// Parses "const", "two-point:W_LO,W_HI,PROB_HI", "two-point:W_LO,,PROB_HI"
// (w_hi solved) or "lognormal:SIGMA".
WeightDistribution ParseWeightDistribution(const std::string& text);

// Degree-corrected block model: Z_i uniform on k labels, W_i iid, and
// P(A_ij = 1) = W_i W_j a within a community, W_i W_j b across.
struct DcbmParams {
  std::int64_t n = 0;
  int k = 1;
  double a = 0.0;
  double b = 0.0;
  WeightDistribution weights;

  // n >= 3, k >= 1, a and b in [0, 1].
  void Validate() const;
};

// Ego attached with probability p to every ambient node whose label is one
// of the first r communities.
struct NeighborhoodParams {
  std::int64_t n = 0;
  int k = 1;
  int r = 1;
  double a = 0.0;
  double b = 0.0;
  double p = 1.0;
  WeightDistribution weights;

  // Ambient DCBM valid, 1 <= r <= k, p in (0, 1].
  void Validate() const;
  DcbmParams Ambient() const { return {n, k, a, b, weights}; }
};

// Closed-form population densities of the DCBM.
struct PopulationDensities {
  double e = 0.0;
  double v = 0.0;
  double t = 0.0;
  double ez = 0.0;
};

PopulationDensities DcbmPopulationDensities(int k, double a, double b,
                                            double mean_w);

}  // namespace eznet

#endif  // EZNET_MODEL_PARAMS_H_
