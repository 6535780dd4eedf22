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

#ifndef EZNET_GENERATORS_H_
#define EZNET_GENERATORS_H_

#include <cstdint>
#include <string>
#include <vector>

#include "eznet/data_matrix.h"
#include "eznet/graph.h"
#include "eznet/model_params.h"
#include "eznet/rng.h"

namespace eznet {

// Fraction of clipped pairs above which a sample carries a warning.
inline constexpr double kClipWarningFraction = 1e-3;

struct DcbmSample {
  Graph graph;
  std::vector<int> labels;
  std::vector<double> weights;
  // Pairs whose W_i W_j * (a or b) exceeded 1 and were drawn with prob 1.
  std::int64_t clipped_pairs = 0;
  std::vector<std::string> warnings;
};

struct NeighborhoodSample {
  // n + 1 nodes; node 0 is the ego, ambient node i is node i + 1.
  Graph graph;
  // The ambient DCBM on its own, nodes 0..n-1.
  Graph ambient;
  std::vector<int> labels;
  std::vector<double> weights;
  std::int64_t clipped_pairs = 0;
  std::vector<std::string> warnings;
};

struct GaussianSample {
  DataMatrix data;
  std::vector<int> labels;
  std::vector<double> weights;
};

// Every pair included independently with probability p.
Graph SampleEr(std::int64_t n, double p, Seed seed);

DcbmSample SampleDcbm(const DcbmParams& params, Seed seed);
// W == 1 special case.
DcbmSample SampleSbm(std::int64_t n, int k, double a, double b, Seed seed);
// k == 1 special case (configuration model).
DcbmSample SampleConfig(std::int64_t n, double a,
                        const WeightDistribution& weights, Seed seed);

// Ambient DCBM with an extra ego attached to labels {0, .., r-1}.
NeighborhoodSample SampleNeighborhoodModel(const NeighborhoodParams& params,
                                           Seed seed);

// n_samples rows of N(0, Sigma) with unit diagonal and Sigma_jl = theta_jl
// drawn once from the DCBM over params.n variables. Here a and b may lie in
// [-1, 1]; a non positive-definite Sigma throws DomainError.
GaussianSample SampleGaussianDcbm(std::int64_t n_samples,
                                  const DcbmParams& params, Seed seed);

}  // namespace eznet

#endif  // EZNET_GENERATORS_H_
