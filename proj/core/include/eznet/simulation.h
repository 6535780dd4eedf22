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

#ifndef EZNET_SIMULATION_H_
#define EZNET_SIMULATION_H_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "eznet/gaussian.h"
#include "eznet/model_params.h"
#include "eznet/network_tests.h"
#include "eznet/rng.h"

namespace eznet {

enum class ModelKind { kEr, kSbm, kDcbm, kConfig, kNeighborhood, kGaussian };

ModelKind ParseModelKind(std::string_view name);
std::string_view ModelKindName(ModelKind kind);

// Tests selectable by name: ez-dcbm, ez-sbm, er-chi2, ez-gaussian.
TestId ParseTestName(std::string_view name);
std::string_view TestCliName(TestId id);

struct ModelSpec {
  ModelKind kind = ModelKind::kEr;
  // Nodes (graph models) or variables (gaussian).
  std::int64_t n = 0;
  int k = 1;
  int r = 1;
  double a = 0.0;
  double b = 0.0;
  // ER edge probability, or ego attachment probability for kNeighborhood.
  double p = 0.0;
  // Observations per replicate for kGaussian.
  std::int64_t samples = 0;
  WeightDistribution weights;

  // Throws DomainError on any inconsistency.
  void Validate() const;
  std::string Describe() const;
};

struct SimulationConfig {
  ModelSpec model;
  std::vector<TestId> tests{TestId::kEzDcbm};
  std::int64_t replicates = 100;
  double alpha = 0.05;
  Seed seed;
  // 0 means "EZNET_THREADS or 1".
  int threads = 0;
  EzTestOptions ez_options;
  GaussianTestOptions gaussian_options;
  bool keep_statistics = false;
};

struct SimulationReport {
  std::string model;
  TestId test = TestId::kEzDcbm;
  std::int64_t replicates = 0;
  double alpha = 0.05;
  double rejection_rate = 0.0;
  double statistic_mean = 0.0;
  double statistic_var = 0.0;
  std::optional<double> theoretical_delta;
  // Distance of the statistics' empirical CDF to the null law.
  double ks_statistic = 0.0;
  // Replicates where the test was undefined (e.g. empty neighborhood);
  // excluded from every other field.
  std::int64_t failed_replicates = 0;
  std::vector<double> statistics;
  std::vector<double> p_values;
};

// Thread count from EZNET_THREADS (unset or invalid means 1).
int ThreadsFromEnvironment();

// Runs `replicates` draws and applies every requested test to each draw.
// Replicate i always uses DeriveSeed(seed, i), and results are reduced in
// replicate order, so reports do not depend on the thread count.
std::vector<SimulationReport> RunSimulation(const SimulationConfig& config);

}  // namespace eznet

#endif  // EZNET_SIMULATION_H_
