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

#include "eznet/simulation.h"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <string>
#include <thread>

#include "eznet/distributions.h"
#include "eznet/error.h"
#include "eznet/generators.h"
#include "eznet/subgraph_stats.h"

namespace eznet {
namespace {

std::string Num(double x) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.6g", x);
  return buf;
}

struct Outcome {
  bool ok = false;
  double statistic = 0.0;
  double p_value = 1.0;
};

TestResult ApplyGraphTest(TestId id, const SubgraphDensities& d,
                          const SimulationConfig& config) {
  switch (id) {
    case TestId::kEzDcbm:
    case TestId::kEzNeighborhood: {
      if (d.edges == 0) throw DomainError("graph has no edges");
      TestResult r = EzTestDcbm(d, config.ez_options);
      r.test_id = id;
      return r;
    }
    case TestId::kEzSbm:
      return EzTestSbm(d, config.ez_options.alternative);
    case TestId::kErChi2:
      return ErChi2Test(d);
    case TestId::kEzGaussian:
      break;
  }
  throw DomainError("not a graph test");
}

// Replicate `index`: one draw from the model, every test applied to it.
std::vector<Outcome> RunReplicate(const SimulationConfig& config,
                                  const std::vector<TestId>& tests,
                                  std::uint64_t index) {
  const Seed seed = DeriveSeed(config.seed, index);
  const ModelSpec& m = config.model;
  std::vector<Outcome> outcomes(tests.size());

  if (m.kind == ModelKind::kGaussian) {
    const DcbmParams params{m.n, m.k, m.a, m.b, m.weights};
    const GaussianSample s = SampleGaussianDcbm(m.samples, params, seed);
    for (std::size_t t = 0; t < tests.size(); ++t) {
      try {
        const TestResult r = EzTestGaussian(s.data, config.gaussian_options);
        outcomes[t] = {true, r.statistic, r.p_value};
      } catch (const DomainError&) {
      }
    }
    return outcomes;
  }

  Graph g;
  switch (m.kind) {
    case ModelKind::kEr:
      g = SampleEr(m.n, m.p, seed);
      break;
    case ModelKind::kSbm:
      g = SampleSbm(m.n, m.k, m.a, m.b, seed).graph;
      break;
    case ModelKind::kDcbm:
      g = SampleDcbm({m.n, m.k, m.a, m.b, m.weights}, seed).graph;
      break;
    case ModelKind::kConfig:
      g = SampleConfig(m.n, m.a, m.weights, seed).graph;
      break;
    case ModelKind::kNeighborhood: {
      const NeighborhoodParams params{m.n, m.k, m.r, m.a, m.b, m.p, m.weights};
      g = NeighborhoodSubgraph(SampleNeighborhoodModel(params, seed).graph, 0);
      break;
    }
    case ModelKind::kGaussian:
      break;
  }
  if (g.num_nodes() < 3) return outcomes;
  const SubgraphDensities d = Densities(g);
  for (std::size_t t = 0; t < tests.size(); ++t) {
    try {
      const TestResult r = ApplyGraphTest(tests[t], d, config);
      outcomes[t] = {true, r.statistic, r.p_value};
    } catch (const DomainError&) {
    }
  }
  return outcomes;
}

std::optional<double> TheoreticalDelta(const ModelSpec& m, TestId test) {
  if (test == TestId::kErChi2) return std::nullopt;
  try {
    switch (m.kind) {
      case ModelKind::kEr:
      case ModelKind::kConfig:
        if (test == TestId::kEzSbm && m.kind == ModelKind::kConfig &&
            !m.weights.IsConstant()) {
          return std::nullopt;
        }
        return 0.0;
      case ModelKind::kSbm:
        return TheoreticalDeltaDcbm({m.n, m.k, m.a, m.b, m.weights});
      case ModelKind::kDcbm:
        if (test == TestId::kEzSbm && !m.weights.IsConstant()) {
          return std::nullopt;
        }
        return TheoreticalDeltaDcbm({m.n, m.k, m.a, m.b, m.weights});
      case ModelKind::kNeighborhood:
        if (test == TestId::kEzSbm && !m.weights.IsConstant()) {
          return std::nullopt;
        }
        return TheoreticalDeltaNeighborhood(
            {m.n, m.k, m.r, m.a, m.b, m.p, m.weights});
      case ModelKind::kGaussian:
        return TheoreticalDeltaGaussian(m.k, m.a, m.b, m.samples);
    }
  } catch (const DomainError&) {
  }
  return std::nullopt;
}

}  // namespace

ModelKind ParseModelKind(std::string_view name) {
  if (name == "er") return ModelKind::kEr;
  if (name == "sbm") return ModelKind::kSbm;
  if (name == "dcbm") return ModelKind::kDcbm;
  if (name == "config") return ModelKind::kConfig;
  if (name == "neighborhood") return ModelKind::kNeighborhood;
  if (name == "gaussian") return ModelKind::kGaussian;
  throw DomainError("unknown model '" + std::string(name) + "'");
}

std::string_view ModelKindName(ModelKind kind) {
  switch (kind) {
    case ModelKind::kEr:
      return "er";
    case ModelKind::kSbm:
      return "sbm";
    case ModelKind::kDcbm:
      return "dcbm";
    case ModelKind::kConfig:
      return "config";
    case ModelKind::kNeighborhood:
      return "neighborhood";
    case ModelKind::kGaussian:
      return "gaussian";
  }
  return "unknown";
}

TestId ParseTestName(std::string_view name) {
  if (name == "ez-dcbm") return TestId::kEzDcbm;
  if (name == "ez-sbm") return TestId::kEzSbm;
  if (name == "er-chi2") return TestId::kErChi2;
  if (name == "ez-gaussian") return TestId::kEzGaussian;
  throw DomainError("unknown test '" + std::string(name) + "'");
}

std::string_view TestCliName(TestId id) {
  switch (id) {
    case TestId::kEzDcbm:
      return "ez-dcbm";
    case TestId::kEzSbm:
      return "ez-sbm";
    case TestId::kErChi2:
      return "er-chi2";
    case TestId::kEzNeighborhood:
      return "ez-neighborhood";
    case TestId::kEzGaussian:
      return "ez-gaussian";
  }
  return "unknown";
}

void ModelSpec::Validate() const {
  switch (kind) {
    case ModelKind::kEr:
      if (n < 3) throw DomainError("er model needs n >= 3");
      if (!(p >= 0.0 && p <= 1.0)) throw DomainError("er model needs p in [0, 1]");
      return;
    case ModelKind::kSbm:
      DcbmParams{n, k, a, b, WeightDistribution::ConstantOne()}.Validate();
      return;
    case ModelKind::kDcbm:
      DcbmParams{n, k, a, b, weights}.Validate();
      return;
    case ModelKind::kConfig:
      DcbmParams{n, 1, a, a, weights}.Validate();
      return;
    case ModelKind::kNeighborhood:
      NeighborhoodParams{n, k, r, a, b, p, weights}.Validate();
      return;
    case ModelKind::kGaussian:
      if (n < 3) throw DomainError("gaussian model needs at least 3 variables");
      if (samples < 2) throw DomainError("gaussian model needs >= 2 samples");
      if (k < 1) throw DomainError("gaussian model needs k >= 1");
      if (!(std::abs(a) <= 1.0) || !(std::abs(b) <= 1.0)) {
        throw DomainError("gaussian model needs a, b in [-1, 1]");
      }
      return;
  }
}

std::string ModelSpec::Describe() const {
  const std::string w = weights.Describe();
  switch (kind) {
    case ModelKind::kEr:
      return "er(n=" + std::to_string(n) + ",p=" + Num(p) + ")";
    case ModelKind::kSbm:
      return "sbm(n=" + std::to_string(n) + ",k=" + std::to_string(k) +
             ",a=" + Num(a) + ",b=" + Num(b) + ")";
    case ModelKind::kDcbm:
      return "dcbm(n=" + std::to_string(n) + ",k=" + std::to_string(k) +
             ",a=" + Num(a) + ",b=" + Num(b) + ",w=" + w + ")";
    case ModelKind::kConfig:
      return "config(n=" + std::to_string(n) + ",a=" + Num(a) + ",w=" + w + ")";
    case ModelKind::kNeighborhood:
      return "neighborhood(n=" + std::to_string(n) + ",k=" + std::to_string(k) +
             ",r=" + std::to_string(r) + ",a=" + Num(a) + ",b=" + Num(b) +
             ",p=" + Num(p) + ",w=" + w + ")";
    case ModelKind::kGaussian:
      return "gaussian(samples=" + std::to_string(samples) +
             ",p=" + std::to_string(n) + ",k=" + std::to_string(k) +
             ",a=" + Num(a) + ",b=" + Num(b) + ",w=" + w + ")";
  }
  return "unknown";
}

int ThreadsFromEnvironment() {
  const char* env = std::getenv("EZNET_THREADS");
  if (env == nullptr) return 1;
  char* end = nullptr;
  const long v = std::strtol(env, &end, 10);
  if (end == env || *end != '\0' || v < 1) return 1;
  return static_cast<int>(std::min<long>(v, 256));
}

std::vector<SimulationReport> RunSimulation(const SimulationConfig& config) {
  if (config.replicates < 1) throw DomainError("replicates must be >= 1");
  if (!(config.alpha > 0.0 && config.alpha < 1.0)) {
    throw DomainError("alpha must lie in (0, 1)");
  }
  if (config.tests.empty()) throw DomainError("no test selected");
  config.model.Validate();

  std::vector<TestId> tests = config.tests;
  for (TestId& t : tests) {
    const bool gaussian_model = config.model.kind == ModelKind::kGaussian;
    if (gaussian_model != (t == TestId::kEzGaussian)) {
      throw DomainError("test " + std::string(TestCliName(t)) +
                        " does not apply to model " +
                        std::string(ModelKindName(config.model.kind)));
    }
    if (t == TestId::kEzNeighborhood) t = TestId::kEzDcbm;
    if (config.model.kind == ModelKind::kNeighborhood && t == TestId::kEzDcbm) {
      t = TestId::kEzNeighborhood;
    }
  }

  const auto reps = static_cast<std::size_t>(config.replicates);
  std::vector<std::vector<Outcome>> results(reps);
  const int threads = std::max(
      1, std::min<int>(config.threads > 0 ? config.threads
                                          : ThreadsFromEnvironment(),
                       static_cast<int>(reps)));
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < reps; i = next++) {
      results[i] = RunReplicate(config, tests, i);
    }
  };
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(static_cast<std::size_t>(threads));
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
  }

  std::vector<SimulationReport> reports;
  for (std::size_t t = 0; t < tests.size(); ++t) {
    SimulationReport rep;
    rep.model = config.model.Describe();
    rep.test = tests[t];
    rep.replicates = config.replicates;
    rep.alpha = config.alpha;
    std::vector<double> stats;
    std::vector<double> pvals;
    for (std::size_t i = 0; i < reps; ++i) {
      const Outcome& o = results[i][t];
      if (!o.ok) {
        ++rep.failed_replicates;
        continue;
      }
      stats.push_back(o.statistic);
      pvals.push_back(o.p_value);
    }
    if (!stats.empty()) {
      std::size_t rejected = 0;
      double sum = 0.0;
      for (std::size_t i = 0; i < stats.size(); ++i) {
        if (pvals[i] < config.alpha) ++rejected;
        sum += stats[i];
      }
      const double count = static_cast<double>(stats.size());
      rep.rejection_rate = static_cast<double>(rejected) / count;
      rep.statistic_mean = sum / count;
      double ss = 0.0;
      for (const double s : stats) {
        ss += (s - rep.statistic_mean) * (s - rep.statistic_mean);
      }
      rep.statistic_var = stats.size() > 1 ? ss / (count - 1.0) : 0.0;
      rep.ks_statistic =
          tests[t] == TestId::kErChi2
              ? KsStatistic(stats, [](double x) { return ChiSquared2Cdf(x); })
              : KsStatistic(stats, [](double x) { return NormalCdf(x); });
    }
    rep.theoretical_delta = TheoreticalDelta(config.model, tests[t]);
    if (config.keep_statistics) {
      rep.statistics = std::move(stats);
      rep.p_values = std::move(pvals);
    }
    reports.push_back(std::move(rep));
  }
  return reports;
}

}  // namespace eznet
