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


// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any
// failure.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdarg>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "cli.h"
#include "eznet/distributions.h"
#include "eznet/generators.h"
#include "eznet/graph.h"
#include "eznet/model_params.h"
#include "eznet/network_tests.h"
#include "eznet/rng.h"
#include "eznet/simulation.h"
#include "eznet/subgraph_stats.h"
#include "oracles.h"

namespace eznet {
namespace {

using testing::MeanAndSe;

constexpr std::uint64_t kSeed = 12345;

struct Verdict {
  bool pass = false;
  std::string detail;
};

std::string Fmt(const char* format, ...) __attribute__((format(printf, 1, 2)));
std::string Fmt(const char* format, ...) {
  char buf[512];
  va_list args;
  va_start(args, format);
  std::vsnprintf(buf, sizeof(buf), format, args);
  va_end(args);
  return buf;
}

int Threads() {
  return static_cast<int>(std::max(1U, std::thread::hardware_concurrency()));
}

double Mean(const std::vector<double>& x) {
  double s = 0.0;
  for (const double v : x) s += v;
  return s / static_cast<double>(x.size());
}

double Variance(const std::vector<double>& x) {
  const double m = Mean(x);
  double ss = 0.0;
  for (const double v : x) ss += (v - m) * (v - m);
  return ss / static_cast<double>(x.size() - 1);
}

// Closed-form DCBM densities with W == 1.
struct Closed {
  double e, v, t, ez;
};

Closed ClosedForm(int k, double a, double b) {
  const double kk = k;
  const double mix = a / kk + (kk - 1.0) * b / kk;
  return {mix, mix * mix,
          (a * a * a + 3.0 * (kk - 1.0) * a * b * b +
           (kk - 1.0) * (kk - 2.0) * b * b * b) /
              (kk * kk),
          (kk - 1.0) * std::pow(a - b, 3) / (kk * kk * kk)};
}

bool CountsMatchLiteral(const Graph& g) {
  const SubgraphDensities d = Densities(g);
  const testing::TripleCensus c = testing::CensusLiterally(g);
  const auto adj = testing::DenseAdjacency(g);
  std::int64_t edges = 0;
  for (std::size_t i = 0; i < adj.size(); ++i) {
    for (std::size_t j = i + 1; j < adj.size(); ++j) edges += adj[i][j];
  }
  return d.n == g.num_nodes() && d.edges == edges &&
         d.vees == c.c[2] + 3 * c.c[3] && d.triangles == c.c[3] &&
         d == DensitiesOracle(g);
}

Verdict Criterion1() {
  std::int64_t checked = 0;
  std::int64_t mismatches = 0;
  for (int n = 3; n <= 6; ++n) {
    const int pairs = n * (n - 1) / 2;
    for (std::uint64_t mask = 0; mask < (1ULL << pairs); ++mask) {
      ++checked;
      if (!CountsMatchLiteral(testing::GraphFromMask(n, mask))) ++mismatches;
    }
  }
  std::mt19937_64 gen(kSeed);
  std::uniform_int_distribution<int> pick7(3, 7);
  std::uniform_real_distribution<double> density(0.0, 1.0);
  std::vector<Graph> cases = {testing::CompleteGraph(7), testing::CycleGraph(7),
                              testing::StarGraph(6), testing::PathGraph(7),
                              testing::CompleteBipartite(3, 4),
                              Graph::FromEdges(7, {})};
  while (cases.size() < 500) {
    cases.push_back(testing::RandomGraph(pick7(gen), density(gen), gen));
  }
  std::uniform_int_distribution<int> pick12(3, 12);
  for (int i = 0; i < 500; ++i) {
    cases.push_back(testing::RandomGraph(pick12(gen), density(gen), gen));
  }
  for (const Graph& g : cases) {
    ++checked;
    if (!CountsMatchLiteral(g)) ++mismatches;
  }
  return {mismatches == 0,
          Fmt("%lld graphs, %lld mismatches", static_cast<long long>(checked),
              static_cast<long long>(mismatches))};
}

Verdict Criterion2() {
  std::mt19937_64 gen(kSeed + 2);
  std::uniform_int_distribution<int> pick(3, 40);
  std::uniform_real_distribution<double> density(0.0, 1.0);
  double worst = 0.0;
  for (int i = 0; i < 500; ++i) {
    const Graph g = testing::RandomGraph(pick(gen), density(gen), gen);
    const SubgraphDensities d = Densities(g);
    const ThreeNodeFrequencies f = ComputeThreeNodeFrequencies(g);
    const testing::TripleCensus c = testing::CensusLiterally(g);
    const double triples = static_cast<double>(c.triples);
    const double deviations[] = {
        f.f0 + f.f1 + f.f2 + f.f3 - 1.0,
        f.f3 - d.t_hat,
        f.f2 - 3.0 * (d.v_hat - d.t_hat),
        f.f0 - c.c[0] / triples,
        f.f1 - c.c[1] / triples,
        f.f2 - c.c[2] / triples,
        f.f3 - c.c[3] / triples,
    };
    for (const double x : deviations) worst = std::max(worst, std::fabs(x));
  }
  return {worst <= 1e-12, Fmt("max deviation %.3g over 500 graphs", worst)};
}

SimulationConfig Config(ModelSpec model, std::vector<TestId> tests,
                        std::int64_t replicates) {
  SimulationConfig c;
  c.model = model;
  c.tests = std::move(tests);
  c.replicates = replicates;
  c.seed = Seed{kSeed};
  c.threads = Threads();
  c.keep_statistics = true;
  return c;
}

ModelSpec Spec(ModelKind kind, std::int64_t n) {
  ModelSpec m;
  m.kind = kind;
  m.n = n;
  return m;
}

Verdict Criterion3() {
  ModelSpec m = Spec(ModelKind::kEr, 500);
  m.p = 0.03;
  const SimulationReport r = RunSimulation(Config(m, {TestId::kEzDcbm}, 1000))[0];
  const double ks_p = KsPValue(r.ks_statistic, r.statistics.size());
  const bool pass = r.failed_replicates == 0 && std::fabs(r.statistic_mean) <= 0.1 &&
                    r.statistic_var >= 0.8 && r.statistic_var <= 1.2 &&
                    r.rejection_rate >= 0.03 && r.rejection_rate <= 0.07 &&
                    ks_p >= 0.01;
  return {pass, Fmt("mean %.4f var %.4f rejection %.3f ks %.4f (p %.3f)",
                    r.statistic_mean, r.statistic_var, r.rejection_rate,
                    r.ks_statistic, ks_p)};
}

Verdict Criterion4() {
  ModelSpec m = Spec(ModelKind::kSbm, 600);
  m.k = 2;
  m.a = 0.1;
  m.b = 0.02;
  const SimulationReport r = RunSimulation(Config(m, {TestId::kEzDcbm}, 200))[0];
  return {r.rejection_rate >= 0.95,
          Fmt("rejection %.3f (delta %.2f)", r.rejection_rate,
              r.theoretical_delta.value_or(NAN))};
}

Verdict Criterion5() {
  constexpr std::int64_t kN = 1000;
  constexpr double kSum = 0.04;
  bool pass = true;
  std::string detail;
  for (const double delta : {1.5, 3.0, 6.0}) {
    // k = 2: delta = (a - b)^3 / sqrt(6) * (n / (2 (a + b)))^1.5.
    const double gap =
        std::cbrt(delta * std::sqrt(6.0) / std::pow(kN / (2.0 * kSum), 1.5));
    ModelSpec m = Spec(ModelKind::kSbm, kN);
    m.k = 2;
    m.a = (kSum + gap) / 2.0;
    m.b = (kSum - gap) / 2.0;
    const SimulationReport r =
        RunSimulation(Config(m, {TestId::kEzDcbm}, 300))[0];
    const double plug_in = r.theoretical_delta.value_or(NAN);
    const bool ok = std::fabs(plug_in - delta) < 1e-9 &&
                    std::fabs(r.statistic_mean - delta) <= 0.5;
    pass = pass && ok;
    detail += Fmt("%sdelta %.1f (a %.5f b %.5f): mean %.3f",
                  detail.empty() ? "" : "; ", delta, m.a, m.b,
                  r.statistic_mean);
  }
  return {pass, detail};
}

Verdict Criterion6() {
  constexpr int kReps = 500;
  const DcbmParams params{400, 3, 0.06, 0.02, WeightDistribution::ConstantOne()};
  std::vector<double> e, v, t, ez;
  for (int i = 0; i < kReps; ++i) {
    const Graph g =
        SampleDcbm(params, DeriveSeed(Seed{kSeed}, static_cast<std::uint64_t>(i)))
            .graph;
    const SubgraphDensities d = Densities(g);
    e.push_back(d.e_hat);
    v.push_back(d.v_hat);
    t.push_back(d.t_hat);
    ez.push_back(EzCharacteristic(d));
  }
  const Closed c = ClosedForm(3, 0.06, 0.02);
  const double target_ez = 2.0 * std::pow(0.04 / 3.0, 3);
  bool pass = std::fabs(c.ez - target_ez) < 1e-15;
  std::string detail;
  const struct {
    const char* name;
    const std::vector<double>* x;
    double target;
  } rows[] = {{"chi", &ez, target_ez}, {"E", &e, c.e}, {"V", &v, c.v}, {"T", &t, c.t}};
  for (const auto& row : rows) {
    const auto ms = MeanAndSe(*row.x);
    const double z = (ms.mean - row.target) / ms.se;
    pass = pass && std::fabs(z) <= 4.0;
    detail += Fmt("%s%s %.4g vs %.4g (z %.2f)", detail.empty() ? "" : "; ",
                  row.name, ms.mean, row.target, z);
  }
  return {pass, detail};
}

Verdict Criterion7() {
  ModelSpec m = Spec(ModelKind::kConfig, 600);
  m.k = 1;
  m.a = 0.01;
  m.b = m.a;
  m.weights = WeightDistribution::TwoPointSolved(0.5, 0.2);
  const auto reports =
      RunSimulation(Config(m, {TestId::kErChi2, TestId::kEzDcbm}, 300));
  const double chi2_rate = reports[0].rejection_rate;
  const double ez_rate = reports[1].rejection_rate;
  const bool pass = m.weights.Variance() > 0.0 && chi2_rate > 0.5 &&
                    ez_rate >= 0.02 && ez_rate <= 0.08 &&
                    reports[0].failed_replicates == 0 &&
                    reports[1].failed_replicates == 0;
  return {pass, Fmt("a %.3g, Var(W) %.4f: er_chi2 %.3f, ez_dcbm %.3f", m.a,
                    m.weights.Variance(), chi2_rate, ez_rate)};
}

Verdict Criterion8() {
  constexpr int kReps = 1000;
  std::vector<double> stat, t2, t3;
  int rejected = 0;
  for (int i = 0; i < kReps; ++i) {
    const Graph g =
        SampleEr(400, 0.05, DeriveSeed(Seed{kSeed}, static_cast<std::uint64_t>(i)));
    const TestResult r = ErChi2Test(g);
    stat.push_back(r.statistic);
    t2.push_back(r.diagnostics.at("t2"));
    t3.push_back(r.diagnostics.at("t3"));
    if (r.p_value < 0.05) ++rejected;
  }
  const double m2 = Mean(t2);
  const double m3 = Mean(t3);
  double cov = 0.0;
  for (int i = 0; i < kReps; ++i) cov += (t2[i] - m2) * (t3[i] - m3);
  cov /= kReps - 1;
  const double corr = cov / std::sqrt(Variance(t2) * Variance(t3));
  const double mean = Mean(stat);
  const double rate = static_cast<double>(rejected) / kReps;
  const bool pass = mean >= 1.7 && mean <= 2.3 && rate >= 0.03 &&
                    rate <= 0.07 && std::fabs(corr) < 0.15;
  return {pass, Fmt("mean %.3f rejection %.3f corr(t2, t3) %.3f", mean, rate, corr)};
}

Verdict Criterion9() {
  std::mt19937_64 gen(kSeed + 9);
  std::uniform_int_distribution<int> pick(3, 12);
  std::uniform_real_distribution<double> density(0.0, 1.0);
  std::int64_t egos = 0;
  std::int64_t mismatches = 0;
  for (int i = 0; i < 200; ++i) {
    const Graph g = testing::RandomGraph(pick(gen), density(gen), gen);
    for (NodeId ego = 0; ego < g.num_nodes(); ++ego) {
      ++egos;
      const auto lit = testing::NeighborhoodSumsLiterally(g, ego);
      const Graph sub = NeighborhoodSubgraph(g, ego);
      bool ok = lit.m == sub.num_nodes() && lit.edges == sub.num_edges();
      if (sub.num_nodes() >= 3) {
        const SubgraphDensities d = Densities(sub);
        ok = ok && lit.vees == d.vees && lit.triangles == d.triangles;
      } else {
        ok = ok && lit.vees == 0 && lit.triangles == 0;
      }
      if (!ok) ++mismatches;
    }
  }

  ModelSpec m = Spec(ModelKind::kNeighborhood, 2000);
  m.k = 4;
  m.r = 1;
  m.p = 0.5;
  m.a = 0.02;
  m.b = 0.004;
  const SimulationReport r = RunSimulation(Config(m, {TestId::kEzDcbm}, 300))[0];
  const bool pass = mismatches == 0 && r.rejection_rate >= 0.03 &&
                    r.rejection_rate <= 0.07;
  return {pass, Fmt("%lld egos, %lld mismatches; rejection %.3f (%lld undefined)",
                    static_cast<long long>(egos), static_cast<long long>(mismatches),
                    r.rejection_rate, static_cast<long long>(r.failed_replicates))};
}

Verdict Criterion10() {
  // Wick identities with three variables, clustered by the draw of Sigma.
  constexpr int kClusters = 4000;
  constexpr std::int64_t kPerCluster = 50;
  const double a = 0.35;
  const double b = 0.05;
  const DcbmParams three{3, 2, a, b, WeightDistribution::ConstantOne()};
  std::vector<double> first, second;
  for (int c = 0; c < kClusters; ++c) {
    const GaussianSample s = SampleGaussianDcbm(
        kPerCluster, three, DeriveSeed(Seed{kSeed + 10}, static_cast<std::uint64_t>(c)));
    double f = 0.0;
    double g = 0.0;
    for (std::int64_t i = 0; i < kPerCluster; ++i) {
      const auto x = s.data.row(i);
      const double x1 = x[0], x2 = x[1], x3 = x[2];
      f += x1 * x2 * x2 * x3;
      g += x1 * x1 * x2 * x2 * x3 * x3 - 3.0 * x1 * x1 * x2 * x2;
    }
    first.push_back(f / kPerCluster);
    second.push_back(g / kPerCluster);
  }
  const Closed cf = ClosedForm(2, a, b);
  const auto f = MeanAndSe(first);
  const auto g = MeanAndSe(second);
  const double z1 = (f.mean - (2.0 * cf.v + cf.e)) / f.se;
  const double z2 = (g.mean - (8.0 * cf.t - 2.0)) / g.se;

  ModelSpec null_model = Spec(ModelKind::kGaussian, 100);
  null_model.samples = 2000;
  null_model.k = 1;
  null_model.a = 0.2;
  null_model.b = 0.2;
  const SimulationReport null_report =
      RunSimulation(Config(null_model, {TestId::kEzGaussian}, 300))[0];
  ModelSpec alt = null_model;
  alt.k = 2;
  alt.a = a;
  alt.b = b;
  const SimulationReport alt_report =
      RunSimulation(Config(alt, {TestId::kEzGaussian}, 300))[0];

  const bool pass = std::fabs(z1) <= 4.0 && std::fabs(z2) <= 4.0 &&
                    null_report.rejection_rate >= 0.03 &&
                    null_report.rejection_rate <= 0.07 &&
                    alt_report.rejection_rate >= 0.9;
  return {pass,
          Fmt("wick z %.2f, %.2f; null rejection %.3f; alternative rejection "
              "%.3f (delta %.3f)",
              z1, z2, null_report.rejection_rate, alt_report.rejection_rate,
              alt_report.theoretical_delta.value_or(NAN))};
}

std::string RunCli(const std::vector<std::string>& args, const char* threads,
                   int* code) {
  setenv("EZNET_THREADS", threads, 1);
  std::vector<const char*> argv = {"eznet"};
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  *code = cli::Run(static_cast<int>(argv.size()), argv.data(), out, err);
  unsetenv("EZNET_THREADS");
  return out.str();
}

Verdict Criterion11() {
  const std::vector<std::vector<std::string>> commands = {
      {"simulate", "--model", "dcbm", "--n", "300", "--k", "2", "--a", "0.08",
       "--b", "0.02", "--weights", "lognormal:0.4", "--test",
       "ez-dcbm,ez-sbm,er-chi2", "--replicates", "64", "--seed", "12345",
       "--keep-statistics", "--format", "json"},
      {"simulate", "--model", "gaussian", "--vars", "20", "--samples", "200",
       "--k", "2", "--a", "0.3", "--b", "0.1", "--test", "ez-gaussian",
       "--replicates", "32", "--seed", "12345"},
      {"gen", "--model", "neighborhood", "--n", "500", "--k", "3", "--r", "2",
       "--a", "0.05", "--b", "0.01", "--p", "0.4", "--seed", "12345"},
      {"gen", "--model", "gaussian", "--vars", "30", "--samples", "100", "--k",
       "3", "--a", "0.4", "--b", "0.1", "--seed", "12345"},
  };
  int identical = 0;
  bool all_ok = true;
  for (const auto& cmd : commands) {
    int c1 = 0, c2 = 0, c3 = 0;
    const std::string first = RunCli(cmd, "1", &c1);
    const std::string again = RunCli(cmd, "1", &c2);
    const std::string wide = RunCli(cmd, "4", &c3);
    const bool ok = c1 == 0 && c2 == 0 && c3 == 0 && !first.empty() &&
                    first == again && first == wide;
    if (ok) ++identical;
    all_ok = all_ok && ok;
  }
  return {all_ok, Fmt("%d of %zu commands bit-identical across runs and "
                      "EZNET_THREADS in {1, 4}",
                      identical, commands.size())};
}

}  // namespace
}  // namespace eznet

int main() {
  const std::vector<std::function<eznet::Verdict()>> criteria = {
      eznet::Criterion1, eznet::Criterion2, eznet::Criterion3,
      eznet::Criterion4, eznet::Criterion5, eznet::Criterion6,
      eznet::Criterion7, eznet::Criterion8, eznet::Criterion9,
      eznet::Criterion10, eznet::Criterion11};
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    eznet::Verdict v;
    try {
      v = criteria[i]();
    } catch (const std::exception& e) {
      v = {false, std::string("exception: ") + e.what()};
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
            .count();
    std::printf("criterion %zu %s: %s (%.1f s)\n", i + 1,
                v.pass ? "PASS" : "FAIL", v.detail.c_str(), seconds);
    std::fflush(stdout);
    if (!v.pass) ++failed;
  }
  return failed == 0 ? 0 : 1;
}
