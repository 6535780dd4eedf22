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

#include "eznet/network_tests.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <string>

#include "eznet/distributions.h"
#include "eznet/error.h"

namespace eznet {
namespace {

std::string Fmt(const char* format, double x) {
  char buf[128];
  std::snprintf(buf, sizeof(buf), format, x);
  return buf;
}

void AddRegimeNote(const SubgraphDensities& d, TestResult& r) {
  const double bound = std::pow(static_cast<double>(d.n), -2.0 / 3.0);
  if (d.e_hat > bound) {
    r.notes.push_back(Fmt("edge density %.3g exceeds n^(-2/3); the normal "
                          "approximation is not calibrated in this regime",
                          d.e_hat));
  }
}

}  // namespace

std::string_view TestIdName(TestId id) {
  switch (id) {
    case TestId::kEzDcbm:
      return "ez_dcbm";
    case TestId::kEzSbm:
      return "ez_sbm";
    case TestId::kErChi2:
      return "er_chi2";
    case TestId::kEzNeighborhood:
      return "ez_neighborhood";
    case TestId::kEzGaussian:
      return "ez_gaussian";
  }
  return "unknown";
}

std::string_view NullDistributionName(NullDistribution d) {
  return d == NullDistribution::kStandardNormal ? "standard_normal"
                                                : "chi_squared_2";
}

double NormalPValue(double statistic, Alternative alternative) {
  switch (alternative) {
    case Alternative::kTwoSided:
      return std::min(1.0, 2.0 * NormalSf(std::abs(statistic)));
    case Alternative::kGreater:
      return NormalSf(statistic);
    case Alternative::kLess:
      return NormalCdf(statistic);
  }
  return 1.0;
}

TestResult EzTestDcbm(const SubgraphDensities& d, const EzTestOptions& options) {
  if (d.n < 3) throw DomainError("EZ test needs n >= 3");
  if (!(d.e_hat > 0.0)) {
    throw DomainError("EZ test undefined on a graph without edges");
  }
  const double root_triples = std::sqrt(TripleCount(d.n));
  const double ratio = d.v_hat / d.e_hat;
  const double chi = d.t_hat - ratio * ratio * ratio;

  TestResult r;
  r.test_id = TestId::kEzDcbm;
  r.null_distribution = NullDistribution::kStandardNormal;
  switch (options.normalization) {
    case EzNormalization::kVarianceStabilized:
      // std::sqrt(0) == 0, so T = 0 or V = 0 stays well defined.
      r.statistic =
          2.0 * root_triples * (std::sqrt(d.t_hat) - std::pow(ratio, 1.5));
      break;
    case EzNormalization::kTriangle:
      if (!(d.t_hat > 0.0)) {
        throw DomainError("triangle normalization undefined when T = 0");
      }
      r.statistic = root_triples * chi / std::sqrt(d.t_hat);
      break;
    case EzNormalization::kVee:
      if (!(d.v_hat > 0.0)) {
        throw DomainError("vee normalization undefined when V = 0");
      }
      r.statistic = root_triples * chi / std::pow(ratio, 1.5);
      break;
  }
  r.p_value = NormalPValue(r.statistic, options.alternative);
  r.densities = d;
  r.diagnostics["ez_characteristic"] = chi;
  if (r.statistic > 0.0) {
    r.notes.emplace_back("excess triangles: assortative structure");
  } else if (r.statistic < 0.0) {
    r.notes.emplace_back("triangle deficit: disassortative structure");
  }
  AddRegimeNote(d, r);
  return r;
}

TestResult EzTestDcbm(const Graph& g, const EzTestOptions& options) {
  return EzTestDcbm(Densities(g), options);
}

TestResult EzTestSbm(const SubgraphDensities& d, Alternative alternative) {
  if (d.n < 3) throw DomainError("EZ test needs n >= 3");
  TestResult r;
  r.test_id = TestId::kEzSbm;
  r.null_distribution = NullDistribution::kStandardNormal;
  r.statistic = 2.0 * std::sqrt(TripleCount(d.n)) *
                (std::sqrt(d.t_hat) - std::pow(d.e_hat, 1.5));
  r.p_value = NormalPValue(r.statistic, alternative);
  r.densities = d;
  r.diagnostics["t_minus_e_cubed"] = d.t_hat - d.e_hat * d.e_hat * d.e_hat;
  AddRegimeNote(d, r);
  return r;
}

TestResult EzTestSbm(const Graph& g, Alternative alternative) {
  return EzTestSbm(Densities(g), alternative);
}

ErResiduals ComputeErResiduals(const ThreeNodeFrequencies& f) {
  const double p = f.p_hat;
  const double q = 1.0 - p;
  ErResiduals r;
  r.p_hat = p;
  r.t0 = q * q * q - f.f0;
  r.t1 = 3.0 * p * q * q - f.f1;
  r.t2 = 3.0 * p * p * q - f.f2;
  r.t3 = p * p * p - f.f3;
  const double s = 1.0 - 3.0 * p;
  r.var_t2 = 3.0 * p * p * q * q * s * s + 9.0 * p * p * p * q * q * q;
  r.var_t3 = p * p * p * q * q * q + 3.0 * p * p * p * p * q * q;
  return r;
}

TestResult ErChi2Test(const SubgraphDensities& d) {
  const ThreeNodeFrequencies f = ThreeNodeFrequenciesFrom(d);
  if (!(f.p_hat > 0.0 && f.p_hat < 1.0)) {
    throw DomainError("ER chi-squared test needs edge density strictly "
                      "between 0 and 1");
  }
  const ErResiduals res = ComputeErResiduals(f);
  if (!(res.var_t2 > 0.0) || !(res.var_t3 > 0.0)) {
    throw DomainError("ER chi-squared variance underflowed to zero");
  }
  TestResult r;
  r.test_id = TestId::kErChi2;
  r.null_distribution = NullDistribution::kChiSquared2;
  r.statistic = TripleCount(d.n) * (res.t2 * res.t2 / res.var_t2 +
                                    res.t3 * res.t3 / res.var_t3);
  r.p_value = ChiSquared2Sf(r.statistic);
  r.densities = d;
  r.diagnostics["p_hat"] = res.p_hat;
  r.diagnostics["t0"] = res.t0;
  r.diagnostics["t1"] = res.t1;
  r.diagnostics["t2"] = res.t2;
  r.diagnostics["t3"] = res.t3;
  if (f.p_hat > 0.25) {
    r.notes.push_back(Fmt("edge density %.3g is large; the chi-squared limit "
                          "assumes p = o(1)",
                          f.p_hat));
  }
  const double s = 1.0 - 3.0 * f.p_hat;
  if (s * s < 1e-4) {
    r.notes.emplace_back(
        "edge density near 1/3: the vee variance is carried by its "
        "9p^3(1-p)^3 term alone");
  }
  return r;
}

TestResult ErChi2Test(const Graph& g) { return ErChi2Test(Densities(g)); }

TestResult EzTestNeighborhood(const Graph& g, NodeId ego,
                              const EzTestOptions& options) {
  const Graph sub = NeighborhoodSubgraph(g, ego);
  const std::int64_t m = sub.num_nodes();
  if (m < 3) {
    throw DomainError("neighborhood too small: m = " + std::to_string(m) +
                      " (need m >= 3)");
  }
  if (sub.num_edges() == 0) {
    throw DomainError("neighborhood has no edges; EZ test undefined");
  }
  TestResult r = EzTestDcbm(sub, options);
  r.test_id = TestId::kEzNeighborhood;
  r.diagnostics["m"] = static_cast<double>(m);
  r.notes.push_back("m=" + std::to_string(m));
  return r;
}

double TheoreticalDeltaDcbm(const DcbmParams& params) {
  const double k = params.k;
  const double denom = k * (params.a + (k - 1.0) * params.b);
  if (!(denom > 0.0)) {
    throw DomainError("delta undefined: a + (k-1) b must be positive");
  }
  return (k - 1.0) * std::pow(params.a - params.b, 3) / std::sqrt(6.0) *
         std::pow(static_cast<double>(params.n) / denom, 1.5);
}

double TheoreticalDeltaNeighborhood(const NeighborhoodParams& params) {
  const double r = params.r;
  const double denom = r * (params.a + (r - 1.0) * params.b);
  if (!(denom > 0.0)) {
    throw DomainError("delta undefined: r (a + (r-1) b) must be positive");
  }
  const double expected_m = static_cast<double>(params.n) * r * params.p /
                            static_cast<double>(params.k);
  return (r - 1.0) * std::pow(params.a - params.b, 3) / std::sqrt(6.0) *
         std::pow(expected_m / denom, 1.5);
}

}  // namespace eznet
