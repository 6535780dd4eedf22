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

#include "eznet/gaussian.h"

#include <array>
#include <cmath>
#include <string>

#include "eznet/error.h"
#include "eznet/subgraph_stats.h"

namespace eznet {
namespace {

struct PowerSums {
  double s1 = 0.0, s2 = 0.0, s3 = 0.0, s4 = 0.0, s6 = 0.0;
};

PowerSums RowPowerSums(std::span<const double> row) {
  PowerSums ps;
  for (const double x : row) {
    const double x2 = x * x;
    ps.s1 += x;
    ps.s2 += x2;
    ps.s3 += x2 * x;
    ps.s4 += x2 * x2;
    ps.s6 += x2 * x2 * x2;
  }
  return ps;
}

// d(T - a V + b E)/d s_k for k = 1, 2, 3, 4, 6 (index 0..4).
std::array<double, 5> ChiGradient(const PowerSums& ps, double pairs,
                                  double triples, double v_coef,
                                  double e_coef) {
  const double de1 = ps.s1 / pairs;
  const double de2 = -0.5 / pairs;

  const double dv1 = (ps.s1 * ps.s2 - ps.s3) / (6.0 * triples) - 0.5 * de1;
  const double dv2 = (0.5 * ps.s1 * ps.s1 - ps.s2) / (6.0 * triples) - 0.5 * de2;
  const double dv3 = -ps.s1 / (6.0 * triples);
  const double dv4 = 1.0 / (6.0 * triples);

  const double dt2 = (ps.s2 * ps.s2 - ps.s4) / (16.0 * triples) -
                     3.0 * ps.s2 / (8.0 * pairs);
  const double dt4 = -ps.s2 / (16.0 * triples) + 3.0 / (16.0 * pairs);
  const double dt6 = 1.0 / (24.0 * triples);

  return {-v_coef * dv1 + e_coef * de1,
          dt2 - v_coef * dv2 + e_coef * de2,
          -v_coef * dv3,
          dt4 - v_coef * dv4,
          dt6};
}

}  // namespace

SampleMoments RowMoments(std::span<const double> row) {
  const auto p = static_cast<std::int64_t>(row.size());
  if (p < 3) throw DomainError("Gaussian moments need p >= 3 variables");
  const auto [s1, s2, s3, s4, s6] = RowPowerSums(row);
  const double pairs = PairCount(p);
  const double triples = TripleCount(p);

  const double cross = 0.5 * (s1 * s1 - s2);
  const double one_squared = 0.5 * (s1 * s1 * s2 - 2.0 * s1 * s3 + 2.0 * s4 - s2 * s2);
  const double two_squared = 0.5 * (s2 * s2 - s4);
  const double three_squared = (s2 * s2 * s2 - 3.0 * s2 * s4 + 2.0 * s6) / 6.0;

  SampleMoments m;
  m.e = cross / pairs;
  m.v = one_squared / (6.0 * triples) - 0.5 * m.e;
  m.t = three_squared / (8.0 * triples) - 3.0 * two_squared / (8.0 * pairs) + 0.25;
  return m;
}

GaussianMoments ComputeGaussianMoments(const DataMatrix& d) {
  if (d.cols() < 3) throw DomainError("Gaussian moments need p >= 3 variables");
  if (d.rows() < 2) throw DomainError("Gaussian moments need n >= 2 samples");
  GaussianMoments m;
  m.n = d.rows();
  m.p = d.cols();
  m.per_sample.reserve(static_cast<std::size_t>(d.rows()));
  for (std::int64_t i = 0; i < d.rows(); ++i) {
    const SampleMoments s = RowMoments(d.row(i));
    m.per_sample.push_back(s);
    m.e_hat += s.e;
    m.v_hat += s.v;
    m.t_hat += s.t;
  }
  const double n = static_cast<double>(m.n);
  m.e_hat /= n;
  m.v_hat /= n;
  m.t_hat /= n;
  return m;
}

GaussianVariance ComputeGaussianVariance(const GaussianMoments& m) {
  if (m.e_hat == 0.0) throw DomainError("variance estimator needs E != 0");
  if (m.n < 2) throw DomainError("variance estimator needs n >= 2 samples");
  const double e = m.e_hat;
  const double v = m.v_hat;
  const double v_coef = 3.0 * v * v / (e * e * e);
  const double e_coef = 3.0 * v * v * v / (e * e * e * e);

  GaussianVariance out;
  out.q_values.reserve(m.per_sample.size());
  double mean = 0.0;
  for (const SampleMoments& s : m.per_sample) {
    const double q = s.t - v_coef * s.v + e_coef * s.e;
    out.q_values.push_back(q);
    mean += q;
  }
  mean /= static_cast<double>(m.n);
  double ss = 0.0;
  for (const double q : out.q_values) ss += (q - mean) * (q - mean);
  out.sigma2_hat = ss / static_cast<double>(m.n - 1);
  return out;
}

ColumnSensitivity ComputeColumnSensitivity(const DataMatrix& standardized,
                                           const GaussianMoments& m) {
  if (m.e_hat == 0.0) throw DomainError("sensitivity needs E != 0");
  const auto n = standardized.rows();
  const auto p = standardized.cols();
  const double pairs = PairCount(p);
  const double triples = TripleCount(p);
  const double e = m.e_hat;
  const double v = m.v_hat;
  const double v_coef = 3.0 * v * v / (e * e * e);
  const double e_coef = 3.0 * v * v * v / (e * e * e * e);

  ColumnSensitivity out;
  out.scale.assign(static_cast<std::size_t>(p), 0.0);
  out.shift.assign(static_cast<std::size_t>(p), 0.0);
  for (std::int64_t i = 0; i < n; ++i) {
    const auto row = standardized.row(i);
    const auto g = ChiGradient(RowPowerSums(row), pairs, triples, v_coef, e_coef);
    for (std::int64_t j = 0; j < p; ++j) {
      const double y = row[static_cast<std::size_t>(j)];
      const double y2 = y * y;
      const double y4 = y2 * y2;
      // x_j d/dx_j and d/dx_j of a function of the power sums.
      out.scale[static_cast<std::size_t>(j)] +=
          g[0] * y + 2.0 * g[1] * y2 + 3.0 * g[2] * y2 * y + 4.0 * g[3] * y4 +
          6.0 * g[4] * y4 * y2;
      out.shift[static_cast<std::size_t>(j)] +=
          g[0] + 2.0 * g[1] * y + 3.0 * g[2] * y2 + 4.0 * g[3] * y2 * y +
          6.0 * g[4] * y4 * y;
    }
  }
  for (std::int64_t j = 0; j < p; ++j) {
    out.scale[static_cast<std::size_t>(j)] /= static_cast<double>(n);
    out.shift[static_cast<std::size_t>(j)] /= static_cast<double>(n);
  }
  return out;
}

std::vector<double> StandardizationInfluence(const DataMatrix& standardized,
                                             const GaussianMoments& m) {
  const ColumnSensitivity sens = ComputeColumnSensitivity(standardized, m);
  std::vector<double> out(static_cast<std::size_t>(standardized.rows()), 0.0);
  for (std::int64_t i = 0; i < standardized.rows(); ++i) {
    const auto row = standardized.row(i);
    double acc = 0.0;
    for (std::int64_t j = 0; j < standardized.cols(); ++j) {
      const auto uj = static_cast<std::size_t>(j);
      const double y = row[uj];
      acc -= 0.5 * sens.scale[uj] * (y * y - 1.0) + sens.shift[uj] * y;
    }
    out[static_cast<std::size_t>(i)] = acc;
  }
  return out;
}

GaussianVariance ComputeStandardizedGaussianVariance(
    const DataMatrix& standardized, const GaussianMoments& m) {
  GaussianVariance out = ComputeGaussianVariance(m);
  const std::vector<double> extra = StandardizationInfluence(standardized, m);
  double mean = 0.0;
  for (std::size_t i = 0; i < out.q_values.size(); ++i) {
    out.q_values[i] += extra[i];
    mean += out.q_values[i];
  }
  mean /= static_cast<double>(out.q_values.size());
  double ss = 0.0;
  for (const double q : out.q_values) ss += (q - mean) * (q - mean);
  out.sigma2_hat = ss / static_cast<double>(out.q_values.size() - 1);
  return out;
}

double EHatZScore(const GaussianMoments& m) {
  if (m.n < 2) throw DomainError("z score needs n >= 2");
  double ss = 0.0;
  for (const SampleMoments& s : m.per_sample) {
    ss += (s.e - m.e_hat) * (s.e - m.e_hat);
  }
  const double sd = std::sqrt(ss / static_cast<double>(m.n - 1));
  if (sd == 0.0) return m.e_hat == 0.0 ? 0.0 : std::copysign(HUGE_VAL, m.e_hat);
  return std::sqrt(static_cast<double>(m.n)) * m.e_hat / sd;
}

TestResult EzTestGaussian(const DataMatrix& d,
                          const GaussianTestOptions& options) {
  if (d.cols() < 3) throw DomainError("Gaussian EZ test needs p >= 3 variables");
  if (d.rows() < 2) throw DomainError("Gaussian EZ test needs n >= 2 samples");
  const DataMatrix y = options.standardize ? StandardizeColumns(d) : d;
  const GaussianMoments m = ComputeGaussianMoments(y);
  if (m.e_hat == 0.0) throw DomainError("Gaussian EZ test undefined when E = 0");
  const double e_z = EHatZScore(m);
  const bool adjust = options.standardize &&
                      std::fabs(e_z) >= options.min_e_z_for_adjustment;
  const GaussianVariance var = adjust
                                   ? ComputeStandardizedGaussianVariance(y, m)
                                   : ComputeGaussianVariance(m);
  if (!(var.sigma2_hat > 0.0)) {
    throw DomainError("degenerate variance: all Q_i are equal");
  }
  const double ratio = m.v_hat / m.e_hat;
  const double chi = m.t_hat - ratio * ratio * ratio;

  TestResult r;
  r.test_id = TestId::kEzGaussian;
  r.null_distribution = NullDistribution::kStandardNormal;
  r.statistic = std::sqrt(static_cast<double>(m.n)) * chi /
                std::sqrt(var.sigma2_hat);
  r.p_value = NormalPValue(r.statistic, options.alternative);
  r.diagnostics["n"] = static_cast<double>(m.n);
  r.diagnostics["p"] = static_cast<double>(m.p);
  r.diagnostics["e_hat"] = m.e_hat;
  r.diagnostics["v_hat"] = m.v_hat;
  r.diagnostics["t_hat"] = m.t_hat;
  r.diagnostics["ez_characteristic"] = chi;
  r.diagnostics["sigma2_hat"] = var.sigma2_hat;
  r.diagnostics["e_hat_z"] = e_z;
  if (!options.standardize) {
    r.notes.emplace_back("columns used as given (no standardization)");
  } else if (adjust) {
    r.notes.emplace_back(
        "columns standardized to mean 0, variance 1; variance includes the "
        "influence of the estimated column scales");
  } else {
    r.notes.emplace_back(
        "columns standardized to mean 0, variance 1; E not distinguishable "
        "from 0, variance left unadjusted");
  }
  return r;
}

double TheoreticalDeltaGaussian(int k, double a, double b, std::int64_t n) {
  if (a == 0.0 && b == 0.0) {
    throw DomainError("Gaussian delta undefined when a = b = 0");
  }
  const double kk = k;
  const double spread = 9.0 / 32.0 * (a * a / kk + (kk - 1.0) / kk * b * b);
  return std::sqrt(static_cast<double>(n)) * (kk - 1.0) * std::pow(a - b, 3) /
         (kk * kk * kk * std::sqrt(spread));
}

}  // namespace eznet
