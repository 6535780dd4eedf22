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

#include "eznet/generators.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <string>

#include <Eigen/Cholesky>
#include <Eigen/Core>

#include "eznet/error.h"

namespace eznet {
namespace {

void CheckNodeCount(std::int64_t n) {
  if (n < 0 || n >= std::numeric_limits<NodeId>::max()) {
    throw DomainError("node count out of range: " + std::to_string(n));
  }
}

std::vector<int> DrawLabels(std::int64_t n, int k, Seed seed) {
  Rng rng(seed, Stream::kLabels);
  std::vector<int> labels(static_cast<std::size_t>(n));
  for (auto& z : labels) z = static_cast<int>(rng.UniformInt(static_cast<std::uint64_t>(k)));
  return labels;
}

std::vector<double> DrawWeights(std::int64_t n, const WeightDistribution& w,
                                Seed seed) {
  Rng rng(seed, Stream::kWeights);
  std::vector<double> weights(static_cast<std::size_t>(n));
  for (auto& x : weights) x = w.Draw(rng);
  return weights;
}

struct EdgeDraw {
  std::vector<Edge> edges;
  std::int64_t clipped = 0;
};

// One uniform per pair (i < j) in lexicographic order; node ids are shifted
// by `offset` in the output.
EdgeDraw DrawDcbmEdges(const std::vector<int>& labels,
                       const std::vector<double>& weights, double a, double b,
                       Seed seed, NodeId offset) {
  Rng rng(seed, Stream::kEdges);
  EdgeDraw out;
  const auto n = static_cast<NodeId>(labels.size());
  for (NodeId i = 0; i < n; ++i) {
    const double wi = weights[static_cast<std::size_t>(i)];
    const int zi = labels[static_cast<std::size_t>(i)];
    for (NodeId j = i + 1; j < n; ++j) {
      const double theta = wi * weights[static_cast<std::size_t>(j)] *
                           (zi == labels[static_cast<std::size_t>(j)] ? a : b);
      if (theta > 1.0) ++out.clipped;
      if (rng.Uniform() < theta) {
        out.edges.push_back({static_cast<NodeId>(i + offset),
                             static_cast<NodeId>(j + offset)});
      }
    }
  }
  return out;
}

std::vector<std::string> ClipWarnings(std::int64_t clipped, std::int64_t n) {
  std::vector<std::string> warnings;
  if (clipped == 0) return warnings;
  const double pairs = 0.5 * static_cast<double>(n) * static_cast<double>(n - 1);
  const double fraction = static_cast<double>(clipped) / pairs;
  char buf[160];
  std::snprintf(buf, sizeof(buf),
                "%lld of %.0f pairs had edge probability above 1 and were "
                "clipped (%.3g%%)",
                static_cast<long long>(clipped), pairs, 100.0 * fraction);
  warnings.emplace_back(buf);
  if (fraction > kClipWarningFraction) {
    warnings.emplace_back(
        "clipping exceeds 0.1% of pairs; parameters are outside the "
        "model's intended regime");
  }
  return warnings;
}

}  // namespace

Graph SampleEr(std::int64_t n, double p, Seed seed) {
  CheckNodeCount(n);
  if (!(p >= 0.0 && p <= 1.0)) {
    throw DomainError("ER edge probability must lie in [0, 1]");
  }
  Rng rng(seed, Stream::kEdges);
  std::vector<Edge> edges;
  const auto nn = static_cast<NodeId>(n);
  for (NodeId i = 0; i < nn; ++i) {
    for (NodeId j = i + 1; j < nn; ++j) {
      if (rng.Uniform() < p) edges.push_back({i, j});
    }
  }
  return Graph::FromSortedUniqueEdges(n, std::move(edges));
}

DcbmSample SampleDcbm(const DcbmParams& params, Seed seed) {
  params.Validate();
  CheckNodeCount(params.n);
  DcbmSample s;
  s.labels = DrawLabels(params.n, params.k, seed);
  s.weights = DrawWeights(params.n, params.weights, seed);
  auto draw = DrawDcbmEdges(s.labels, s.weights, params.a, params.b, seed, 0);
  s.graph = Graph::FromSortedUniqueEdges(params.n, std::move(draw.edges));
  s.clipped_pairs = draw.clipped;
  s.warnings = ClipWarnings(draw.clipped, params.n);
  return s;
}

DcbmSample SampleSbm(std::int64_t n, int k, double a, double b, Seed seed) {
  return SampleDcbm({n, k, a, b, WeightDistribution::ConstantOne()}, seed);
}

DcbmSample SampleConfig(std::int64_t n, double a,
                        const WeightDistribution& weights, Seed seed) {
  return SampleDcbm({n, 1, a, a, weights}, seed);
}

NeighborhoodSample SampleNeighborhoodModel(const NeighborhoodParams& params,
                                           Seed seed) {
  params.Validate();
  CheckNodeCount(params.n + 1);
  NeighborhoodSample s;
  s.labels = DrawLabels(params.n, params.k, seed);
  s.weights = DrawWeights(params.n, params.weights, seed);
  auto draw = DrawDcbmEdges(s.labels, s.weights, params.a, params.b, seed, 1);

  Rng ego_rng(seed, Stream::kEgo);
  std::vector<Edge> all;
  all.reserve(draw.edges.size() + static_cast<std::size_t>(params.n));
  for (std::int64_t i = 0; i < params.n; ++i) {
    // Always consume one draw per node so the stream stays aligned.
    const bool attach = ego_rng.Uniform() < params.p;
    if (attach && s.labels[static_cast<std::size_t>(i)] < params.r) {
      all.push_back({0, static_cast<NodeId>(i + 1)});
    }
  }
  std::vector<Edge> ambient;
  ambient.reserve(draw.edges.size());
  for (const Edge& e : draw.edges) {
    all.push_back(e);
    ambient.push_back({static_cast<NodeId>(e.u - 1), static_cast<NodeId>(e.v - 1)});
  }
  s.graph = Graph::FromSortedUniqueEdges(params.n + 1, std::move(all));
  s.ambient = Graph::FromSortedUniqueEdges(params.n, std::move(ambient));
  s.clipped_pairs = draw.clipped;
  s.warnings = ClipWarnings(draw.clipped, params.n);
  return s;
}

GaussianSample SampleGaussianDcbm(std::int64_t n_samples,
                                  const DcbmParams& params, Seed seed) {
  if (n_samples < 1) throw DomainError("need at least one observation");
  if (params.n < 1) throw DomainError("need at least one variable");
  if (params.k < 1) throw DomainError("need k >= 1");
  if (!(std::abs(params.a) <= 1.0) || !(std::abs(params.b) <= 1.0)) {
    throw DomainError(
        "a and b are correlations and must lie in [-1, 1]");
  }
  const auto p = params.n;
  GaussianSample s;
  s.labels = DrawLabels(p, params.k, seed);
  s.weights = DrawWeights(p, params.weights, seed);

  Eigen::MatrixXd sigma(p, p);
  for (std::int64_t j = 0; j < p; ++j) {
    sigma(j, j) = 1.0;
    for (std::int64_t l = j + 1; l < p; ++l) {
      const auto uj = static_cast<std::size_t>(j);
      const auto ul = static_cast<std::size_t>(l);
      const double theta = s.weights[uj] * s.weights[ul] *
                           (s.labels[uj] == s.labels[ul] ? params.a : params.b);
      sigma(j, l) = theta;
      sigma(l, j) = theta;
    }
  }
  const Eigen::LLT<Eigen::MatrixXd> llt(sigma);
  if (llt.info() != Eigen::Success) {
    throw DomainError(
        "realized covariance is not positive definite; use smaller |a|, |b| "
        "or a lighter-tailed weight distribution");
  }
  const Eigen::MatrixXd lower = llt.matrixL();

  Rng rng(seed, Stream::kObservations);
  std::vector<double> values(static_cast<std::size_t>(n_samples * p));
  Eigen::VectorXd z(p);
  for (std::int64_t i = 0; i < n_samples; ++i) {
    for (std::int64_t j = 0; j < p; ++j) z(j) = rng.Normal();
    // Row i = L z, accumulated over the lower triangle in a fixed order.
    for (std::int64_t j = 0; j < p; ++j) {
      double acc = 0.0;
      for (std::int64_t l = 0; l <= j; ++l) acc += lower(j, l) * z(l);
      values[static_cast<std::size_t>(i * p + j)] = acc;
    }
  }
  s.data = DataMatrix(n_samples, p, std::move(values));
  return s;
}

}  // namespace eznet
