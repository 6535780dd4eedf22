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

#include "eznet/correlation.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "eznet/error.h"

namespace eznet {

CorrelationMethod ParseCorrelationMethod(std::string_view name) {
  if (name == "spearman") return CorrelationMethod::kSpearman;
  if (name == "pearson") return CorrelationMethod::kPearson;
  throw DomainError("unknown correlation method '" + std::string(name) + "'");
}

std::vector<double> AverageRanks(std::span<const double> values) {
  const std::size_t n = values.size();
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return values[a] < values[b];
  });
  std::vector<double> ranks(n);
  std::size_t i = 0;
  while (i < n) {
    std::size_t j = i + 1;
    while (j < n && values[order[j]] == values[order[i]]) ++j;
    // Positions i..j-1 share ranks i+1..j.
    const double avg = 0.5 * static_cast<double>(i + 1 + j);
    for (std::size_t t = i; t < j; ++t) ranks[order[t]] = avg;
    i = j;
  }
  return ranks;
}

double PearsonCorrelation(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size() || x.size() < 2) {
    throw DomainError("correlation needs two equal-length samples of size >= 2");
  }
  const double n = static_cast<double>(x.size());
  const double mx = std::accumulate(x.begin(), x.end(), 0.0) / n;
  const double my = std::accumulate(y.begin(), y.end(), 0.0) / n;
  double sxy = 0.0;
  double sxx = 0.0;
  double syy = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double dx = x[i] - mx;
    const double dy = y[i] - my;
    sxy += dx * dy;
    sxx += dx * dx;
    syy += dy * dy;
  }
  if (!(sxx > 0.0) || !(syy > 0.0)) {
    throw DomainError("correlation undefined for a constant sample");
  }
  return std::clamp(sxy / std::sqrt(sxx * syy), -1.0, 1.0);
}

Graph CorrelationGraph(const DataMatrix& d, double threshold,
                       CorrelationMethod method) {
  if (d.rows() < 3) throw DomainError("correlation graph needs at least 3 rows");
  if (!(threshold > -1.0 && threshold < 1.0)) {
    throw DomainError("correlation threshold must lie in (-1, 1)");
  }
  const auto p = d.cols();
  std::vector<std::vector<double>> columns(static_cast<std::size_t>(p));
  for (std::int64_t j = 0; j < p; ++j) {
    auto col = d.column(j);
    if (std::all_of(col.begin(), col.end(),
                    [&](double v) { return v == col.front(); })) {
      throw DomainError("column '" + d.column_label(j) +
                        "' is constant; correlation undefined");
    }
    columns[static_cast<std::size_t>(j)] =
        method == CorrelationMethod::kSpearman ? AverageRanks(col) : std::move(col);
  }
  std::vector<Edge> edges;
  for (std::int64_t i = 0; i < p; ++i) {
    for (std::int64_t j = i + 1; j < p; ++j) {
      const double r = PearsonCorrelation(columns[static_cast<std::size_t>(i)],
                                          columns[static_cast<std::size_t>(j)]);
      if (r > threshold) {
        edges.push_back({static_cast<NodeId>(i), static_cast<NodeId>(j)});
      }
    }
  }
  return Graph::FromSortedUniqueEdges(p, std::move(edges));
}

}  // namespace eznet
