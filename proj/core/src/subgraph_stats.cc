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

#include "eznet/subgraph_stats.h"

#include <algorithm>
#include <cmath>
#include <string>

#include "eznet/error.h"

namespace eznet {
namespace {

constexpr std::int64_t kExactChooseLimit = std::int64_t{1} << 20;

void RequireThreeNodes(std::int64_t n) {
  if (n < 3) {
    throw DomainError("three-node statistics undefined for n = " +
                      std::to_string(n) + " (need n >= 3)");
  }
}

}  // namespace

double PairCount(std::int64_t n) {
  if (n < 2) return 0.0;
  return static_cast<double>(n * (n - 1) / 2);
}

double TripleCount(std::int64_t n) {
  if (n < 3) return 0.0;
  if (n < kExactChooseLimit) {
    return static_cast<double>(n * (n - 1) / 2 * (n - 2) / 3);
  }
  const long double m = static_cast<long double>(n);
  return static_cast<double>(m * (m - 1) * (m - 2) / 6);
}

SubgraphDensities DensitiesFromCounts(std::int64_t n, std::int64_t edges,
                                      std::int64_t vees,
                                      std::int64_t triangles) {
  RequireThreeNodes(n);
  SubgraphDensities d;
  d.n = n;
  d.edges = edges;
  d.vees = vees;
  d.triangles = triangles;
  const double triples = TripleCount(n);
  d.e_hat = static_cast<double>(edges) / PairCount(n);
  d.v_hat = static_cast<double>(vees) / (3.0 * triples);
  d.t_hat = static_cast<double>(triangles) / triples;
  return d;
}

std::int64_t CountTriangles(const Graph& g) {
  // Each triangle u < v < w is found once, from edge (u, v), by intersecting
  // the parts of both neighbor lists above v.
  std::int64_t total = 0;
  for (const Edge& e : g.edges()) {
    const auto nu = g.neighbors(e.u);
    const auto nv = g.neighbors(e.v);
    auto it = std::upper_bound(nu.begin(), nu.end(), e.v);
    auto jt = std::upper_bound(nv.begin(), nv.end(), e.v);
    while (it != nu.end() && jt != nv.end()) {
      if (*it < *jt) {
        ++it;
      } else if (*jt < *it) {
        ++jt;
      } else {
        ++total;
        ++it;
        ++jt;
      }
    }
  }
  return total;
}

SubgraphDensities Densities(const Graph& g) {
  RequireThreeNodes(g.num_nodes());
  std::int64_t vees = 0;
  for (NodeId v = 0; v < g.num_nodes(); ++v) {
    const std::int64_t d = g.degree(v);
    vees += d * (d - 1) / 2;
  }
  return DensitiesFromCounts(g.num_nodes(), g.num_edges(), vees,
                             CountTriangles(g));
}

SubgraphDensities DensitiesOracle(const Graph& g) {
  const std::int64_t n = g.num_nodes();
  RequireThreeNodes(n);
  const auto adj = [&](std::int64_t i, std::int64_t j) -> std::int64_t {
    return g.has_edge(static_cast<NodeId>(i), static_cast<NodeId>(j)) ? 1 : 0;
  };
  std::int64_t edges = 0;
  for (std::int64_t i = 0; i < n; ++i) {
    for (std::int64_t j = i + 1; j < n; ++j) edges += adj(i, j);
  }
  std::int64_t vees = 0;
  std::int64_t triangles = 0;
  for (std::int64_t i = 0; i < n; ++i) {
    for (std::int64_t j = i + 1; j < n; ++j) {
      const auto aij = adj(i, j);
      for (std::int64_t l = j + 1; l < n; ++l) {
        const auto ail = adj(i, l);
        const auto ajl = adj(j, l);
        vees += aij * ail + aij * ajl + ail * ajl;
        triangles += aij * ail * ajl;
      }
    }
  }
  return DensitiesFromCounts(n, edges, vees, triangles);
}

ThreeNodeFrequencies ThreeNodeFrequenciesFrom(const SubgraphDensities& d) {
  RequireThreeNodes(d.n);
  // Integer counts of triples with exactly 3, 2, 1, 0 edges. A triangle
  // holds three vees; an edge lies in n - 2 triples, each with 1, 2 or 3
  // edges counted once per edge.
  const std::int64_t c3 = d.triangles;
  const std::int64_t c2 = d.vees - 3 * d.triangles;
  const std::int64_t c1 = (d.n - 2) * d.edges - 2 * c2 - 3 * c3;
  const double triples = TripleCount(d.n);
  ThreeNodeFrequencies f;
  f.f3 = static_cast<double>(c3) / triples;
  f.f2 = static_cast<double>(c2) / triples;
  f.f1 = static_cast<double>(c1) / triples;
  f.f0 = (triples - static_cast<double>(c1 + c2 + c3)) / triples;
  f.p_hat = d.e_hat;
  return f;
}

ThreeNodeFrequencies ComputeThreeNodeFrequencies(const Graph& g) {
  return ThreeNodeFrequenciesFrom(Densities(g));
}

double EzCharacteristic(const SubgraphDensities& d) {
  if (!(d.e_hat > 0.0)) {
    throw DomainError("EZ characteristic undefined on empty graph");
  }
  const double ratio = d.v_hat / d.e_hat;
  return d.t_hat - ratio * ratio * ratio;
}

}  // namespace eznet
