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

#ifndef EZNET_SUBGRAPH_STATS_H_
#define EZNET_SUBGRAPH_STATS_H_

#include <cstdint>

#include "eznet/graph.h"

namespace eznet {

// Edge, vee and triangle densities of one graph, with the integer counts
// they were divided from.
//
//   e_hat = edges / C(n,2)
//   v_hat = vees / (3 C(n,3))    vees = sum_i C(d_i, 2), closed or not
//   t_hat = triangles / C(n,3)
struct SubgraphDensities {
  std::int64_t n = 0;
  std::int64_t edges = 0;
  std::int64_t vees = 0;
  std::int64_t triangles = 0;
  double e_hat = 0.0;
  double v_hat = 0.0;
  double t_hat = 0.0;

  friend bool operator==(const SubgraphDensities&,
                         const SubgraphDensities&) = default;
};

// Relative frequencies of the four three-node subgraphs (0..3 edges) and the
// edge frequency p_hat.
struct ThreeNodeFrequencies {
  double f0 = 0.0;
  double f1 = 0.0;
  double f2 = 0.0;
  double f3 = 0.0;
  double p_hat = 0.0;
};

// C(n,2) and C(n,3) as doubles; exact while they fit in 53 bits.
double PairCount(std::int64_t n);
double TripleCount(std::int64_t n);

// Builds the densities from raw counts. Throws DomainError when n < 3.
SubgraphDensities DensitiesFromCounts(std::int64_t n, std::int64_t edges,
                                      std::int64_t vees,
                                      std::int64_t triangles);

// Sparse path: degree sums for vees and sorted-adjacency intersection per
// edge for triangles. Throws DomainError when g has fewer than 3 nodes.
SubgraphDensities Densities(const Graph& g);

// Literal sums over all i < j < l. O(n^3); reference for tests.
SubgraphDensities DensitiesOracle(const Graph& g);

std::int64_t CountTriangles(const Graph& g);

ThreeNodeFrequencies ThreeNodeFrequenciesFrom(const SubgraphDensities& d);
ThreeNodeFrequencies ComputeThreeNodeFrequencies(const Graph& g);

// t_hat - (v_hat / e_hat)^3. Throws DomainError when e_hat == 0.
double EzCharacteristic(const SubgraphDensities& d);

}  // namespace eznet

#endif  // EZNET_SUBGRAPH_STATS_H_
