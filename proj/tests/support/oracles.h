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


// Literal reference computations for tests. Nothing here calls the fast
// paths of the library; each quantity is a direct sum over pairs or triples.

#ifndef EZNET_TESTS_SUPPORT_ORACLES_H_
#define EZNET_TESTS_SUPPORT_ORACLES_H_

#include <cmath>
#include <cstdint>
#include <random>
#include <span>
#include <vector>

#include "eznet/graph.h"

namespace eznet::testing {

inline std::vector<std::vector<int>> DenseAdjacency(const Graph& g) {
  const auto n = static_cast<std::size_t>(g.num_nodes());
  std::vector<std::vector<int>> a(n, std::vector<int>(n, 0));
  for (const Edge& e : g.edges()) {
    a[static_cast<std::size_t>(e.u)][static_cast<std::size_t>(e.v)] = 1;
    a[static_cast<std::size_t>(e.v)][static_cast<std::size_t>(e.u)] = 1;
  }
  return a;
}

// Triples i < j < l by number of edges among them.
struct TripleCensus {
  std::int64_t c[4] = {0, 0, 0, 0};
  std::int64_t triples = 0;
};

inline TripleCensus CensusLiterally(const Graph& g) {
  const auto a = DenseAdjacency(g);
  const auto n = a.size();
  TripleCensus out;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      for (std::size_t l = j + 1; l < n; ++l) {
        ++out.c[a[i][j] + a[i][l] + a[j][l]];
        ++out.triples;
      }
    }
  }
  return out;
}

// Counts inside the ego's neighborhood, written with the ego's row A_0i as
// an indicator over all other nodes.
struct NeighborhoodSums {
  std::int64_t m = 0;
  std::int64_t edges = 0;
  std::int64_t vees = 0;
  std::int64_t triangles = 0;
};

inline NeighborhoodSums NeighborhoodSumsLiterally(const Graph& g, NodeId ego) {
  const auto a = DenseAdjacency(g);
  const auto n = a.size();
  const auto o = static_cast<std::size_t>(ego);
  NeighborhoodSums s;
  for (std::size_t i = 0; i < n; ++i) s.m += a[o][i];
  for (std::size_t i = 0; i < n; ++i) {
    if (i == o) continue;
    for (std::size_t j = i + 1; j < n; ++j) {
      if (j == o) continue;
      s.edges += a[i][j] * a[o][i] * a[o][j];
      for (std::size_t l = j + 1; l < n; ++l) {
        if (l == o) continue;
        const int in = a[o][i] * a[o][j] * a[o][l];
        s.vees += (a[i][j] * a[i][l] + a[i][j] * a[j][l] + a[i][l] * a[j][l]) * in;
        s.triangles += a[i][j] * a[j][l] * a[i][l] * in;
      }
    }
  }
  return s;
}

// Per-observation Gaussian moment estimates from literal j < l < m sums.
struct LiteralRowMoments {
  double e = 0.0;
  double v = 0.0;
  double t = 0.0;
};

inline LiteralRowMoments RowMomentsLiterally(std::span<const double> x) {
  const std::size_t p = x.size();
  const double pairs = static_cast<double>(p * (p - 1) / 2);
  const double triples = static_cast<double>(p * (p - 1) * (p - 2) / 6);
  double cross = 0.0;
  double sq_pairs = 0.0;
  double one_sq = 0.0;
  double three_sq = 0.0;
  for (std::size_t j = 0; j < p; ++j) {
    for (std::size_t l = j + 1; l < p; ++l) {
      cross += x[j] * x[l];
      sq_pairs += x[j] * x[j] * x[l] * x[l];
      for (std::size_t m = l + 1; m < p; ++m) {
        one_sq += x[j] * x[j] * x[l] * x[m] + x[j] * x[l] * x[l] * x[m] +
                  x[j] * x[l] * x[m] * x[m];
        three_sq += x[j] * x[j] * x[l] * x[l] * x[m] * x[m];
      }
    }
  }
  LiteralRowMoments r;
  r.e = cross / pairs;
  r.v = one_sq / (6.0 * triples) - 0.5 * r.e;
  r.t = three_sq / (8.0 * triples) - 3.0 * sq_pairs / (8.0 * pairs) + 0.25;
  return r;
}

// Bit b of `mask` selects the b-th pair (i, j), i < j, in lexicographic order.
inline Graph GraphFromMask(int n, std::uint64_t mask) {
  std::vector<Edge> edges;
  int bit = 0;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j, ++bit) {
      if ((mask >> bit) & 1U) edges.push_back({i, j});
    }
  }
  return Graph::FromEdges(n, edges);
}

inline Graph RandomGraph(int n, double p, std::mt19937_64& gen) {
  std::bernoulli_distribution coin(p);
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (coin(gen)) edges.push_back({i, j});
    }
  }
  return Graph::FromEdges(n, edges);
}

inline Graph CompleteGraph(int n) {
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) edges.push_back({i, j});
  }
  return Graph::FromEdges(n, edges);
}

inline Graph CycleGraph(int n) {
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) edges.push_back({i, (i + 1) % n});
  return Graph::FromEdges(n, edges);
}

inline Graph StarGraph(int leaves) {
  std::vector<Edge> edges;
  for (int i = 1; i <= leaves; ++i) edges.push_back({0, i});
  return Graph::FromEdges(leaves + 1, edges);
}

inline Graph PathGraph(int n) {
  std::vector<Edge> edges;
  for (int i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1});
  return Graph::FromEdges(n, edges);
}

inline Graph CompleteBipartite(int left, int right) {
  std::vector<Edge> edges;
  for (int i = 0; i < left; ++i) {
    for (int j = 0; j < right; ++j) edges.push_back({i, left + j});
  }
  return Graph::FromEdges(left + right, edges);
}

// Mean and standard error of a sample.
struct MeanSe {
  double mean = 0.0;
  double se = 0.0;
};

inline MeanSe MeanAndSe(std::span<const double> x) {
  const double n = static_cast<double>(x.size());
  double mean = 0.0;
  for (const double v : x) mean += v;
  mean /= n;
  double ss = 0.0;
  for (const double v : x) ss += (v - mean) * (v - mean);
  return {mean, std::sqrt(ss / (n - 1.0) / n)};
}

}  // namespace eznet::testing

#endif  // EZNET_TESTS_SUPPORT_ORACLES_H_
