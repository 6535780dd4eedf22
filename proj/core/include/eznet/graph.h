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

#ifndef EZNET_GRAPH_H_
#define EZNET_GRAPH_H_

#include <compare>
#include <cstdint>
#include <span>
#include <vector>

namespace eznet {

// Node index, valid only relative to the node count of one Graph.
using NodeId = std::int32_t;

// Unordered pair stored with u < v.
struct Edge {
  NodeId u = 0;
  NodeId v = 0;

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

// Immutable undirected simple graph on nodes 0..n-1.
//
// Edges are kept both as a sorted list of (u < v) pairs and as a CSR
// adjacency with sorted neighbor lists, which the triangle counter and the
// neighborhood extraction rely on.
class Graph {
 public:
  Graph() = default;
  explicit Graph(std::int64_t num_nodes);

  // Builds a graph from arbitrary pairs. (u, v) and (v, u) collapse to one
  // edge and duplicates are ignored. Self-loops and out-of-range ids throw
  // DomainError; callers that want to tolerate self-loops filter them first.
  static Graph FromEdges(std::int64_t num_nodes, std::span<const Edge> edges);

  // Fast path for generators: edges must already be strictly increasing
  // with u < v < num_nodes. Checked only in debug builds.
  static Graph FromSortedUniqueEdges(std::int64_t num_nodes,
                                     std::vector<Edge> edges);

  std::int64_t num_nodes() const { return num_nodes_; }
  std::int64_t num_edges() const {
    return static_cast<std::int64_t>(edges_.size());
  }

  std::span<const Edge> edges() const { return edges_; }
  std::span<const NodeId> neighbors(NodeId v) const;
  std::int64_t degree(NodeId v) const;
  bool has_edge(NodeId u, NodeId v) const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.num_nodes_ == b.num_nodes_ && a.edges_ == b.edges_;
  }

 private:
  void BuildAdjacency();

  std::int64_t num_nodes_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::int64_t> offsets_{0};
  std::vector<NodeId> adjacency_;
};

// Induced subgraph on the neighbors of `ego` (the ego itself excluded),
// relabeled 0..m-1 in ascending original-id order. Throws DomainError when
// ego is out of range.
Graph NeighborhoodSubgraph(const Graph& g, NodeId ego);

// Sorted original ids of the neighbors of `ego`; position i is the node
// relabeled i by NeighborhoodSubgraph.
std::vector<NodeId> NeighborhoodMembers(const Graph& g, NodeId ego);

}  // namespace eznet

#endif  // EZNET_GRAPH_H_
