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

#include "eznet/graph.h"

#include <algorithm>
#include <cassert>
#include <limits>
#include <string>

#include "eznet/error.h"

namespace eznet {

Graph::Graph(std::int64_t num_nodes) : num_nodes_(num_nodes) {
  if (num_nodes < 0 || num_nodes > std::numeric_limits<NodeId>::max()) {
    throw DomainError("node count out of range: " + std::to_string(num_nodes));
  }
  BuildAdjacency();
}

Graph Graph::FromEdges(std::int64_t num_nodes, std::span<const Edge> edges) {
  Graph g(num_nodes);
  g.edges_.reserve(edges.size());
  for (const Edge& e : edges) {
    if (e.u < 0 || e.v < 0 || e.u >= num_nodes || e.v >= num_nodes) {
      throw DomainError("edge (" + std::to_string(e.u) + ", " +
                        std::to_string(e.v) + ") outside node range [0, " +
                        std::to_string(num_nodes) + ")");
    }
    if (e.u == e.v) {
      throw DomainError("self-loop on node " + std::to_string(e.u));
    }
    g.edges_.push_back(e.u < e.v ? e : Edge{e.v, e.u});
  }
  std::sort(g.edges_.begin(), g.edges_.end());
  g.edges_.erase(std::unique(g.edges_.begin(), g.edges_.end()),
                 g.edges_.end());
  g.BuildAdjacency();
  return g;
}

Graph Graph::FromSortedUniqueEdges(std::int64_t num_nodes,
                                   std::vector<Edge> edges) {
  Graph g(num_nodes);
#ifndef NDEBUG
  for (std::size_t i = 0; i < edges.size(); ++i) {
    assert(edges[i].u < edges[i].v && edges[i].v < num_nodes);
    assert(i == 0 || edges[i - 1] < edges[i]);
  }
#endif
  g.edges_ = std::move(edges);
  g.BuildAdjacency();
  return g;
}

void Graph::BuildAdjacency() {
  offsets_.assign(static_cast<std::size_t>(num_nodes_) + 1, 0);
  for (const Edge& e : edges_) {
    ++offsets_[static_cast<std::size_t>(e.u) + 1];
    ++offsets_[static_cast<std::size_t>(e.v) + 1];
  }
  for (std::size_t i = 1; i < offsets_.size(); ++i) {
    offsets_[i] += offsets_[i - 1];
  }
  adjacency_.assign(static_cast<std::size_t>(offsets_.back()), 0);
  std::vector<std::int64_t> cursor(offsets_.begin(), offsets_.end() - 1);
  // Edges are sorted by (u, v), so filling in edge order leaves every
  // neighbor list sorted: node x first receives its smaller neighbors (as
  // the v of (w, x), w ascending) and then its larger ones (as u).
  for (const Edge& e : edges_) {
    adjacency_[static_cast<std::size_t>(cursor[static_cast<std::size_t>(e.v)]++)] = e.u;
  }
  for (const Edge& e : edges_) {
    adjacency_[static_cast<std::size_t>(cursor[static_cast<std::size_t>(e.u)]++)] = e.v;
  }
}

std::span<const NodeId> Graph::neighbors(NodeId v) const {
  const auto begin = offsets_[static_cast<std::size_t>(v)];
  const auto end = offsets_[static_cast<std::size_t>(v) + 1];
  return {adjacency_.data() + begin, static_cast<std::size_t>(end - begin)};
}

std::int64_t Graph::degree(NodeId v) const {
  return offsets_[static_cast<std::size_t>(v) + 1] -
         offsets_[static_cast<std::size_t>(v)];
}

bool Graph::has_edge(NodeId u, NodeId v) const {
  if (u < 0 || v < 0 || u >= num_nodes_ || v >= num_nodes_) return false;
  const auto nbrs = neighbors(u);
  return std::binary_search(nbrs.begin(), nbrs.end(), v);
}

std::vector<NodeId> NeighborhoodMembers(const Graph& g, NodeId ego) {
  if (ego < 0 || ego >= g.num_nodes()) {
    throw DomainError("ego " + std::to_string(ego) + " outside node range [0, " +
                      std::to_string(g.num_nodes()) + ")");
  }
  const auto nbrs = g.neighbors(ego);
  return {nbrs.begin(), nbrs.end()};
}

Graph NeighborhoodSubgraph(const Graph& g, NodeId ego) {
  const std::vector<NodeId> members = NeighborhoodMembers(g, ego);
  const auto local_id = [&](NodeId original) {
    return static_cast<NodeId>(
        std::lower_bound(members.begin(), members.end(), original) -
        members.begin());
  };

  std::vector<Edge> edges;
  for (std::size_t i = 0; i < members.size(); ++i) {
    // Merge the (sorted) neighbor list of members[i] against the members
    // larger than it.
    const auto nbrs = g.neighbors(members[i]);
    auto it = std::upper_bound(nbrs.begin(), nbrs.end(), members[i]);
    auto jt = members.begin() + static_cast<std::ptrdiff_t>(i) + 1;
    while (it != nbrs.end() && jt != members.end()) {
      if (*it < *jt) {
        ++it;
      } else if (*jt < *it) {
        ++jt;
      } else {
        edges.push_back({static_cast<NodeId>(i), local_id(*jt)});
        ++it;
        ++jt;
      }
    }
  }
  return Graph::FromSortedUniqueEdges(static_cast<std::int64_t>(members.size()),
                                      std::move(edges));
}

}  // namespace eznet
