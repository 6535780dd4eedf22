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

#ifndef EZNET_EDGE_LIST_H_
#define EZNET_EDGE_LIST_H_

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

#include "eznet/graph.h"

namespace eznet {

struct EdgeListOptions {
  // Ids in the file start at this value (0 or 1).
  int index_base = 0;
  // Treat '#'-prefixed lines as comments.
  bool allow_comments = true;
  // Overrides both the max-id convention and any "# nodes N" header.
  std::optional<std::int64_t> num_nodes;
};

struct ParsedEdgeList {
  Graph graph;
  std::int64_t self_loops_dropped = 0;
  std::int64_t duplicate_edges = 0;
};

// Reads a whitespace-separated two-column edge list.
//
// The node count is 1 + the largest (re-based) id unless a "# nodes N"
// header or options.num_nodes says otherwise. Self-loops are dropped and
// counted; (i, j) and (j, i) collapse to one edge. Throws ParseError with the
// offending line number on malformed or negative ids.
ParsedEdgeList ParseEdgeList(std::istream& in,
                             const EdgeListOptions& options = {});
ParsedEdgeList ParseEdgeList(const std::string& text,
                             const EdgeListOptions& options = {});
ParsedEdgeList ReadEdgeListFile(const std::string& path,
                                const EdgeListOptions& options = {});

// Writes "# nodes N" followed by one "u v" line per edge (u < v), so isolated
// high-id nodes survive a round trip.
void WriteEdgeList(const Graph& g, std::ostream& out, int index_base = 0);
std::string FormatEdgeList(const Graph& g, int index_base = 0);

}  // namespace eznet

#endif  // EZNET_EDGE_LIST_H_
