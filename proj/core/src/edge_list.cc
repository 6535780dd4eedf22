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

#include "eznet/edge_list.h"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <limits>
#include <sstream>
#include <string_view>
#include <vector>

#include "eznet/error.h"

namespace eznet {
namespace {

std::string_view Trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::vector<std::string_view> SplitWhitespace(std::string_view s) {
  std::vector<std::string_view> tokens;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t' || s[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < s.size() && s[j] != ' ' && s[j] != '\t' && s[j] != '\r') ++j;
    if (j > i) tokens.push_back(s.substr(i, j - i));
    i = j;
  }
  return tokens;
}

bool ParseInt(std::string_view token, std::int64_t& out) {
  const char* first = token.data();
  const char* last = token.data() + token.size();
  if (first != last && *first == '+') ++first;
  const auto [ptr, ec] = std::from_chars(first, last, out);
  return ec == std::errc() && ptr == last;
}

// "# nodes N" (also "# nodes: N").
bool ParseNodesHeader(std::string_view comment, std::int64_t& out) {
  auto tokens = SplitWhitespace(comment);
  if (tokens.size() != 2) return false;
  std::string_view key = tokens[0];
  if (!key.empty() && key.back() == ':') key.remove_suffix(1);
  return key == "nodes" && ParseInt(tokens[1], out) && out >= 0;
}

}  // namespace

ParsedEdgeList ParseEdgeList(std::istream& in, const EdgeListOptions& options) {
  if (options.index_base != 0 && options.index_base != 1) {
    throw DomainError("index base must be 0 or 1");
  }
  std::vector<Edge> edges;
  std::int64_t self_loops = 0;
  std::int64_t max_id = -1;
  std::int64_t header_nodes = -1;
  std::string line;
  std::int64_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::string_view body = Trim(line);
    if (body.empty()) continue;
    if (body.front() == '#') {
      if (!options.allow_comments) {
        throw ParseError(line_no, "comment lines are disabled");
      }
      std::int64_t declared = 0;
      if (ParseNodesHeader(body.substr(1), declared)) header_nodes = declared;
      continue;
    }
    const auto tokens = SplitWhitespace(body);
    if (tokens.size() != 2) {
      throw ParseError(line_no, "expected two node ids, got " +
                                    std::to_string(tokens.size()) + " tokens");
    }
    std::int64_t ids[2];
    for (int t = 0; t < 2; ++t) {
      if (!ParseInt(tokens[static_cast<std::size_t>(t)], ids[t])) {
        throw ParseError(line_no, "malformed node id '" +
                                      std::string(tokens[static_cast<std::size_t>(t)]) + "'");
      }
      ids[t] -= options.index_base;
      if (ids[t] < 0) {
        throw ParseError(line_no, "negative node id after re-basing");
      }
      if (ids[t] >= std::numeric_limits<NodeId>::max()) {
        throw ParseError(line_no, "node id too large");
      }
    }
    if (ids[0] == ids[1]) {
      ++self_loops;
      max_id = std::max(max_id, ids[0]);
      continue;
    }
    max_id = std::max({max_id, ids[0], ids[1]});
    edges.push_back({static_cast<NodeId>(std::min(ids[0], ids[1])),
                     static_cast<NodeId>(std::max(ids[0], ids[1]))});
  }

  std::int64_t n = max_id + 1;
  if (options.num_nodes) {
    n = *options.num_nodes;
  } else if (header_nodes >= 0) {
    n = header_nodes;
  }
  if (n < max_id + 1) {
    throw ParseError(0, "declared node count " + std::to_string(n) +
                            " is smaller than the largest id " +
                            std::to_string(max_id));
  }

  const auto raw_count = static_cast<std::int64_t>(edges.size());
  ParsedEdgeList result;
  result.graph = Graph::FromEdges(n, edges);
  result.self_loops_dropped = self_loops;
  result.duplicate_edges = raw_count - result.graph.num_edges();
  return result;
}

ParsedEdgeList ParseEdgeList(const std::string& text,
                             const EdgeListOptions& options) {
  std::istringstream in(text);
  return ParseEdgeList(in, options);
}

ParsedEdgeList ReadEdgeListFile(const std::string& path,
                                const EdgeListOptions& options) {
  std::ifstream in(path);
  if (!in) throw ParseError(0, "cannot open '" + path + "'");
  return ParseEdgeList(in, options);
}

void WriteEdgeList(const Graph& g, std::ostream& out, int index_base) {
  out << "# nodes " << g.num_nodes() << '\n';
  for (const Edge& e : g.edges()) {
    out << (e.u + index_base) << ' ' << (e.v + index_base) << '\n';
  }
}

std::string FormatEdgeList(const Graph& g, int index_base) {
  std::ostringstream out;
  WriteEdgeList(g, out, index_base);
  return out.str();
}

}  // namespace eznet
