// Copyright 2026 The conflictfair Authors
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

#ifndef CONFLICTFAIR_GRAPH_H_
#define CONFLICTFAIR_GRAPH_H_

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "conflictfair/good_set.h"

namespace conflictfair {

using Edge = std::pair<Good, Good>;

// Undirected simple graph over the goods; an edge is a conflict.
class ConflictGraph {
 public:
  ConflictGraph() = default;
  // Throws InvalidInput on self-loops, duplicate edges or out-of-range
  // endpoints. Edges are stored normalized (u < v) in input order.
  ConflictGraph(std::size_t m, std::vector<Edge> edges);

  static ConflictGraph empty(std::size_t m) { return ConflictGraph(m, {}); }
  static ConflictGraph complete_bipartite(std::size_t left, std::size_t right);
  static ConflictGraph path(std::size_t m);
  static ConflictGraph cycle(std::size_t m);

  std::size_t m() const { return neighbors_.size(); }
  const std::vector<Edge>& edges() const { return edges_; }
  const GoodSet& neighbors(Good g) const { return neighbors_.at(g); }
  bool adjacent(Good u, Good v) const { return neighbors_.at(u).contains(v); }
  std::size_t degree(Good g) const { return neighbors_.at(g).size(); }

  // BFS 2-coloring; each component's lowest-index vertex gets side 0.
  std::optional<std::vector<int>> two_coloring() const;
  bool is_connected() const;

  friend bool operator==(const ConflictGraph& a, const ConflictGraph& b);

 private:
  std::vector<Edge> edges_;
  std::vector<GoodSet> neighbors_;
};

}  // namespace conflictfair

#endif  // CONFLICTFAIR_GRAPH_H_
