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

#include "conflictfair/graph.h"

#include <algorithm>
#include <queue>
#include <string>

#include "conflictfair/value.h"

namespace conflictfair {

ConflictGraph::ConflictGraph(std::size_t m, std::vector<Edge> edges)
    : neighbors_(m, GoodSet(m)) {
  edges_.reserve(edges.size());
  for (auto [u, v] : edges) {
    if (u >= m || v >= m) {
      throw InvalidInput("edge {" + std::to_string(u) + "," + std::to_string(v) +
                         "} has an endpoint outside [0, " + std::to_string(m) + ")");
    }
    if (u == v) throw InvalidInput("self-loop on good " + std::to_string(u));
    if (neighbors_[u].contains(v)) {
      throw InvalidInput("duplicate edge {" + std::to_string(u) + "," + std::to_string(v) + "}");
    }
    neighbors_[u].insert(v);
    neighbors_[v].insert(u);
    edges_.emplace_back(std::min(u, v), std::max(u, v));
  }
}

ConflictGraph ConflictGraph::complete_bipartite(std::size_t left, std::size_t right) {
  std::vector<Edge> edges;
  for (Good a = 0; a < left; ++a) {
    for (Good b = 0; b < right; ++b) edges.emplace_back(a, left + b);
  }
  return ConflictGraph(left + right, std::move(edges));
}

ConflictGraph ConflictGraph::path(std::size_t m) {
  std::vector<Edge> edges;
  for (Good g = 1; g < m; ++g) edges.emplace_back(g - 1, g);
  return ConflictGraph(m, std::move(edges));
}

ConflictGraph ConflictGraph::cycle(std::size_t m) {
  std::vector<Edge> edges;
  for (Good g = 1; g < m; ++g) edges.emplace_back(g - 1, g);
  if (m >= 3) edges.emplace_back(m - 1, 0);
  return ConflictGraph(m, std::move(edges));
}

std::optional<std::vector<int>> ConflictGraph::two_coloring() const {
  std::vector<int> side(m(), -1);
  for (Good start = 0; start < m(); ++start) {
    if (side[start] != -1) continue;
    side[start] = 0;
    std::queue<Good> frontier;
    frontier.push(start);
    while (!frontier.empty()) {
      const Good u = frontier.front();
      frontier.pop();
      for (Good w : neighbors_[u]) {
        if (side[w] == -1) {
          side[w] = 1 - side[u];
          frontier.push(w);
        } else if (side[w] == side[u]) {
          return std::nullopt;
        }
      }
    }
  }
  return side;
}

bool ConflictGraph::is_connected() const {
  if (m() == 0) return true;
  GoodSet seen(m());
  std::vector<Good> stack = {0};
  seen.insert(0);
  while (!stack.empty()) {
    const Good u = stack.back();
    stack.pop_back();
    for (Good w : neighbors_[u]) {
      if (!seen.contains(w)) {
        seen.insert(w);
        stack.push_back(w);
      }
    }
  }
  return seen.size() == m();
}

bool operator==(const ConflictGraph& a, const ConflictGraph& b) {
  return a.neighbors_ == b.neighbors_;
}

}  // namespace conflictfair
