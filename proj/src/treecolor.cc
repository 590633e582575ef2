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

#include "conflictfair/treecolor.h"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

#include "conflictfair/value.h"

namespace conflictfair {

RootedTree::RootedTree(std::vector<std::size_t> parent, std::size_t root)
    : parent_(std::move(parent)), children_(parent_.size()), root_(root) {
  const std::size_t count = parent_.size();
  if (count == 0) throw InvalidInput("tree needs at least one vertex");
  if (root >= count) throw InvalidInput("root " + std::to_string(root) + " out of range");
  if (parent_[root] != kNoParent) throw InvalidInput("root must not have a parent");
  for (std::size_t v = 0; v < count; ++v) {
    if (v == root) continue;
    if (parent_[v] >= count) {
      throw InvalidInput("vertex " + std::to_string(v) + " has no valid parent");
    }
    children_[parent_[v]].push_back(v);
  }
  // Every vertex must reach the root in fewer than `count` steps.
  std::vector<int> state(count, 0);  // 0 unknown, 1 on path, 2 reaches root
  state[root] = 2;
  for (std::size_t start = 0; start < count; ++start) {
    std::vector<std::size_t> path;
    std::size_t v = start;
    while (state[v] == 0) {
      state[v] = 1;
      path.push_back(v);
      v = parent_[v];
    }
    if (state[v] == 1) throw InvalidInput("parent array contains a cycle");
    for (std::size_t u : path) state[u] = 2;
  }
}

RootedTree RootedTree::from_edges(std::size_t vertices, const std::vector<Edge>& edges,
                                  std::size_t root) {
  if (vertices == 0) throw InvalidInput("tree needs at least one vertex");
  if (edges.size() != vertices - 1) {
    throw InvalidInput("a tree on " + std::to_string(vertices) + " vertices has " +
                       std::to_string(vertices - 1) + " edges, got " +
                       std::to_string(edges.size()));
  }
  const ConflictGraph graph(vertices, edges);
  if (!graph.is_connected()) throw InvalidInput("graph is not connected");
  if (root >= vertices) throw InvalidInput("root " + std::to_string(root) + " out of range");

  std::vector<std::size_t> parent(vertices, kNoParent);
  std::vector<bool> seen(vertices, false);
  std::vector<std::size_t> stack{root};
  seen[root] = true;
  while (!stack.empty()) {
    const std::size_t v = stack.back();
    stack.pop_back();
    for (Good u : graph.neighbors(v)) {
      if (seen[u]) continue;
      seen[u] = true;
      parent[u] = v;
      stack.push_back(u);
    }
  }
  return RootedTree(std::move(parent), root);
}

std::vector<Edge> RootedTree::edges() const {
  std::vector<Edge> out;
  for (std::size_t v = 0; v < size(); ++v) {
    if (v != root_) out.emplace_back(std::min(v, parent_[v]), std::max(v, parent_[v]));
  }
  return out;
}

ColoringReport check_coloring(const RootedTree& tree, const PartialColoring& coloring,
                              std::size_t n) {
  ColoringReport report;
  const std::size_t count = tree.size();
  if (coloring.color.size() != count || coloring.class_sizes.size() != n) return report;
  std::vector<std::size_t> sizes(n, 0);
  for (std::size_t c : coloring.color) {
    if (c > n) return report;
    if (c > 0) ++sizes[c - 1];
  }
  report.consistent = sizes == coloring.class_sizes;

  report.independent = true;
  for (auto [u, v] : tree.edges()) {
    if (coloring.color[u] != 0 && coloring.color[u] == coloring.color[v]) {
      report.independent = false;
    }
  }

  report.maximal = true;
  for (std::size_t v = 0; v < count && report.maximal; ++v) {
    if (coloring.color[v] != 0) continue;
    std::vector<bool> seen(n + 1, false);
    if (v != tree.root()) seen[coloring.color[tree.parent(v)]] = true;
    for (std::size_t child : tree.children(v)) seen[coloring.color[child]] = true;
    for (std::size_t c = 1; c <= n; ++c) report.maximal = report.maximal && seen[c];
  }

  const auto [low, high] = std::minmax_element(sizes.begin(), sizes.end());
  report.equitable = n == 0 || *high - *low <= 1;
  const std::size_t root_color = coloring.color[tree.root()];
  report.root_higher = root_color == 0 || (n > 0 && sizes[root_color - 1] == *high);
  return report;
}

PartialColoring equitable_tree_coloring(const RootedTree& tree, std::size_t n) {
  if (n == 0) throw InvalidInput("need n >= 1 colors");
  const std::size_t count = tree.size();

  std::vector<std::size_t> order;
  order.reserve(count);
  std::vector<std::size_t> stack{tree.root()};
  while (!stack.empty()) {
    const std::size_t v = stack.back();
    stack.pop_back();
    order.push_back(v);
    for (std::size_t child : tree.children(v)) stack.push_back(child);
  }

  std::vector<std::size_t> color(count, 0);
  std::vector<std::vector<std::size_t>> sizes(count);
  std::vector<std::vector<std::size_t>> members(count);
  std::vector<std::size_t> higher(count, 0);
  std::vector<std::size_t> offset(count, 0);

  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    const std::size_t r = *it;
    const auto& children = tree.children(r);
    if (children.empty()) {
      color[r] = 1;
      sizes[r].assign(n, 0);
      sizes[r][0] = 1;
      members[r] = {r};
      continue;
    }

    // Relabel each child so its classes are sorted by size, descending.
    std::vector<std::size_t> singular;
    std::vector<std::size_t> plain;
    for (std::size_t child : children) {
      std::vector<std::size_t> rank(n);
      std::iota(rank.begin(), rank.end(), std::size_t{0});
      std::stable_sort(rank.begin(), rank.end(), [&](std::size_t a, std::size_t b) {
        return sizes[child][a] > sizes[child][b];
      });
      std::vector<std::size_t> relabel(n + 1, 0);
      std::vector<std::size_t> sorted(n);
      for (std::size_t j = 0; j < n; ++j) {
        relabel[rank[j] + 1] = j + 1;
        sorted[j] = sizes[child][rank[j]];
      }
      for (std::size_t v : members[child]) color[v] = relabel[color[v]];
      sizes[child] = std::move(sorted);
      higher[child] = static_cast<std::size_t>(
          std::count(sizes[child].begin(), sizes[child].end(), sizes[child][0]));
      if (higher[child] == 1 && color[child] == 1) {
        singular.push_back(child);
      } else {
        plain.push_back(child);
      }
    }

    // Merge with the rotating offset x.
    std::vector<std::size_t> merged(n, 0);
    std::size_t x = 0;
    std::vector<std::size_t> sequence = singular;
    sequence.insert(sequence.end(), plain.begin(), plain.end());
    for (std::size_t child : sequence) {
      for (std::size_t v : members[child]) {
        if (color[v] != 0) color[v] = (color[v] - 1 + x) % n + 1;
      }
      for (std::size_t j = 0; j < n; ++j) merged[(j + x) % n] += sizes[child][j];
      offset[child] = x;
      x = (x + higher[child]) % n;
    }

    if (singular.size() < n) {
      for (std::size_t child : plain) {
        if (color[child] != n) continue;
        // The child's higher classes now sit at colors offset+1 .. offset+h.
        std::size_t swap_with = 0;
        for (std::size_t j = 0; j < higher[child]; ++j) {
          const std::size_t c = (offset[child] + j) % n + 1;
          if (c != n && (swap_with == 0 || c < swap_with)) swap_with = c;
        }
        if (swap_with == 0) throw std::logic_error("no second higher color in child subtree");
        for (std::size_t v : members[child]) {
          if (color[v] == n) {
            color[v] = swap_with;
          } else if (color[v] == swap_with) {
            color[v] = n;
          }
        }
      }
      color[r] = n;
      ++merged[n - 1];
    }

    sizes[r] = std::move(merged);
    members[r] = {r};
    for (std::size_t child : children) {
      members[r].insert(members[r].end(), members[child].begin(), members[child].end());
      members[child].clear();
      members[child].shrink_to_fit();
      sizes[child].clear();
    }
  }

  PartialColoring out{std::move(color), std::move(sizes[tree.root()])};
  return out;
}

}  // namespace conflictfair
