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

// Maximal equitable partial n-colorings of trees. Color classes correspond to
// agents' bundles under the uniform valuation with the tree as conflict graph.

#ifndef CONFLICTFAIR_TREECOLOR_H_
#define CONFLICTFAIR_TREECOLOR_H_

#include <cstddef>
#include <limits>
#include <vector>

#include "conflictfair/graph.h"

namespace conflictfair {

class RootedTree {
 public:
  static constexpr std::size_t kNoParent = std::numeric_limits<std::size_t>::max();

  // parent[root] must be kNoParent and every other vertex must reach the
  // root. Throws InvalidInput otherwise.
  RootedTree(std::vector<std::size_t> parent, std::size_t root);

  // Throws InvalidInput unless `edges` form a spanning tree on `vertices`.
  static RootedTree from_edges(std::size_t vertices, const std::vector<Edge>& edges,
                               std::size_t root = 0);

  std::size_t size() const { return parent_.size(); }
  std::size_t root() const { return root_; }
  std::size_t parent(std::size_t v) const { return parent_.at(v); }
  const std::vector<std::size_t>& children(std::size_t v) const { return children_.at(v); }
  std::vector<Edge> edges() const;
  ConflictGraph graph() const { return ConflictGraph(size(), edges()); }

 private:
  std::vector<std::size_t> parent_;
  std::vector<std::vector<std::size_t>> children_;
  std::size_t root_ = 0;
};

struct PartialColoring {
  std::vector<std::size_t> color;        // 1..n, 0 = uncolored
  std::vector<std::size_t> class_sizes;  // class_sizes[c-1] = |S_c|
};

struct ColoringReport {
  bool consistent = false;  // colors in 0..n and class_sizes match them
  bool independent = false;
  bool maximal = false;  // every uncolored vertex sees every class
  bool equitable = false;
  bool root_higher = false;  // root uncolored or in a largest class

  bool ok() const { return consistent && independent && maximal && equitable && root_higher; }
};

ColoringReport check_coloring(const RootedTree& tree, const PartialColoring& coloring,
                              std::size_t n);

// Post-order construction. Children are merged singular-first with a rotating
// color offset; the root stays uncolored when at least n children are
// singular and otherwise takes color n after clearing it from the child roots.
// Throws InvalidInput for n = 0.
PartialColoring equitable_tree_coloring(const RootedTree& tree, std::size_t n);

}  // namespace conflictfair

#endif  // CONFLICTFAIR_TREECOLOR_H_
