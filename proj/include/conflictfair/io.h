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

// JSON file formats and Graphviz export. Rationals travel as strings
// ("3", "-1/2"); subsets of goods in table valuations travel as decimal
// bitmask strings with bit g standing for good g.
//
//   instance:   {"agents": 2, "goods": 3, "edges": [[0,1]], "mode": "goods",
//                "valuations": {"identical": MODEL} | {"perAgent": [MODEL, ...]},
//                "intervals": [["0","2"], ...]}            (intervals optional)
//   MODEL:      {"type": "additive", "values": ["1", "1/2", ...]}
//               {"type": "uniform"}
//               {"type": "table", "entries": [["0","0"], ["1","2"], ...]}
//               {"type": "negated", "inner": MODEL}
//               {"type": "composite", "base": MODEL, "baseGoods": [..],
//                "extra": ["0", ...]}
//   allocation: {"bundles": [[0,2],[1]], "certificate": {"maximal": true, "ef1": true}}
//   graph/tree: {"vertices": 5, "edges": [[0,1], ...], "root": 0}

#ifndef CONFLICTFAIR_IO_H_
#define CONFLICTFAIR_IO_H_

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "conflictfair/graph.h"
#include "conflictfair/graph_classes.h"
#include "conflictfair/hardness.h"
#include "conflictfair/instance.h"
#include "conflictfair/treecolor.h"

namespace conflictfair {

// Malformed JSON, or JSON that does not describe a valid object.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct InstanceFile {
  Instance instance;
  std::optional<IntervalSet> intervals;
};

struct Certificate {
  bool maximal = false;
  bool ef1 = false;
};

struct AllocationFile {
  Allocation allocation;
  std::optional<Certificate> certificate;
};

struct GraphFile {
  ConflictGraph graph;
  std::optional<std::size_t> root;
};

InstanceFile parse_instance(std::string_view text);
std::string serialize_instance(const InstanceFile& file);
std::string serialize_instance(const Instance& instance);

// Bundles must lie in [0, goods).
AllocationFile parse_allocation(std::string_view text, std::size_t goods);
std::string serialize_allocation(const AllocationFile& file);

GraphFile parse_graph(std::string_view text);
std::string serialize_graph(const ConflictGraph& graph, std::optional<std::size_t> root = {});

std::string serialize_coloring(const PartialColoring& coloring);

// gamma, lambda, t, the index ranges of base goods and both gadget families,
// and the base witness allocation.
std::string serialize_reduction_spec(const ReductionSpec& spec);

// Graphviz: bundles colored red, blue, green, ...; unallocated goods gray.
std::string allocation_dot(const ConflictGraph& graph, const Allocation& allocation);
std::string coloring_dot(const RootedTree& tree, const PartialColoring& coloring);

}  // namespace conflictfair

#endif  // CONFLICTFAIR_IO_H_
