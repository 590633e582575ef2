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

#include "testing.h"

#include <algorithm>
#include <bit>
#include <numeric>

namespace conflictfair {

std::ostream& operator<<(std::ostream& os, const GoodSet& set) { return os << set.to_string(); }

std::ostream& operator<<(std::ostream& os, const Allocation& allocation) {
  return os << allocation.to_string();
}

std::ostream& operator<<(std::ostream& os, const ConflictGraph& graph) {
  os << "graph(m=" << graph.m() << ", edges=[";
  for (std::size_t k = 0; k < graph.edges().size(); ++k) {
    os << (k ? "," : "") << graph.edges()[k].first << "-" << graph.edges()[k].second;
  }
  return os << "])";
}

std::ostream& operator<<(std::ostream& os, const ValuationModel& model) {
  return os << "model(m=" << model.m() << ", kind=" << model.kind().index() << ")";
}

std::ostream& operator<<(std::ostream& os, const Instance& instance) {
  return os << "instance(n=" << instance.agents() << ", " << instance.graph() << ")";
}

}  // namespace conflictfair

namespace conflictfair::testing {
namespace {

bool coin(double p, Rng& rng) { return std::bernoulli_distribution(p)(rng); }

Mask bit(std::size_t g) { return Mask{1} << g; }

}  // namespace

ConflictGraph random_graph(std::size_t m, double p, Rng& rng) {
  std::vector<Edge> edges;
  for (Good u = 0; u < m; ++u) {
    for (Good v = u + 1; v < m; ++v) {
      if (coin(p, rng)) edges.emplace_back(u, v);
    }
  }
  return ConflictGraph(m, std::move(edges));
}

ConflictGraph random_connected_graph(std::size_t m, double p, Rng& rng) {
  std::vector<Edge> edges;
  for (auto [u, v] : random_tree_edges(m, rng)) edges.emplace_back(std::min(u, v), std::max(u, v));
  for (Good u = 0; u < m; ++u) {
    for (Good v = u + 1; v < m; ++v) {
      if (std::find(edges.begin(), edges.end(), Edge{u, v}) == edges.end() && coin(p, rng)) {
        edges.emplace_back(u, v);
      }
    }
  }
  return ConflictGraph(m, std::move(edges));
}

ConflictGraph random_bipartite_graph(std::size_t left, std::size_t right, double p, Rng& rng) {
  // Shuffle labels so the sides are not index ranges.
  const std::size_t m = left + right;
  std::vector<Good> label(m);
  std::iota(label.begin(), label.end(), Good{0});
  std::shuffle(label.begin(), label.end(), rng);
  std::vector<Edge> edges;
  for (std::size_t a = 0; a < left; ++a) {
    for (std::size_t b = left; b < m; ++b) {
      if (coin(p, rng)) edges.emplace_back(label[a], label[b]);
    }
  }
  return ConflictGraph(m, std::move(edges));
}

std::size_t pair_count(std::size_t m) { return m * (m - 1) / 2; }

ConflictGraph graph_from_code(std::size_t m, Mask code) {
  std::vector<Edge> edges;
  std::size_t k = 0;
  for (Good u = 0; u < m; ++u) {
    for (Good v = u + 1; v < m; ++v, ++k) {
      if (code & bit(k)) edges.emplace_back(u, v);
    }
  }
  return ConflictGraph(m, std::move(edges));
}

std::vector<Edge> pruefer_tree_edges(std::size_t vertices, const std::vector<std::size_t>& code) {
  std::vector<Edge> edges;
  if (vertices < 2) return edges;
  std::vector<std::size_t> degree(vertices, 1);
  for (std::size_t c : code) ++degree[c];
  for (std::size_t c : code) {
    for (std::size_t leaf = 0; leaf < vertices; ++leaf) {
      if (degree[leaf] == 1) {
        edges.emplace_back(std::min(leaf, c), std::max(leaf, c));
        --degree[leaf];
        --degree[c];
        break;
      }
    }
  }
  std::vector<std::size_t> rest;
  for (std::size_t v = 0; v < vertices; ++v) {
    if (degree[v] == 1) rest.push_back(v);
  }
  edges.emplace_back(rest[0], rest[1]);
  return edges;
}

std::vector<Edge> random_tree_edges(std::size_t vertices, Rng& rng) {
  if (vertices < 2) return {};
  std::uniform_int_distribution<std::size_t> pick(0, vertices - 1);
  std::vector<std::size_t> code(vertices - 2);
  for (auto& c : code) c = pick(rng);
  return pruefer_tree_edges(vertices, code);
}

std::vector<Value> random_additive_values(std::size_t m, int lo, int hi, Rng& rng) {
  std::uniform_int_distribution<int> pick(lo, hi);
  std::vector<Value> values(m);
  for (auto& v : values) v = pick(rng);
  return values;
}

std::vector<Value> random_monotone_table(std::size_t m, int max_step, Rng& rng) {
  std::uniform_int_distribution<int> step(0, max_step);
  std::vector<Value> entries(std::size_t{1} << m, Value(0));
  for (Mask s = 1; s < entries.size(); ++s) {
    Value floor = 0;
    for (std::size_t g = 0; g < m; ++g) {
      if (s & bit(g)) floor = std::max(floor, entries[s & ~bit(g)]);
    }
    entries[s] = floor + step(rng);
  }
  return entries;
}

std::vector<Interval> random_intervals(std::size_t m, int span, Rng& rng) {
  std::uniform_int_distribution<int> start(0, span - 1);
  std::uniform_int_distribution<int> length(1, std::max(1, span / 3));
  std::vector<Interval> out;
  for (std::size_t g = 0; g < m; ++g) {
    const int l = start(rng);
    out.push_back(Interval{Value(l), Value(l + length(rng))});
  }
  return out;
}

RawValuation raw_additive(std::vector<Value> values) {
  return [values = std::move(values)](Mask s) {
    Value total = 0;
    for (std::size_t g = 0; g < values.size(); ++g) {
      if (s & bit(g)) total += values[g];
    }
    return total;
  };
}

RawValuation raw_table(std::vector<Value> entries) {
  return [entries = std::move(entries)](Mask s) { return entries.at(s); };
}

RawValuation raw_uniform() {
  return [](Mask s) { return Value(static_cast<long>(std::popcount(s))); };
}

RawValuation raw_negated(RawValuation inner) {
  return [inner = std::move(inner)](Mask s) { return Value(-inner(s)); };
}

std::vector<Mask> adjacency_masks(const ConflictGraph& graph) {
  std::vector<Mask> out(graph.m(), 0);
  for (auto [u, v] : graph.edges()) {
    out[u] |= bit(v);
    out[v] |= bit(u);
  }
  return out;
}

std::vector<Mask> to_masks(const Allocation& allocation) {
  std::vector<Mask> out;
  for (const auto& bundle : allocation.bundles) {
    Mask s = 0;
    for (Good g : bundle) s |= bit(g);
    out.push_back(s);
  }
  return out;
}

bool ref_independent(const std::vector<Mask>& adjacency, Mask set) {
  for (std::size_t g = 0; g < adjacency.size(); ++g) {
    if ((set & bit(g)) && (adjacency[g] & set)) return false;
  }
  return true;
}

bool ref_maximal(const std::vector<Mask>& adjacency, std::size_t m,
                 const std::vector<Mask>& bundles) {
  Mask allocated = 0;
  for (Mask b : bundles) allocated |= b;
  for (std::size_t g = 0; g < m; ++g) {
    if (allocated & bit(g)) continue;
    for (Mask b : bundles) {
      if ((adjacency[g] & b) == 0) return false;
    }
  }
  return true;
}

bool ref_ef1_goods(const std::vector<RawValuation>& valuations, const std::vector<Mask>& bundles) {
  for (std::size_t i = 0; i < bundles.size(); ++i) {
    const Value own = valuations[i](bundles[i]);
    for (std::size_t j = 0; j < bundles.size(); ++j) {
      if (i == j || bundles[j] == 0) continue;
      bool ok = false;
      for (Mask rest = bundles[j]; rest != 0 && !ok; rest &= rest - 1) {
        const Mask g = rest & (~rest + 1);
        ok = own >= valuations[i](bundles[j] & ~g);
      }
      if (!ok) return false;
    }
  }
  return true;
}

bool ref_ef1_chores(const std::vector<RawValuation>& valuations, const std::vector<Mask>& bundles) {
  for (std::size_t i = 0; i < bundles.size(); ++i) {
    if (bundles[i] == 0) continue;
    for (std::size_t j = 0; j < bundles.size(); ++j) {
      if (i == j) continue;
      const Value other = valuations[i](bundles[j]);
      bool ok = false;
      for (Mask rest = bundles[i]; rest != 0 && !ok; rest &= rest - 1) {
        const Mask c = rest & (~rest + 1);
        ok = valuations[i](bundles[i] & ~c) >= other;
      }
      if (!ok) return false;
    }
  }
  return true;
}

namespace {

void backtrack(const std::vector<Mask>& adjacency, std::size_t m, std::size_t g,
               std::vector<Mask>& bundles, std::vector<std::vector<Mask>>& out) {
  if (g == m) {
    if (ref_maximal(adjacency, m, bundles)) out.push_back(bundles);
    return;
  }
  backtrack(adjacency, m, g + 1, bundles, out);
  for (std::size_t a = 0; a < bundles.size(); ++a) {
    if (adjacency[g] & bundles[a]) continue;
    bundles[a] |= bit(g);
    backtrack(adjacency, m, g + 1, bundles, out);
    bundles[a] &= ~bit(g);
  }
}

}  // namespace

std::vector<std::vector<Mask>> ref_maximal_allocations(const std::vector<Mask>& adjacency,
                                                       std::size_t m, std::size_t agents) {
  std::vector<std::vector<Mask>> out;
  std::vector<Mask> bundles(agents, 0);
  backtrack(adjacency, m, 0, bundles, out);
  return out;
}

bool ref_schedule_feasible(const std::vector<Interval>& intervals, Mask chosen,
                           std::size_t capacity) {
  for (std::size_t a = 0; a < intervals.size(); ++a) {
    if (!(chosen & bit(a))) continue;
    const Value& x = intervals[a].left;
    std::size_t cover = 0;
    for (std::size_t b = 0; b < intervals.size(); ++b) {
      if ((chosen & bit(b)) && intervals[b].left <= x && x < intervals[b].right) ++cover;
    }
    if (cover > capacity) return false;
  }
  return true;
}

std::size_t ref_max_schedule(const std::vector<Interval>& intervals, Mask subset,
                             std::size_t capacity) {
  std::size_t best = 0;
  for (Mask s = subset;; s = (s - 1) & subset) {
    const auto size = static_cast<std::size_t>(std::popcount(s));
    if (size > best && ref_schedule_feasible(intervals, s, capacity)) best = size;
    if (s == 0) break;
  }
  return best;
}

bool ref_valid_coloring(const std::vector<Edge>& edges, std::size_t vertices, std::size_t root,
                        const std::vector<std::size_t>& color, std::size_t n) {
  if (color.size() != vertices || n == 0) return false;
  std::vector<std::size_t> sizes(n + 1, 0);
  for (std::size_t c : color) {
    if (c > n) return false;
    ++sizes[c];
  }
  // seen[v] bit c: some neighbor of v has color c.
  std::vector<Mask> seen(vertices, 0);
  for (auto [u, v] : edges) {
    if (color[u] != 0 && color[u] == color[v]) return false;
    seen[u] |= bit(color[v]);
    seen[v] |= bit(color[u]);
  }
  const Mask all_colors = ((bit(n) - 1) << 1);
  for (std::size_t v = 0; v < vertices; ++v) {
    if (color[v] == 0 && (seen[v] & all_colors) != all_colors) return false;
  }
  const auto [lo, hi] = std::minmax_element(sizes.begin() + 1, sizes.end());
  if (*hi - *lo > 1) return false;
  return color[root] == 0 || sizes[color[root]] == *hi;
}

}  // namespace conflictfair::testing
