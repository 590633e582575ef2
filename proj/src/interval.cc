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

#include <algorithm>
#include <stdexcept>
#include <string>
#include <tuple>

#include "conflictfair/checks.h"
#include "conflictfair/graph_classes.h"

namespace conflictfair {
namespace {

std::vector<Good> sorted_by(const GoodSet& goods, const std::vector<std::size_t>& key,
                            bool descending) {
  std::vector<Good> out = goods.to_vector();
  std::sort(out.begin(), out.end(), [&](Good a, Good b) {
    return descending ? key[a] > key[b] : key[a] < key[b];
  });
  return out;
}

}  // namespace

IntervalSet::IntervalSet(std::vector<Interval> intervals) : intervals_(std::move(intervals)) {
  const std::size_t m = intervals_.size();
  // (value, kind, good) with kind 0 = right endpoint, 1 = left endpoint.
  std::vector<std::tuple<const Value*, int, Good>> endpoints;
  endpoints.reserve(2 * m);
  for (Good g = 0; g < m; ++g) {
    if (!(intervals_[g].left < intervals_[g].right)) {
      throw InvalidInput("interval of good " + std::to_string(g) + " is empty: [" +
                         format_value(intervals_[g].left) + ", " +
                         format_value(intervals_[g].right) + ")");
    }
    endpoints.emplace_back(&intervals_[g].right, 0, g);
    endpoints.emplace_back(&intervals_[g].left, 1, g);
  }
  std::sort(endpoints.begin(), endpoints.end(), [](const auto& a, const auto& b) {
    if (*std::get<0>(a) != *std::get<0>(b)) return *std::get<0>(a) < *std::get<0>(b);
    if (std::get<1>(a) != std::get<1>(b)) return std::get<1>(a) < std::get<1>(b);
    return std::get<2>(a) < std::get<2>(b);
  });
  left_rank_.assign(m, 0);
  right_rank_.assign(m, 0);
  for (std::size_t rank = 0; rank < endpoints.size(); ++rank) {
    const auto& [value, kind, g] = endpoints[rank];
    (kind == 0 ? right_rank_ : left_rank_)[g] = rank;
  }
}

bool IntervalSet::overlap(Good a, Good b) const {
  return left_rank_.at(a) < right_rank_.at(b) && left_rank_.at(b) < right_rank_.at(a);
}

ConflictGraph IntervalSet::overlap_graph() const {
  std::vector<Edge> edges;
  for (Good a = 0; a < size(); ++a) {
    for (Good b = a + 1; b < size(); ++b) {
      if (overlap(a, b)) edges.emplace_back(a, b);
    }
  }
  return ConflictGraph(size(), std::move(edges));
}

std::size_t max_point_coverage(const IntervalSet& intervals, const GoodSet& goods) {
  // Coverage only rises at left endpoints.
  std::size_t best = 0;
  for (Good point_owner : goods) {
    const std::size_t point = intervals.left_rank(point_owner);
    std::size_t count = 0;
    for (Good g : goods) {
      if (intervals.left_rank(g) <= point && point < intervals.right_rank(g)) ++count;
    }
    best = std::max(best, count);
  }
  return best;
}

SchedulingSolution interval_scheduling_greedy(const IntervalSet& intervals, const GoodSet& subset,
                                              std::size_t capacity, ScanDirection direction) {
  if (capacity == 0) throw InvalidInput("interval scheduling capacity must be >= 1");
  if (subset.universe() != intervals.size()) {
    throw InvalidInput("subset universe does not match the interval count");
  }
  const bool forward = direction == ScanDirection::kForward;
  std::vector<Good> order = subset.to_vector();
  std::sort(order.begin(), order.end(), [&](Good a, Good b) {
    return forward ? intervals.right_rank(a) < intervals.right_rank(b)
                   : intervals.left_rank(a) > intervals.left_rank(b);
  });

  std::vector<Good> chosen;
  for (Good candidate : order) {
    const std::size_t lo = intervals.left_rank(candidate);
    const std::size_t hi = intervals.right_rank(candidate);
    // Points where coverage inside [lo, hi) can peak: where an interval starts.
    auto coverage_at = [&](std::size_t point) {
      std::size_t count = 0;
      for (Good g : chosen) {
        if (intervals.left_rank(g) <= point && point < intervals.right_rank(g)) ++count;
      }
      return count;
    };
    std::size_t peak = coverage_at(lo);
    for (Good g : chosen) {
      const std::size_t start = intervals.left_rank(g);
      if (lo < start && start < hi) peak = std::max(peak, coverage_at(start));
    }
    if (peak + 1 <= capacity) chosen.push_back(candidate);
  }
  std::sort(chosen.begin(), chosen.end(), [&](Good a, Good b) {
    return intervals.right_rank(a) < intervals.right_rank(b);
  });
  return {std::move(chosen), capacity};
}

IntervalOutcome interval_ef1(const Instance& instance, const IntervalSet& intervals) {
  if (instance.agents() != 2 || !instance.identical() || instance.mode() != Mode::kGoods) {
    throw InvalidInput("interval solver needs two agents with one goods-mode valuation");
  }
  const ConflictGraph& graph = instance.graph();
  const std::size_t m = graph.m();
  if (intervals.size() != m || !(intervals.overlap_graph() == graph)) {
    throw InvalidInput("intervals do not induce the instance conflict graph");
  }
  const ValuationModel& v = instance.valuation(0);

  std::vector<std::size_t> left_key(m);
  std::vector<std::size_t> right_key(m);
  for (Good g = 0; g < m; ++g) {
    left_key[g] = intervals.left_rank(g);
    right_key[g] = intervals.right_rank(g);
  }

  // Optimal 2-capacity schedule, split into two independent sets by first-fit
  // in left-endpoint order. Splitting by alternate positions is not enough:
  // [0,10), [11,12), [5,13) puts two overlapping intervals on one side.
  const SchedulingSolution two_layer =
      interval_scheduling_greedy(intervals, GoodSet::full(m), 2, ScanDirection::kForward);
  GoodSet heavy(m);
  GoodSet light(m);
  {
    std::optional<Good> last_heavy;
    std::optional<Good> last_light;
    for (Good z : sorted_by(GoodSet(m, two_layer.chosen), left_key, false)) {
      if (!last_heavy || right_key[*last_heavy] < left_key[z]) {
        heavy.insert(z);
        last_heavy = z;
      } else if (!last_light || right_key[*last_light] < left_key[z]) {
        light.insert(z);
        last_light = z;
      } else {
        throw std::logic_error("2-capacity schedule is not 2-colorable");
      }
    }
  }
  if (v.evaluate(heavy) < v.evaluate(light)) std::swap(heavy, light);
  for (Good z : sorted_by(light, right_key, false)) {
    if (!graph.neighbors(z).intersects(heavy)) {
      heavy.insert(z);
      light.erase(z);
    }
  }

  const GoodSet rest = heavy.complement();
  const GoodSet forward_side(
      m, interval_scheduling_greedy(intervals, rest, 1, ScanDirection::kForward).chosen);
  const GoodSet reverse_side(
      m, interval_scheduling_greedy(intervals, rest, 1, ScanDirection::kReverse).chosen);

  // Core chain: with S in endpoint order, scanning by (q_t, right) is scanning
  // by right endpoint and (p_t, left) descending is the reverse scan, so the
  // chain's side sets are exactly the two greedy schedules.
  const std::vector<Good> source = sorted_by(heavy, right_key, false);
  const Chain core = build_chain(graph, source, ChainTieBreak{right_key, left_key});
  if (!(core.x1 == forward_side) || !(core.x2 == reverse_side)) {
    throw std::logic_error("core chain side sets differ from the greedy schedules");
  }

  const std::size_t k = light.size();
  if (forward_side.size() != k || reverse_side.size() != k) {
    throw std::logic_error("light side is not an optimal 1-capacity schedule");
  }

  IntervalOutcome out;
  out.heavy = heavy;
  out.light = light;
  out.forward_side = forward_side;
  out.reverse_side = reverse_side;

  // Prefix chain (heavy, light) -> (heavy, reverse_side): splice the reverse
  // greedy in from the right.
  const std::vector<Good> light_desc = sorted_by(light, left_key, true);
  const std::vector<Good> reverse_desc = sorted_by(reverse_side, left_key, true);
  for (std::size_t j = 0; j <= k; ++j) {
    Allocation step(2, m);
    step.bundles[0] = heavy;
    for (std::size_t i = 0; i < k; ++i) step.bundles[1].insert(i < j ? reverse_desc[i] : light_desc[i]);
    out.chain.push_back(std::move(step));
  }
  out.prefix_length = out.chain.size();
  if (!(out.chain.back() == core.steps.front())) {
    throw std::logic_error("prefix chain does not meet the core chain");
  }
  out.chain.insert(out.chain.end(), core.steps.begin() + 1, core.steps.end());
  out.core_length = core.steps.size() - 1;

  // Suffix chain (forward_side, heavy) -> (light, heavy): unsplice the forward
  // greedy prefix.
  const std::vector<Good> light_asc = sorted_by(light, right_key, false);
  const std::vector<Good> forward_asc = sorted_by(forward_side, right_key, false);
  for (std::size_t j = k; j-- > 0;) {
    Allocation step(2, m);
    step.bundles[1] = heavy;
    for (std::size_t i = 0; i < k; ++i) step.bundles[0].insert(i < j ? forward_asc[i] : light_asc[i]);
    out.chain.push_back(std::move(step));
  }

  const auto step = first_ef1_step(v, out.chain);
  if (!step) throw std::logic_error("interval chain produced no EF1 step");
  out.step = *step;
  out.allocation = out.chain[*step];
  return out;
}

}  // namespace conflictfair
