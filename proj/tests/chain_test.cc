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

#define BOOST_TEST_MODULE chain
#include <boost/test/unit_test.hpp>

#include "conflictfair/chain.h"
#include "conflictfair/checks.h"
#include "testing.h"

namespace cf = conflictfair;
namespace ct = conflictfair::testing;
using cf::Allocation;
using cf::ConflictGraph;
using cf::GoodSet;
using cf::Instance;
using cf::Value;
using cf::ValuationModel;

namespace {

Instance two_agents(ConflictGraph g, std::vector<Value> values) {
  return Instance(std::move(g), 2, ValuationModel::additive(std::move(values)));
}

Allocation pair(std::size_t m, std::vector<cf::Good> a, std::vector<cf::Good> b) {
  return Allocation::from_lists(m, {std::move(a), std::move(b)});
}

std::vector<cf::Good> order(const std::vector<cf::Good>& goods) { return goods; }

}  // namespace

BOOST_AUTO_TEST_CASE(single_good_chain) {
  const Instance one = two_agents(ConflictGraph::empty(1), {5});
  const std::vector<cf::Good> s{0};
  const cf::Chain chain = cf::build_chain(one.graph(), s);
  BOOST_REQUIRE(chain.steps.size() == 2u);
  BOOST_TEST(chain.steps[0] == pair(1, {0}, {}));
  BOOST_TEST(chain.steps[1] == pair(1, {}, {0}));
  const cf::ChainOutcome outcome = cf::chain_ef1(one, s);
  BOOST_REQUIRE(outcome.found());
  BOOST_TEST(*outcome.step == 0u);
}

BOOST_AUTO_TEST_CASE(four_cycle_chain) {
  const Instance c4 = two_agents(ConflictGraph::cycle(4), {1, 3, 1, 3});
  const std::vector<cf::Good> s{1, 3};
  const cf::Chain chain = cf::build_chain(c4.graph(), s);
  BOOST_REQUIRE(chain.steps.size() == 3u);
  BOOST_TEST(chain.steps[0] == pair(4, {1, 3}, {0, 2}));
  BOOST_TEST(chain.steps[1] == pair(4, {3}, {1}));
  BOOST_TEST(chain.steps[2] == pair(4, {0, 2}, {1, 3}));
  const cf::ChainOutcome outcome = cf::chain_ef1(c4, s);
  BOOST_REQUIRE(outcome.found());
  BOOST_TEST(*outcome.step == 1u);
  BOOST_TEST(outcome.allocation() == pair(4, {3}, {1}));
}

BOOST_AUTO_TEST_CASE(star_chain_records_neighbor_positions) {
  const ConflictGraph star(3, {{0, 1}, {0, 2}});
  const std::vector<cf::Good> s{1, 2};
  const cf::Chain chain = cf::build_chain(star, s);
  BOOST_REQUIRE(chain.steps.size() == 3u);
  BOOST_TEST(chain.steps[0] == pair(3, {1, 2}, {0}));
  BOOST_TEST(chain.steps[1] == pair(3, {2}, {1}));
  BOOST_TEST(chain.steps[2] == pair(3, {0}, {1, 2}));
  BOOST_TEST(chain.first_neighbor[0] == 1u);
  BOOST_TEST(chain.last_neighbor[0] == 2u);
}

BOOST_AUTO_TEST_CASE(path_chain_without_ef1_step) {
  const Instance path = two_agents(ConflictGraph::path(3), {5, 0, 5});
  const std::vector<cf::Good> s{1};
  BOOST_TEST(!cf::chain_ef1(path, s).found());
  const std::vector<cf::Good> ends{0, 2};
  const cf::ChainOutcome outcome = cf::chain_ef1(path, ends);
  BOOST_REQUIRE(outcome.found());
  BOOST_TEST(outcome.allocation() == pair(3, {2}, {0}));
}

BOOST_AUTO_TEST_CASE(rejects_bad_sources) {
  const Instance path = two_agents(ConflictGraph::path(3), {1, 1, 1});
  BOOST_CHECK_THROW(cf::build_chain(path.graph(), order({0, 1})), cf::InvalidInput);
  BOOST_CHECK_THROW(cf::build_chain(path.graph(), order({0})), cf::InvalidInput);
  BOOST_CHECK_THROW(cf::build_chain(path.graph(), order({0, 2, 0})), cf::InvalidInput);
  const Instance three(ConflictGraph::path(3), 3, ValuationModel::uniform(3));
  BOOST_CHECK_THROW(cf::chain_ef1(three, order({1})), cf::InvalidInput);
}

BOOST_AUTO_TEST_CASE(cut_and_choose_examples) {
  const Instance c4(ConflictGraph::cycle(4), {ValuationModel::additive({1, 3, 1, 3}),
                                              ValuationModel::additive({3, 1, 3, 1})});
  const Allocation a = cf::cut_and_choose(c4);
  BOOST_TEST(a == pair(4, {3}, {1}));
  BOOST_TEST(cf::is_ef1(c4, a));
  BOOST_TEST(cf::is_maximal(c4, a));

  const Instance path(ConflictGraph::path(3), {ValuationModel::additive({5, 0, 5}),
                                               ValuationModel::additive({0, 9, 0})});
  const Allocation b = cf::cut_and_choose(path);
  BOOST_TEST(b == pair(3, {2}, {0}));
  BOOST_TEST(cf::is_ef1(path, b));
}

BOOST_AUTO_TEST_CASE(cut_and_choose_chooser_takes_better_bundle) {
  const Instance split(ConflictGraph::path(2), {ValuationModel::additive({1, 1}),
                                                ValuationModel::additive({5, 1})});
  const Allocation a = cf::cut_and_choose(split);
  BOOST_TEST(a.bundles[1].contains(0));
  BOOST_TEST(cf::is_ef1(split, a));
}

// Exhaustive over maximal independent sets of random connected graphs.
BOOST_AUTO_TEST_CASE(chain_steps_are_valid_maximal_and_gapless) {
  ct::Rng rng(31);
  std::size_t sources = 0;
  for (int trial = 0; trial < 120; ++trial) {
    const std::size_t m = 2 + trial % 6;
    const ConflictGraph g = ct::random_connected_graph(m, 0.3, rng);
    const auto table = ct::random_monotone_table(m, 3, rng);
    const Instance instance(g, 2, ValuationModel::table(m, table));
    const ValuationModel& v = instance.valuation(0);
    for (ct::Mask s = 1; s < (ct::Mask{1} << m); ++s) {
      const GoodSet source = GoodSet::from_mask(m, s);
      if (!cf::is_maximal_independent_set(g, source)) continue;
      ++sources;
      const std::vector<cf::Good> ordered = source.to_vector();
      const cf::Chain chain = cf::build_chain(g, ordered);
      BOOST_REQUIRE(chain.steps.size() == ordered.size() + 1);
      for (std::size_t i = 0; i < chain.steps.size(); ++i) {
        const Allocation& step = chain.steps[i];
        BOOST_REQUIRE(cf::validate_allocation(instance, step).wellformed);
        BOOST_REQUIRE(cf::is_maximal(instance, step));
        if (i == 0) continue;
        const Allocation& prev = chain.steps[i - 1];
        BOOST_REQUIRE(cf::is_ordered_adjacent(prev, step));
        const GoodSet left = prev.bundles[0] - step.bundles[0];
        const GoodSet entered = step.bundles[1] - prev.bundles[1];
        BOOST_REQUIRE(left == GoodSet(m, {ordered[i - 1]}));
        BOOST_REQUIRE(entered == GoodSet(m, {ordered[i - 1]}));
        // Sign flip across an ordered-adjacent pair forces an EF1 step.
        if (v.evaluate(prev.bundles[0]) >= v.evaluate(prev.bundles[1]) &&
            v.evaluate(step.bundles[0]) <= v.evaluate(step.bundles[1])) {
          BOOST_REQUIRE(cf::is_ef1(instance, prev) || cf::is_ef1(instance, step));
        }
      }
      BOOST_REQUIRE(chain.steps.front() == Allocation({source, chain.x2}));
      BOOST_REQUIRE(chain.steps.back() == Allocation({chain.x1, source}));
      const Value vs = v.evaluate(source);
      const cf::ChainOutcome outcome = cf::chain_ef1(instance, ordered);
      if (vs >= v.evaluate(chain.x1) && vs >= v.evaluate(chain.x2)) {
        BOOST_REQUIRE(outcome.found());
      }
      if (outcome.found()) {
        BOOST_REQUIRE(cf::is_ef1(instance, outcome.allocation()));
        BOOST_REQUIRE(cf::is_maximal(instance, outcome.allocation()));
        for (std::size_t i = 0; i < *outcome.step; ++i) {
          BOOST_REQUIRE(!cf::is_ef1(instance, chain.steps[i]));
        }
      } else {
        for (const Allocation& step : chain.steps) BOOST_REQUIRE(!cf::is_ef1(instance, step));
      }
    }
  }
  BOOST_TEST(sources > 200u);
}

BOOST_AUTO_TEST_CASE(cut_and_choose_is_ef1_for_both_agents) {
  ct::Rng rng(32);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t m = 2 + trial % 7;
    const ConflictGraph g = ct::random_connected_graph(m, 0.35, rng);
    const auto v1 = ct::random_additive_values(m, 0, 10, rng);
    const auto v2 = ct::random_additive_values(m, 0, 10, rng);
    const Instance instance(g, {ValuationModel::additive(v1), ValuationModel::additive(v2)});
    const Allocation a = cf::cut_and_choose(instance);
    BOOST_REQUIRE(cf::validate_allocation(instance, a).wellformed);
    BOOST_REQUIRE(cf::is_maximal(instance, a));
    BOOST_REQUIRE(ct::ref_ef1_goods({ct::raw_additive(v1), ct::raw_additive(v2)}, ct::to_masks(a)));
  }
}
