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

#include "conflictfair/oracle.h"

#include <algorithm>
#include <atomic>
#include <string>
#include <thread>

#include "conflictfair/checks.h"

namespace conflictfair {
namespace {

using Clock = std::chrono::steady_clock;

struct Deadline {
  std::optional<Clock::time_point> at;
  bool passed() const { return at && Clock::now() > *at; }
};

Deadline deadline_for(const EnumerationBudget& budget) {
  Deadline d;
  if (budget.time_limit.count() > 0) d.at = Clock::now() + budget.time_limit;
  return d;
}

void check_budget(const Instance& instance, const EnumerationBudget& budget) {
  const std::uint64_t count = assignment_count(instance);
  if (count > budget.max_assignments || instance.m() > 64) {
    throw BudgetExceeded("enumeration needs " + std::to_string(instance.agents() + 1) + "^" +
                         std::to_string(instance.m()) + " assignments, budget is " +
                         std::to_string(budget.max_assignments));
  }
}

// Visits the maximal allocations whose good 0 carries `block` (all of them
// when m = 0). Returns false if `visit` asked to stop.
bool enumerate_block(const Instance& instance, std::size_t block, const Deadline& deadline,
                     const std::atomic<bool>& cancelled,
                     const std::function<bool(const Allocation&)>& visit) {
  const std::size_t m = instance.m();
  const std::size_t n = instance.agents();
  const ConflictGraph& graph = instance.graph();
  std::vector<std::uint64_t> around(m, 0);
  for (Good g = 0; g < m; ++g) around[g] = graph.neighbors(g).to_mask();

  std::vector<std::size_t> label(m, 0);
  if (m > 0) label[0] = block;
  std::vector<std::uint64_t> bundle(n + 1, 0);
  std::uint64_t tick = 0;
  while (true) {
    if ((++tick & 0xFFFF) == 0 && (deadline.passed() || cancelled.load())) {
      throw BudgetExceeded("enumeration exceeded its time limit");
    }
    std::fill(bundle.begin(), bundle.end(), 0);
    for (Good g = 0; g < m; ++g) bundle[label[g]] |= std::uint64_t{1} << g;

    bool ok = true;
    for (Good g = 0; g < m && ok; ++g) {
      if (label[g] != 0) {
        ok = (around[g] & bundle[label[g]]) == 0;
      } else {
        for (std::size_t a = 1; a <= n && ok; ++a) ok = (around[g] & bundle[a]) != 0;
      }
    }
    if (ok) {
      Allocation allocation;
      allocation.bundles.reserve(n);
      for (std::size_t a = 1; a <= n; ++a) {
        allocation.bundles.push_back(GoodSet::from_mask(m, bundle[a]));
      }
      if (!visit(allocation)) return false;
    }

    // Odometer over goods m-1 .. 1; good 0 is fixed by the block.
    std::size_t digit = m;
    while (digit > 1) {
      --digit;
      if (++label[digit] <= n) break;
      label[digit] = 0;
      if (digit == 1) return true;
    }
    if (m <= 1) return true;
  }
}

std::size_t block_count(const Instance& instance) {
  return instance.m() == 0 ? 1 : instance.agents() + 1;
}

// Runs `per_block(block, visit)` over all blocks with budget.workers threads.
template <typename Collect>
void run_blocks(const Instance& instance, const EnumerationBudget& budget, Collect&& collect) {
  check_budget(instance, budget);
  const Deadline deadline = deadline_for(budget);
  const std::size_t blocks = block_count(instance);
  const std::size_t workers = std::clamp<std::size_t>(budget.workers, 1, blocks);
  std::atomic<bool> cancelled{false};
  if (workers == 1) {
    for (std::size_t b = 0; b < blocks; ++b) {
      if (!collect(b, deadline, cancelled)) return;
    }
    return;
  }
  std::vector<std::exception_ptr> errors(workers);
  std::vector<std::thread> threads;
  for (std::size_t w = 0; w < workers; ++w) {
    threads.emplace_back([&, w] {
      try {
        for (std::size_t b = w; b < blocks; b += workers) collect(b, deadline, cancelled);
      } catch (...) {
        errors[w] = std::current_exception();
        cancelled = true;
      }
    });
  }
  for (auto& t : threads) t.join();
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

}  // namespace

std::uint64_t assignment_count(const Instance& instance) {
  const std::uint64_t base = instance.agents() + 1;
  std::uint64_t count = 1;
  for (std::size_t i = 0; i < instance.m(); ++i) {
    if (count > UINT64_MAX / base) return UINT64_MAX;
    count *= base;
  }
  return count;
}

void enumerate_maximal_allocations(const Instance& instance, const EnumerationBudget& budget,
                                   const std::function<bool(const Allocation&)>& visit) {
  EnumerationBudget serial = budget;
  serial.workers = 1;
  run_blocks(instance, serial,
             [&](std::size_t block, const Deadline& deadline, const std::atomic<bool>& cancelled) {
               return enumerate_block(instance, block, deadline, cancelled, visit);
             });
}

std::vector<Allocation> maximal_allocations(const Instance& instance,
                                            const EnumerationBudget& budget) {
  std::vector<std::vector<Allocation>> per_block(block_count(instance));
  run_blocks(instance, budget,
             [&](std::size_t block, const Deadline& deadline, const std::atomic<bool>& cancelled) {
               enumerate_block(instance, block, deadline, cancelled, [&](const Allocation& a) {
                 per_block[block].push_back(a);
                 return true;
               });
               return true;
             });
  std::vector<Allocation> out;
  for (auto& block : per_block) {
    std::move(block.begin(), block.end(), std::back_inserter(out));
  }
  return out;
}

ExistenceResult exists_maximal_ef1(const Instance& instance, const EnumerationBudget& budget) {
  std::vector<std::optional<Allocation>> per_block(block_count(instance));
  run_blocks(instance, budget,
             [&](std::size_t block, const Deadline& deadline, const std::atomic<bool>& cancelled) {
               enumerate_block(instance, block, deadline, cancelled, [&](const Allocation& a) {
                 if (!is_ef1(instance, a)) return true;
                 per_block[block] = a;
                 return false;
               });
               // Serial runs can stop at the first block with a witness.
               return !per_block[block].has_value();
             });
  ExistenceResult result;
  for (auto& witness : per_block) {
    if (witness) {
      result.exists = true;
      result.witness = std::move(witness);
      break;
    }
  }
  return result;
}

GammaResult gamma_with_witness(const Instance& instance, const EnumerationBudget& budget) {
  if (!instance.identical()) throw InvalidInput("gamma needs identical valuations");
  const ValuationModel& v = instance.valuation(0);
  struct Best {
    std::optional<Value> gamma;
    Allocation attaining;
  };
  std::vector<Best> per_block(block_count(instance));
  run_blocks(instance, budget,
             [&](std::size_t block, const Deadline& deadline, const std::atomic<bool>& cancelled) {
               Best& best = per_block[block];
               enumerate_block(instance, block, deadline, cancelled, [&](const Allocation& a) {
                 std::optional<Value> top_minus_one;
                 std::optional<Value> bottom;
                 for (const auto& bundle : a.bundles) {
                   Value reduced = value_minus_one(v, bundle);
                   Value full = v.evaluate(bundle);
                   if (!top_minus_one || reduced > *top_minus_one) top_minus_one = reduced;
                   if (!bottom || full < *bottom) bottom = full;
                 }
                 Value gap = *top_minus_one - *bottom;
                 if (!best.gamma || gap < *best.gamma) {
                   best.gamma = std::move(gap);
                   best.attaining = a;
                 }
                 return true;
               });
               return true;
             });
  std::optional<GammaResult> result;
  for (auto& best : per_block) {
    if (best.gamma && (!result || *best.gamma < result->gamma)) {
      result = GammaResult{*best.gamma, best.attaining};
    }
  }
  if (!result) throw std::logic_error("instance has no maximal allocation");
  return *result;
}

Value compute_gamma(const Instance& instance, const EnumerationBudget& budget) {
  return gamma_with_witness(instance, budget).gamma;
}

}  // namespace conflictfair
