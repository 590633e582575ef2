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

#ifndef CONFLICTFAIR_VALUATION_H_
#define CONFLICTFAIR_VALUATION_H_

#include <cstddef>
#include <cstdint>
#include <memory>
#include <utility>
#include <variant>
#include <vector>

#include "conflictfair/good_set.h"
#include "conflictfair/value.h"

namespace conflictfair {

// Largest universe accepted by a full subset table.
inline constexpr std::size_t kMaxTableGoods = 20;

class ValuationModel;

// v(S) = sum of per-good values.
struct AdditiveModel {
  std::vector<Value> values;
};

// v(S) = |S|.
struct UniformModel {
  std::size_t m = 0;
};

// Explicit value for every subset; entries[mask] where bit g is good g.
struct TableModel {
  std::size_t m = 0;
  std::vector<Value> entries;
};

// v(S) = -inner(S).
struct NegatedModel {
  std::shared_ptr<const ValuationModel> inner;
};

// v(S) = base(S restricted to base_goods) + sum of extra over S. base_goods[j]
// is the good playing the role of the base model's good j.
struct CompositeModel {
  std::shared_ptr<const ValuationModel> base;
  std::vector<Good> base_goods;
  std::vector<Value> extra;
};

struct Monotonicity {
  bool non_decreasing = false;
  bool non_increasing = false;
};

// Set-value oracle over goods [0, m). Immutable once built.
class ValuationModel {
 public:
  using Variant =
      std::variant<AdditiveModel, UniformModel, TableModel, NegatedModel, CompositeModel>;

  static ValuationModel additive(std::vector<Value> values);
  static ValuationModel uniform(std::size_t m);
  // entries must have 2^m elements with entries[0] == 0 and m <= 20.
  static ValuationModel table(std::size_t m, std::vector<Value> entries);
  // Sparse form as found in files; every subset must appear exactly once.
  static ValuationModel table(std::size_t m,
                              const std::vector<std::pair<std::uint64_t, Value>>& entries);
  static ValuationModel negated(ValuationModel inner);
  static ValuationModel composite(ValuationModel base, std::vector<Good> base_goods,
                                  std::vector<Value> extra);

  std::size_t m() const { return m_; }
  const Variant& kind() const { return kind_; }
  bool is_additive() const { return std::holds_alternative<AdditiveModel>(kind_); }

  // Throws InvalidInput if subset is over a different universe.
  Value evaluate(const GoodSet& subset) const;
  Value evaluate_single(Good g) const;

  // Exhaustive for tables (O(m 2^m)); structural for the other families.
  Monotonicity monotonicity() const;

  friend bool operator==(const ValuationModel& a, const ValuationModel& b);

 private:
  ValuationModel(std::size_t m, Variant kind) : m_(m), kind_(std::move(kind)) {}

  std::size_t m_ = 0;
  Variant kind_;
};

}  // namespace conflictfair

#endif  // CONFLICTFAIR_VALUATION_H_
