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

#include "conflictfair/good_set.h"

#include <stdexcept>

#include "conflictfair/value.h"

namespace conflictfair {
namespace {

void require_same_universe(const GoodSet& a, const GoodSet& b) {
  if (a.universe() != b.universe()) {
    throw InvalidInput("good sets over different universes (" +
                       std::to_string(a.universe()) + " vs " +
                       std::to_string(b.universe()) + ")");
  }
}

}  // namespace

GoodSet::GoodSet(std::size_t universe, std::span<const Good> goods) : bits_(universe) {
  for (Good g : goods) insert(g);
}

GoodSet::GoodSet(std::size_t universe, std::initializer_list<Good> goods)
    : GoodSet(universe, std::span<const Good>(goods.begin(), goods.size())) {}

GoodSet GoodSet::full(std::size_t universe) {
  GoodSet s(universe);
  s.bits_.set();
  return s;
}

GoodSet GoodSet::from_mask(std::size_t universe, std::uint64_t mask) {
  if (universe > 64) throw InvalidInput("bitmask encoding needs universe <= 64");
  if (universe < 64 && (mask >> universe) != 0) {
    throw InvalidInput("bitmask " + std::to_string(mask) + " has goods outside [0, " +
                       std::to_string(universe) + ")");
  }
  GoodSet s(universe);
  for (Good g = 0; g < universe; ++g) {
    if ((mask >> g) & 1U) s.bits_.set(g);
  }
  return s;
}

void GoodSet::insert(Good g) {
  if (g >= bits_.size()) {
    throw InvalidInput("good " + std::to_string(g) + " outside [0, " +
                       std::to_string(bits_.size()) + ")");
  }
  bits_.set(g);
}

void GoodSet::erase(Good g) {
  if (g < bits_.size()) bits_.reset(g);
}

GoodSet& GoodSet::operator|=(const GoodSet& other) {
  require_same_universe(*this, other);
  bits_ |= other.bits_;
  return *this;
}

GoodSet& GoodSet::operator&=(const GoodSet& other) {
  require_same_universe(*this, other);
  bits_ &= other.bits_;
  return *this;
}

GoodSet& GoodSet::operator-=(const GoodSet& other) {
  require_same_universe(*this, other);
  bits_ -= other.bits_;
  return *this;
}

GoodSet GoodSet::complement() const {
  GoodSet s = *this;
  s.bits_.flip();
  return s;
}

std::uint64_t GoodSet::to_mask() const {
  if (bits_.size() > 64) throw InvalidInput("bitmask encoding needs universe <= 64");
  std::uint64_t mask = 0;
  for (Good g : *this) mask |= std::uint64_t{1} << g;
  return mask;
}

std::vector<Good> GoodSet::to_vector() const {
  std::vector<Good> out;
  out.reserve(size());
  for (Good g : *this) out.push_back(g);
  return out;
}

std::string GoodSet::to_string() const {
  std::string out = "{";
  bool first = true;
  for (Good g : *this) {
    if (!first) out += ",";
    out += std::to_string(g);
    first = false;
  }
  return out + "}";
}

}  // namespace conflictfair
