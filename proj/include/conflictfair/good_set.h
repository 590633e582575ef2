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

#ifndef CONFLICTFAIR_GOOD_SET_H_
#define CONFLICTFAIR_GOOD_SET_H_

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iterator>
#include <span>
#include <string>
#include <vector>

#include <boost/dynamic_bitset.hpp>

namespace conflictfair {

// Goods are dense indices 0..m-1.
using Good = std::size_t;

// A subset of the goods [0, m). The universe size m is part of the value;
// binary set operations require equal universes.
class GoodSet {
 public:
  using Bits = boost::dynamic_bitset<std::uint64_t>;

  class Iterator {
   public:
    using iterator_category = std::forward_iterator_tag;
    using value_type = Good;
    using difference_type = std::ptrdiff_t;
    using pointer = const Good*;
    using reference = Good;

    Iterator() = default;
    Iterator(const Bits* bits, Good pos) : bits_(bits), pos_(pos) {}
    Good operator*() const { return pos_; }
    Iterator& operator++() {
      pos_ = bits_->find_next(pos_);
      return *this;
    }
    Iterator operator++(int) {
      Iterator old = *this;
      ++*this;
      return old;
    }
    bool operator==(const Iterator& other) const { return pos_ == other.pos_; }

   private:
    const Bits* bits_ = nullptr;
    Good pos_ = Bits::npos;
  };

  GoodSet() = default;
  explicit GoodSet(std::size_t universe) : bits_(universe) {}
  // Throws InvalidInput if a good is outside [0, universe).
  GoodSet(std::size_t universe, std::span<const Good> goods);
  GoodSet(std::size_t universe, std::initializer_list<Good> goods);

  static GoodSet full(std::size_t universe);
  // Bit g of mask is good g; requires universe <= 64.
  static GoodSet from_mask(std::size_t universe, std::uint64_t mask);

  std::size_t universe() const { return bits_.size(); }
  std::size_t size() const { return bits_.count(); }
  bool empty() const { return bits_.none(); }
  bool contains(Good g) const { return g < bits_.size() && bits_.test(g); }

  void insert(Good g);
  void erase(Good g);

  Iterator begin() const { return Iterator(&bits_, bits_.find_first()); }
  Iterator end() const { return Iterator(&bits_, Bits::npos); }

  bool intersects(const GoodSet& other) const { return bits_.intersects(other.bits_); }
  bool is_subset_of(const GoodSet& other) const { return bits_.is_subset_of(other.bits_); }

  GoodSet& operator|=(const GoodSet& other);
  GoodSet& operator&=(const GoodSet& other);
  GoodSet& operator-=(const GoodSet& other);
  friend GoodSet operator|(GoodSet a, const GoodSet& b) { return a |= b; }
  friend GoodSet operator&(GoodSet a, const GoodSet& b) { return a &= b; }
  friend GoodSet operator-(GoodSet a, const GoodSet& b) { return a -= b; }
  GoodSet complement() const;

  // Requires universe <= 64.
  std::uint64_t to_mask() const;
  std::vector<Good> to_vector() const;
  // "{0,2,5}"
  std::string to_string() const;

  const Bits& bits() const { return bits_; }

  friend bool operator==(const GoodSet& a, const GoodSet& b) { return a.bits_ == b.bits_; }
  friend bool operator<(const GoodSet& a, const GoodSet& b) {
    return a.to_vector() < b.to_vector();
  }

 private:
  Bits bits_;
};

}  // namespace conflictfair

#endif  // CONFLICTFAIR_GOOD_SET_H_
