// Copyright 2026 The Authors.
//
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

#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "lrcm/error.hpp"

namespace lrcm {

/// A subset of the ground set E = {0, ..., n-1}, stored as a fixed-width bit
/// vector. Bits at positions >= universe() are never set.
class GroundSubset {
 public:
  static constexpr int kMaxUniverse = 128;

  GroundSubset() = default;

  /// The empty subset of an n-element universe.
  explicit GroundSubset(int universe) : universe_(universe) {
    if (universe < 0 || universe > kMaxUniverse) {
      throw DomainError("universe size " + std::to_string(universe) +
                        " outside [0, " + std::to_string(kMaxUniverse) + "]");
    }
  }

  static GroundSubset full(int universe) {
    GroundSubset s(universe);
    for (int w = 0; w < kWords; ++w) {
      const int lo = w * 64;
      if (universe >= lo + 64) {
        s.words_[w] = ~uint64_t{0};
      } else if (universe > lo) {
        s.words_[w] = (uint64_t{1} << (universe - lo)) - 1;
      }
    }
    return s;
  }

  static GroundSubset from_elements(int universe, std::span<const int> elements) {
    GroundSubset s(universe);
    for (int e : elements) s.insert(e);
    return s;
  }

  static GroundSubset from_elements(int universe, std::initializer_list<int> elements) {
    return from_elements(universe, std::span<const int>(elements.begin(), elements.size()));
  }

  /// Subset whose low 64 bits are `mask`; used by exhaustive enumerations.
  static GroundSubset from_mask(int universe, uint64_t mask) {
    GroundSubset s(universe);
    if (universe < 64 && (mask >> universe) != 0) {
      throw DomainError("mask has bits beyond universe " + std::to_string(universe));
    }
    s.words_[0] = mask;
    return s;
  }

  int universe() const noexcept { return universe_; }

  int size() const noexcept {
    int c = 0;
    for (uint64_t w : words_) c += std::popcount(w);
    return c;
  }

  bool empty() const noexcept {
    for (uint64_t w : words_) {
      if (w != 0) return false;
    }
    return true;
  }

  bool contains(int e) const {
    check_element(e);
    return (words_[e >> 6] >> (e & 63)) & 1;
  }

  void insert(int e) {
    check_element(e);
    words_[e >> 6] |= uint64_t{1} << (e & 63);
  }

  void erase(int e) {
    check_element(e);
    words_[e >> 6] &= ~(uint64_t{1} << (e & 63));
  }

  GroundSubset with(int e) const {
    GroundSubset s = *this;
    s.insert(e);
    return s;
  }

  GroundSubset without(int e) const {
    GroundSubset s = *this;
    s.erase(e);
    return s;
  }

  bool is_subset_of(const GroundSubset& other) const {
    check_same(other);
    for (int w = 0; w < kWords; ++w) {
      if (words_[w] & ~other.words_[w]) return false;
    }
    return true;
  }

  bool is_proper_subset_of(const GroundSubset& other) const {
    return is_subset_of(other) && *this != other;
  }

  bool intersects(const GroundSubset& other) const {
    check_same(other);
    for (int w = 0; w < kWords; ++w) {
      if (words_[w] & other.words_[w]) return true;
    }
    return false;
  }

  GroundSubset complement() const { return full(universe_) - *this; }

  /// Low 64 bits; exact index of the subset when universe() <= 64.
  uint64_t low_word() const noexcept { return words_[0]; }

  /// Smallest element, or -1 for the empty set.
  int first() const noexcept {
    for (int w = 0; w < kWords; ++w) {
      if (words_[w]) return w * 64 + std::countr_zero(words_[w]);
    }
    return -1;
  }

  template <class Fn>
  void for_each(Fn&& fn) const {
    for (int w = 0; w < kWords; ++w) {
      uint64_t bits = words_[w];
      while (bits) {
        fn(w * 64 + std::countr_zero(bits));
        bits &= bits - 1;
      }
    }
  }

  std::vector<int> elements() const {
    std::vector<int> out;
    out.reserve(size());
    for_each([&](int e) { out.push_back(e); });
    return out;
  }

  std::string to_string() const {
    std::string s = "{";
    bool first_elem = true;
    for_each([&](int e) {
      if (!first_elem) s += ',';
      s += std::to_string(e);
      first_elem = false;
    });
    return s + "}";
  }

  GroundSubset& operator|=(const GroundSubset& o) {
    check_same(o);
    for (int w = 0; w < kWords; ++w) words_[w] |= o.words_[w];
    return *this;
  }
  GroundSubset& operator&=(const GroundSubset& o) {
    check_same(o);
    for (int w = 0; w < kWords; ++w) words_[w] &= o.words_[w];
    return *this;
  }
  GroundSubset& operator-=(const GroundSubset& o) {
    check_same(o);
    for (int w = 0; w < kWords; ++w) words_[w] &= ~o.words_[w];
    return *this;
  }

  friend GroundSubset operator|(GroundSubset a, const GroundSubset& b) { return a |= b; }
  friend GroundSubset operator&(GroundSubset a, const GroundSubset& b) { return a &= b; }
  friend GroundSubset operator-(GroundSubset a, const GroundSubset& b) { return a -= b; }

  friend bool operator==(const GroundSubset& a, const GroundSubset& b) noexcept {
    return a.universe_ == b.universe_ && a.words_ == b.words_;
  }

  /// Numeric comparison of the bit patterns (highest word first).
  friend bool numeric_less(const GroundSubset& a, const GroundSubset& b) noexcept {
    for (int w = kWords - 1; w >= 0; --w) {
      if (a.words_[w] != b.words_[w]) return a.words_[w] < b.words_[w];
    }
    return false;
  }

  size_t hash() const noexcept {
    size_t h = std::hash<uint64_t>{}(words_[0]);
    for (int w = 1; w < kWords; ++w) h = h * 0x9E3779B97F4A7C15ULL + words_[w];
    return h ^ static_cast<size_t>(universe_);
  }

 private:
  static constexpr int kWords = kMaxUniverse / 64;

  void check_element(int e) const {
    if (e < 0 || e >= universe_) {
      throw DomainError("element " + std::to_string(e) + " outside universe of size " +
                        std::to_string(universe_));
    }
  }
  void check_same(const GroundSubset& o) const {
    if (o.universe_ != universe_) {
      throw DomainError("subsets of different universes (" + std::to_string(universe_) +
                        " vs " + std::to_string(o.universe_) + ")");
    }
  }

  std::array<uint64_t, kWords> words_{};
  int universe_ = 0;
};

/// Canonical order for returned collections: by cardinality, then bit pattern.
struct CanonicalLess {
  bool operator()(const GroundSubset& a, const GroundSubset& b) const noexcept {
    const int sa = a.size();
    const int sb = b.size();
    if (sa != sb) return sa < sb;
    return numeric_less(a, b);
  }
};

struct GroundSubsetHash {
  size_t operator()(const GroundSubset& s) const noexcept { return s.hash(); }
};

/// Visits every `size`-subset of `pool` in colexicographic order, which is
/// ascending numeric order of the bit patterns. `fn` returns false to stop.
/// Returns false if stopped early.
template <class Fn>
bool for_each_subset_of_size(const GroundSubset& pool, int size, Fn&& fn) {
  const std::vector<int> items = pool.elements();
  const int n = static_cast<int>(items.size());
  if (size < 0 || size > n) return true;
  std::vector<int> idx(size + 1);
  for (int i = 0; i < size; ++i) idx[i] = i;
  idx[size] = n;
  while (true) {
    GroundSubset s(pool.universe());
    for (int i = 0; i < size; ++i) s.insert(items[idx[i]]);
    if (!fn(s)) return false;
    int j = 0;
    while (j < size && idx[j] + 1 == idx[j + 1]) ++j;
    if (j >= size) return true;
    ++idx[j];
    for (int i = 0; i < j; ++i) idx[i] = i;
  }
}

namespace detail {
__extension__ using Wide = unsigned __int128;  // intermediate products below 2^71
}  // namespace detail

/// C(n, j), saturating at `cap`.
inline uint64_t binomial_capped(int n, int j, uint64_t cap) {
  if (j < 0 || j > n) return 0;
  detail::Wide b = 1;
  for (int i = 0; i < j; ++i) {
    b = b * (n - i) / (i + 1);
    if (b >= cap) return cap;
  }
  return static_cast<uint64_t>(b);
}

/// Number of subsets of size <= `max_size` of an n-set, saturating at `cap`.
inline uint64_t count_subsets_up_to(int n, int max_size, uint64_t cap) {
  uint64_t total = 0;
  uint64_t binom = 1;  // C(n, 0)
  for (int j = 0; j <= max_size && j <= n; ++j) {
    total += binom;
    if (total >= cap) return cap;
    // C(n, j+1) = C(n, j) * (n - j) / (j + 1); exact in integers.
    const detail::Wide next = static_cast<detail::Wide>(binom) * (n - j) / (j + 1);
    if (next >= cap) {
      binom = cap;
    } else {
      binom = static_cast<uint64_t>(next);
    }
  }
  return total < cap ? total : cap;
}

}  // namespace lrcm

template <>
struct std::hash<lrcm::GroundSubset> {
  size_t operator()(const lrcm::GroundSubset& s) const noexcept { return s.hash(); }
};
