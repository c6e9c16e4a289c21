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

// Exhaustive search for set families F_1..F_m over [n] that every perfect
// (n, k, d, r, delta)-matroid with r < k must carry:
//   (i)   each F_j has an element in no other member,
//   (ii)  |F_j| <= r + delta - 1,
//   (iii) the members cover [n],
//   (iv)  |F & F_I| <= |F| - delta for F outside I, |I| < h,
//   (v)   |F_I| - |I|(delta - 1) >= k for |I| >= h,
// with h = ceil(k/r). Finding none proves no perfect matroid exists.
//
// Families are generated up to relabeling of elements and reordering of
// members: members come in non-increasing size, and each new member is
// chosen by how many elements it takes from every class of elements with
// equal membership so far (always the lowest-indexed ones).

#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "lrcm/error.hpp"
#include "lrcm/lrc.hpp"
#include "lrcm/subset.hpp"

namespace lrcm {

struct NonexistenceResult {
  bool found = false;                       // a family satisfying (i)-(v)
  std::vector<GroundSubset> family;         // the first one found
  long nodes = 0;                           // partial families visited
};

namespace detail {

class FamilySearch {
 public:
  FamilySearch(int n, int k, int r, int delta)
      : n_(n), k_(k), delta_(delta), h_(ceil_div(k, r)), size_cap_(r + delta - 1) {
    max_members_ = std::min((n - k) / (delta - 1), n);
  }

  NonexistenceResult run() {
    if (max_members_ >= h_) extend(0, size_cap_);
    return std::move(result_);
  }

 private:
  int n_, k_, delta_, h_, size_cap_;
  int max_members_ = 0;
  std::vector<GroundSubset> sets_;
  NonexistenceResult result_;

  int covered() const {
    GroundSubset u(n_);
    for (const auto& s : sets_) u |= s;
    return u.size();
  }

  GroundSubset union_of(uint64_t mask) const {
    GroundSubset u(n_);
    for (size_t i = 0; i < sets_.size(); ++i) {
      if ((mask >> i) & 1) u |= sets_[i];
    }
    return u;
  }

  // Calls fn(mask) for every subset of the index set `pool` of the given size.
  template <typename Fn>
  static bool for_each_index_subset(uint64_t pool, int size, Fn&& fn) {
    std::vector<int> idx;
    for (int i = 0; i < 64; ++i) {
      if ((pool >> i) & 1) idx.push_back(i);
    }
    if (size > static_cast<int>(idx.size())) return true;
    std::vector<int> pick(size);
    for (int i = 0; i < size; ++i) pick[i] = i;
    while (true) {
      uint64_t mask = 0;
      for (int p : pick) mask |= uint64_t{1} << idx[p];
      if (!fn(mask)) return false;
      int i = size - 1;
      while (i >= 0 && pick[i] == static_cast<int>(idx.size()) - size + i) --i;
      if (i < 0) return true;
      ++pick[i];
      for (int j = i + 1; j < size; ++j) pick[j] = pick[j - 1] + 1;
    }
  }

  // (iv) and (v) on every index set that involves the newest member.
  bool partial_ok() const {
    const int cnt = static_cast<int>(sets_.size());
    const int last = cnt - 1;
    const uint64_t all = (cnt == 64) ? ~uint64_t{0} : (uint64_t{1} << cnt) - 1;
    // (iv): intersections grow with I, so only |I| = min(h-1, available) matters.
    for (int f = 0; f < cnt; ++f) {
      const uint64_t others = all & ~(uint64_t{1} << f);
      const int size = std::min(h_ - 1, cnt - 1);
      const uint64_t must = (f == last) ? 0 : (uint64_t{1} << last);
      const uint64_t pool = (f == last) ? others : (others & ~must);
      const int need = (f == last) ? size : size - 1;
      if (need < 0) continue;
      const bool ok = for_each_index_subset(pool, need, [&](uint64_t mask) {
        return (sets_[f] & union_of(mask | must)).size() <= sets_[f].size() - delta_;
      });
      if (!ok) return false;
    }
    // (v) for |I| = h containing the newest member.
    if (cnt >= h_) {
      const uint64_t bit = uint64_t{1} << last;
      const bool ok = for_each_index_subset(all & ~bit, h_ - 1, [&](uint64_t mask) {
        return union_of(mask | bit).size() - h_ * (delta_ - 1) >= k_;
      });
      if (!ok) return false;
    }
    return true;
  }

  bool complete_ok() const {
    const int cnt = static_cast<int>(sets_.size());
    if (cnt < h_ || covered() != n_) return false;
    for (int j = 0; j < cnt; ++j) {
      GroundSubset others(n_);
      for (int i = 0; i < cnt; ++i) {
        if (i != j) others |= sets_[i];
      }
      if (sets_[j].is_subset_of(others)) return false;
    }
    if (delta_ > 2) {
      // Without unit nullity steps (v) is not implied by |I| = h; check all I.
      for (uint64_t mask = 0; mask < (uint64_t{1} << cnt); ++mask) {
        const int size = std::popcount(mask);
        if (size >= h_ && union_of(mask).size() - size * (delta_ - 1) < k_) return false;
      }
    }
    return true;
  }

  // Membership classes of already covered elements, in ascending order of
  // their lowest element.
  std::vector<std::vector<int>> classes() const {
    std::map<uint64_t, std::vector<int>> by_pattern;
    for (int e = 0; e < n_; ++e) {
      uint64_t pattern = 0;
      for (size_t i = 0; i < sets_.size(); ++i) {
        if (sets_[i].contains(e)) pattern |= uint64_t{1} << i;
      }
      if (pattern != 0) by_pattern[pattern].push_back(e);
    }
    std::vector<std::vector<int>> out;
    for (auto& [_, v] : by_pattern) out.push_back(std::move(v));
    std::sort(out.begin(), out.end());
    return out;
  }

  bool extend(int depth, int max_size) {
    ++result_.nodes;
    if (depth > 0 && complete_ok()) {
      result_.found = true;
      result_.family = sets_;
      return true;
    }
    if (depth >= max_members_) return false;
    const int cov = covered();
    const int fresh_total = n_ - cov;
    if (fresh_total == 0) return false;  // every new member needs a fresh element
    if (fresh_total > (max_members_ - depth) * max_size) return false;
    const auto cls = classes();
    std::vector<int> take(cls.size(), 0);
    // Element ids are assigned densely, so fresh elements are cov, cov+1, ...
    auto choose = [&](auto&& self, size_t ci, int chosen) -> bool {
      if (ci == cls.size()) {
        for (int fresh = 1; fresh <= fresh_total && chosen + fresh <= max_size; ++fresh) {
          if (chosen + fresh < delta_) continue;
          GroundSubset s(n_);
          for (size_t c = 0; c < cls.size(); ++c) {
            for (int t = 0; t < take[c]; ++t) s.insert(cls[c][t]);
          }
          for (int t = 0; t < fresh; ++t) s.insert(cov + t);
          sets_.push_back(s);
          if (partial_ok() && extend(depth + 1, s.size())) return true;
          sets_.pop_back();
        }
        return false;
      }
      for (int c = 0; c <= static_cast<int>(cls[ci].size()) && chosen + c < max_size; ++c) {
        take[ci] = c;
        if (self(self, ci + 1, chosen + c)) return true;
      }
      take[ci] = 0;
      return false;
    };
    return choose(choose, 0, 0);
  }
};

}  // namespace detail

/// Searches for a family satisfying (i)-(v). Requires 0 < r < k,
/// delta >= 2 and n <= 64.
inline NonexistenceResult search_perfect_family(int n, int k, int r, int delta) {
  if (!(0 < r && r < k) || delta < 2) throw DomainError("need 0 < r < k and delta >= 2");
  if (n > 64) throw CapacityError("family search limited to n <= 64");
  return detail::FamilySearch(n, k, r, delta).run();
}

}  // namespace lrcm
