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

// Locally repairable code parameters of a matroid: length n, rank k, minimum
// distance d, and all-symbol (r, delta)-locality.

#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <unordered_set>
#include <vector>

#include "lrcm/error.hpp"
#include "lrcm/lattice.hpp"
#include "lrcm/matroid.hpp"
#include "lrcm/subset.hpp"

namespace lrcm {

inline int ceil_div(int a, int b) {
  if (b <= 0) throw DomainError("ceil_div by non-positive divisor");
  return a >= 0 ? (a + b - 1) / b : -((-a) / b);
}

struct LrcParams {
  int n = 0;
  int k = 0;
  int d = 0;
  std::optional<int> r;
  std::optional<int> delta;

  std::string to_string() const {
    std::string s = "(" + std::to_string(n) + "," + std::to_string(k) + "," + std::to_string(d);
    if (r && delta) s += "," + std::to_string(*r) + "," + std::to_string(*delta);
    return s + ")";
  }
  friend bool operator==(const LrcParams&, const LrcParams&) = default;
};

/// S_x for every element x, indexed by x.
struct LocalityAssignment {
  int r = 0;
  int delta = 0;
  std::vector<GroundSubset> sets;

  /// The distinct locality sets in canonical order.
  std::vector<GroundSubset> distinct() const {
    std::vector<GroundSubset> out = sets;
    std::sort(out.begin(), out.end(), CanonicalLess{});
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  }
};

/// d = n - k + 1 - max{nullity(Z) : Z a coatom of the cyclic flat lattice}.
/// Throws DomainError when k = 0 or 1_Z != E, where d is not finite.
inline int min_distance(const Matroid& m) {
  const int n = m.ground_size();
  const int k = m.full_rank();
  if (k == 0) throw DomainError("d undefined: rank(E) = 0");
  const CyclicFlatLattice z = cyclic_flats(m);
  const auto top = z.top();
  if (!top || *top != GroundSubset::full(n)) {
    throw DomainError("d undefined: E contains coloops, so 1_Z != E");
  }
  int max_nullity = 0;
  for (const auto& c : coatoms(z)) {
    max_nullity = std::max(max_nullity, c.size() - z.rank_of(c));
  }
  return n - k + 1 - max_nullity;
}

/// min{|X| : rank(E - X) < k}, by scanning every subset.
inline int min_distance_bruteforce(const Matroid& m) {
  const int n = m.ground_size();
  require_exhaustive(n, kExhaustiveLimit, "brute-force minimum distance");
  const int k = m.full_rank();
  if (k == 0) throw DomainError("d undefined: rank(E) = 0");
  int largest = 0;  // largest |Y| with rank(Y) < k
  for (uint64_t mask = 0; mask < (uint64_t{1} << n); ++mask) {
    const int size = std::popcount(mask);
    if (size > largest && m.rank(GroundSubset::from_mask(n, mask)) < k) largest = size;
  }
  return n - largest;
}

/// S is an (r, delta)-locality set when |S| <= r + delta - 1, rank(S) > 0 and
/// removing any delta - 1 elements keeps the rank, i.e. d(M|S) >= delta.
inline bool is_locality_set(const Matroid& m, const GroundSubset& s, int r, int delta) {
  if (delta < 2 || r < 1) throw DomainError("locality needs r >= 1 and delta >= 2");
  const int size = s.size();
  if (size > r + delta - 1 || size < delta) return false;
  const int rs = m.rank(s);
  if (rs == 0 || size - rs < delta - 1) return false;
  return for_each_subset_of_size(s, delta - 1,
                                 [&](const GroundSubset& x) { return m.rank(s - x) == rs; });
}

inline bool verify_locality(const Matroid& m, const LocalityAssignment& a) {
  const int n = m.ground_size();
  if (static_cast<int>(a.sets.size()) != n) return false;
  for (int x = 0; x < n; ++x) {
    const auto& s = a.sets[x];
    if (s.universe() != n || !s.contains(x)) return false;
    if (!is_locality_set(m, s, a.r, a.delta)) return false;
  }
  return true;
}

/// Upper bound on locality candidates examined before giving up.
inline constexpr uint64_t kLocalityCandidateCap = 5'000'000;

/// Searches for an (r, delta)-locality assignment. Every locality set is
/// cyclic with closure a cyclic flat of rank <= r, so candidates are drawn
/// from subsets of such flats. Each x receives the first qualifying set in
/// canonical order. Returns nullopt when no assignment exists.
inline std::optional<LocalityAssignment> has_locality(const Matroid& m, int r, int delta) {
  if (r < 1 || delta < 2) throw DomainError("locality needs r >= 1 and delta >= 2");
  const int n = m.ground_size();
  const int limit = r + delta - 1;
  const CyclicFlatLattice z = cyclic_flats(m);

  std::vector<GroundSubset> hosts;
  for (const auto& mem : z.members()) {
    if (mem.rank <= r && mem.rank > 0) hosts.push_back(mem.flat);
  }
  uint64_t candidates = 0;
  LocalityAssignment a{r, delta, std::vector<GroundSubset>(n, GroundSubset(n))};
  GroundSubset pending = GroundSubset::full(n);
  for (int size = delta; size <= limit && !pending.empty(); ++size) {
    std::unordered_set<GroundSubset> valid;
    for (const auto& f : hosts) {
      if (f.size() < size || !f.intersects(pending)) continue;
      candidates += binomial_capped(f.size(), size, kLocalityCandidateCap);
      if (candidates >= kLocalityCandidateCap) {
        throw CapacityError("locality search exceeds " + std::to_string(kLocalityCandidateCap) +
                            " candidate sets");
      }
      for_each_subset_of_size(f, size, [&](const GroundSubset& s) {
        if (s.intersects(pending) && !valid.count(s) && is_locality_set(m, s, r, delta)) {
          valid.insert(s);
        }
        return true;
      });
    }
    std::vector<GroundSubset> ordered(valid.begin(), valid.end());
    std::sort(ordered.begin(), ordered.end(), CanonicalLess{});
    for (const auto& s : ordered) {
      (s & pending).for_each([&](int x) { a.sets[x] = s; });
      pending -= s;
    }
  }
  if (!pending.empty()) return std::nullopt;
  return a;
}

/// Smallest r with an (r, delta)-locality assignment, or nullopt if none
/// exists even at r = k. Tries r upward so that only low-rank cyclic flats
/// host candidates while the answer is small.
inline std::optional<int> minimal_r(const Matroid& m, int delta) {
  const int k = m.full_rank();
  for (int r = 1; r <= k; ++r) {
    if (has_locality(m, r, delta)) return r;
  }
  return std::nullopt;
}

/// n - k + 1 - (ceil(k/r) - 1)(delta - 1).
inline int singleton_bound(int n, int k, int r, int delta) {
  if (k < 1 || r < 1 || delta < 2) {
    throw DomainError("singleton bound needs k >= 1, r >= 1, delta >= 2");
  }
  return n - k + 1 - (ceil_div(k, r) - 1) * (delta - 1);
}

struct AuxBoundsResult {
  bool ok = true;
  std::vector<std::string> reasons;  // one entry per failed bound
};

/// Parameter-level bounds k <= n - ceil(k/r)(delta - 1) and
/// k/n <= r/(r + delta - 1).
inline AuxBoundsResult aux_bounds_ok(int n, int k, int r, int delta) {
  if (k < 1 || r < 1 || delta < 2 || n < 1) {
    throw DomainError("bounds need n, k, r >= 1 and delta >= 2");
  }
  AuxBoundsResult res;
  const int rhs = n - ceil_div(k, r) * (delta - 1);
  if (k > rhs) {
    res.ok = false;
    res.reasons.push_back("k = " + std::to_string(k) + " exceeds n - ceil(k/r)(delta-1) = " +
                          std::to_string(rhs));
  }
  if (static_cast<long>(k) * (r + delta - 1) > static_cast<long>(n) * r) {
    res.ok = false;
    res.reasons.push_back("rate k/n exceeds r/(r+delta-1)");
  }
  if (r > k) {
    res.ok = false;
    res.reasons.push_back("r exceeds k");
  }
  return res;
}

/// d meets the generalized Singleton bound, given a verified assignment.
inline bool is_perfect(const Matroid& m, const LocalityAssignment& a) {
  if (!verify_locality(m, a)) return false;
  return min_distance(m) ==
         singleton_bound(m.ground_size(), m.full_rank(), a.r, a.delta);
}

/// False when the matroid has no (r, delta)-locality at all.
inline bool is_perfect(const Matroid& m, int r, int delta) {
  auto a = has_locality(m, r, delta);
  return a && is_perfect(m, *a);
}

struct StructureCheck {
  std::string name;
  bool passed = true;
  int instances = 0;
  std::string first_failure;
};

struct StructureReport {
  bool applicable = false;
  std::string reason;  // why not applicable
  bool perfect = false;
  std::vector<StructureCheck> checks;

  bool all_passed() const {
    return applicable && std::all_of(checks.begin(), checks.end(),
                                     [](const StructureCheck& c) { return c.passed; });
  }
  const StructureCheck* find(const std::string& name) const {
    for (const auto& c : checks) {
      if (c.name == name) return &c;
    }
    return nullptr;
  }
};

inline constexpr uint64_t kStructureFamilyCap = 2'000'000;

/// Necessary structure of a perfect matroid with r < k, evaluated on the
/// distinct sets of a locality assignment. With h = ceil(k/r), for every
/// subfamily F_1..F_j (j <= h) with non-trivial union U and join J:
///   nullity(J) = j(delta-1) and J = U and rank(J) = |U| - j(delta-1) when j < h,
///   nullity(J) = n-k and J = E and rank(J) = k when j = h,
///   |F_l & (U - F_l)| <= |F_l| - delta for each member F_l,
/// and for j = h, k <= |U'| + |F_l| - h(delta-1) - |U' & F_l| with U' = U - F_l.
inline StructureReport check_structure(const Matroid& m, const LocalityAssignment& a) {
  StructureReport rep;
  const int n = m.ground_size();
  const int k = m.full_rank();
  if (k == 0 || a.r >= k) {
    rep.reason = "requires 0 < r < k";
    return rep;
  }
  if (!verify_locality(m, a)) {
    rep.reason = "assignment is not a valid (r,delta)-locality";
    return rep;
  }
  if (!is_perfect(m, a)) {
    rep.reason = "matroid is not perfect for (r,delta)";
    return rep;
  }
  rep.applicable = true;
  rep.perfect = true;
  const int delta = a.delta;
  const int h = ceil_div(k, a.r);
  const GroundSubset full = GroundSubset::full(n);

  auto check = [&](const std::string& name) -> StructureCheck& {
    for (auto& c : rep.checks) {
      if (c.name == name) return c;
    }
    rep.checks.push_back({name, true, 0, ""});
    return rep.checks.back();
  };
  auto record = [&](const std::string& name, bool ok, const std::string& what) {
    auto& c = check(name);
    ++c.instances;
    if (!ok && c.passed) {
      c.passed = false;
      c.first_failure = what;
    }
  };

  record("zero_is_empty", closure(m, GroundSubset(n)).empty(), "cl(empty) is non-empty");

  const auto sets = a.distinct();
  for (const auto& s : sets) {
    record("nullity_is_delta_minus_one", nullity(m, s) == delta - 1, s.to_string());
    bool atom = is_flat(m, s) && is_cyclic(m, s);
    if (atom) {
      // Atom of Z iff M|S is uniform of rank strictly between 0 and |S|.
      const int rs = m.rank(s);
      atom = rs > 0 && rs < s.size();
      for_each_subset_of_size(s, rs, [&](const GroundSubset& x) {
        if (m.rank(x) != rs) atom = false;
        return atom;
      });
    }
    record("locality_set_is_atom", atom, s.to_string());
  }

  const int count = static_cast<int>(sets.size());
  if (count > 64) throw CapacityError("more than 64 distinct locality sets");
  uint64_t families = 0;
  std::vector<int> pick;
  auto visit = [&](auto&& self, int start) -> void {
    if (!pick.empty()) {
      if (++families > kStructureFamilyCap) {
        throw CapacityError("structure check exceeds " + std::to_string(kStructureFamilyCap) +
                            " subfamilies");
      }
      const int j = static_cast<int>(pick.size());
      GroundSubset u(n);
      for (int i : pick) u |= sets[i];
      bool nontrivial = true;
      for (int l : pick) {
        GroundSubset rest(n);
        for (int i : pick) {
          if (i != l) rest |= sets[i];
        }
        if (sets[l].is_subset_of(rest)) nontrivial = false;
      }
      if (nontrivial) {
        const GroundSubset join = closure(m, u);
        const int rj = m.rank(join);
        const int nj = join.size() - rj;
        std::string tag = "j=" + std::to_string(j) + " union " + u.to_string();
        if (j < h) {
          record("join_nullity", nj == j * (delta - 1), tag);
          record("join_is_union", join == u, tag);
          record("join_rank", rj == u.size() - j * (delta - 1), tag);
        } else {
          record("join_nullity", nj == n - k && n - k >= h * (delta - 1), tag);
          record("join_is_union", join == full, tag);
          record("join_rank", rj == k, tag);
        }
        for (int l : pick) {
          GroundSubset rest(n);
          for (int i : pick) {
            if (i != l) rest |= sets[i];
          }
          const int overlap = (rest & sets[l]).size();
          record("intersection_bound", overlap <= sets[l].size() - delta, tag);
          if (j == h) {
            record("rank_budget",
                   k <= rest.size() + sets[l].size() - h * (delta - 1) - overlap, tag);
          }
        }
      }
      if (j == h) return;
    }
    for (int i = start; i < count; ++i) {
      pick.push_back(i);
      self(self, i + 1);
      pick.pop_back();
    }
  };
  visit(visit, 0);
  return rep;
}

/// (n, k, d) of a matroid; the locality pair is left unset.
inline LrcParams params_of(const Matroid& m) {
  LrcParams p;
  p.n = m.ground_size();
  p.k = m.full_rank();
  p.d = min_distance(m);
  return p;
}

}  // namespace lrcm
