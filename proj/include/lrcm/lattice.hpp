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

// The lattice of cyclic flats as a standalone object. A family Z of subsets of
// E with ranks is the set of cyclic flats of a matroid iff it satisfies
//
//   Z0  Z is a lattice under inclusion,
//   Z1  rank(0_Z) = 0,
//   Z2  X < Y  =>  0 < rank(Y) - rank(X) < |Y| - |X|,
//   Z3  rank(X) + rank(Y) >= rank(X v Y) + rank(X ^ Y) + |(X & Y) - (X ^ Y)|.

#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "lrcm/error.hpp"
#include "lrcm/subset.hpp"

namespace lrcm {

struct LatticeMember {
  GroundSubset flat;
  int rank = 0;

  friend bool operator==(const LatticeMember&, const LatticeMember&) = default;
};

class CyclicFlatLattice {
 public:
  /// Members are stored in canonical order. Throws FormatError on duplicate
  /// sets, an empty member list, or members from another universe.
  CyclicFlatLattice(int n, std::vector<LatticeMember> members) : n_(n), members_(std::move(members)) {
    if (members_.empty()) throw FormatError("lattice has no members");
    for (const auto& m : members_) {
      if (m.flat.universe() != n_) {
        throw FormatError("member " + m.flat.to_string() + " not over universe of size " +
                          std::to_string(n_));
      }
    }
    std::sort(members_.begin(), members_.end(), [](const LatticeMember& a, const LatticeMember& b) {
      return CanonicalLess{}(a.flat, b.flat);
    });
    for (size_t i = 1; i < members_.size(); ++i) {
      if (members_[i].flat == members_[i - 1].flat) {
        throw FormatError("duplicate lattice member " + members_[i].flat.to_string());
      }
    }
  }

  int ground_size() const noexcept { return n_; }
  const std::vector<LatticeMember>& members() const noexcept { return members_; }
  size_t size() const noexcept { return members_.size(); }

  /// Index of `flat` among the members, or nullopt.
  std::optional<size_t> find(const GroundSubset& flat) const {
    auto it = std::lower_bound(members_.begin(), members_.end(), flat,
                               [](const LatticeMember& m, const GroundSubset& f) {
                                 return CanonicalLess{}(m.flat, f);
                               });
    if (it != members_.end() && it->flat == flat) return static_cast<size_t>(it - members_.begin());
    return std::nullopt;
  }

  bool contains(const GroundSubset& flat) const { return find(flat).has_value(); }

  int rank_of(const GroundSubset& flat) const {
    auto i = find(flat);
    if (!i) throw DomainError(flat.to_string() + " is not a lattice member");
    return members_[*i].rank;
  }

  /// The unique member contained in every member, if any.
  std::optional<GroundSubset> bottom() const {
    const GroundSubset& cand = members_.front().flat;  // smallest cardinality
    for (const auto& m : members_) {
      if (!cand.is_subset_of(m.flat)) return std::nullopt;
    }
    return cand;
  }

  /// The unique member containing every member, if any.
  std::optional<GroundSubset> top() const {
    const GroundSubset& cand = members_.back().flat;
    for (const auto& m : members_) {
      if (!m.flat.is_subset_of(cand)) return std::nullopt;
    }
    return cand;
  }

  friend bool operator==(const CyclicFlatLattice&, const CyclicFlatLattice&) = default;

 private:
  int n_;
  std::vector<LatticeMember> members_;
};

namespace detail {

// Greatest member below both a and b (or least above both), by scanning.
inline std::optional<GroundSubset> scan_meet(const CyclicFlatLattice& z, const GroundSubset& a,
                                             const GroundSubset& b) {
  const GroundSubset both = a & b;
  std::optional<GroundSubset> best;
  for (const auto& m : z.members()) {
    if (m.flat.is_subset_of(both) && (!best || best->size() < m.flat.size())) best = m.flat;
  }
  if (!best) return std::nullopt;
  for (const auto& m : z.members()) {
    if (m.flat.is_subset_of(both) && !m.flat.is_subset_of(*best)) return std::nullopt;
  }
  return best;
}

inline std::optional<GroundSubset> scan_join(const CyclicFlatLattice& z, const GroundSubset& a,
                                             const GroundSubset& b) {
  const GroundSubset either = a | b;
  std::optional<GroundSubset> best;
  for (const auto& m : z.members()) {
    if (either.is_subset_of(m.flat) && (!best || m.flat.size() < best->size())) best = m.flat;
  }
  if (!best) return std::nullopt;
  for (const auto& m : z.members()) {
    if (either.is_subset_of(m.flat) && !best->is_subset_of(m.flat)) return std::nullopt;
  }
  return best;
}

inline void require_member(const CyclicFlatLattice& z, const GroundSubset& x) {
  if (!z.contains(x)) throw DomainError(x.to_string() + " is not a lattice member");
}

}  // namespace detail

/// Greatest lower bound of two members within the lattice.
inline GroundSubset meet(const CyclicFlatLattice& z, const GroundSubset& a, const GroundSubset& b) {
  detail::require_member(z, a);
  detail::require_member(z, b);
  auto m = detail::scan_meet(z, a, b);
  if (!m) throw ValidationError("Z0", "no meet of " + a.to_string() + " and " + b.to_string());
  return *m;
}

/// Least upper bound of two members within the lattice.
inline GroundSubset join(const CyclicFlatLattice& z, const GroundSubset& a, const GroundSubset& b) {
  detail::require_member(z, a);
  detail::require_member(z, b);
  auto m = detail::scan_join(z, a, b);
  if (!m) throw ValidationError("Z0", "no join of " + a.to_string() + " and " + b.to_string());
  return *m;
}

/// Members covering 0_Z, in canonical order.
inline std::vector<GroundSubset> atoms(const CyclicFlatLattice& z) {
  auto zero = z.bottom();
  if (!zero) throw ValidationError("Z0", "lattice has no bottom element");
  std::vector<GroundSubset> out;
  for (const auto& x : z.members()) {
    if (x.flat == *zero) continue;
    bool covers = true;
    for (const auto& y : z.members()) {
      if (zero->is_proper_subset_of(y.flat) && y.flat.is_proper_subset_of(x.flat)) {
        covers = false;
        break;
      }
    }
    if (covers) out.push_back(x.flat);
  }
  return out;
}

/// Members covered by 1_Z, in canonical order.
inline std::vector<GroundSubset> coatoms(const CyclicFlatLattice& z) {
  auto one = z.top();
  if (!one) throw ValidationError("Z0", "lattice has no top element");
  std::vector<GroundSubset> out;
  for (const auto& x : z.members()) {
    if (x.flat == *one) continue;
    bool covered = true;
    for (const auto& y : z.members()) {
      if (x.flat.is_proper_subset_of(y.flat) && y.flat.is_proper_subset_of(*one)) {
        covered = false;
        break;
      }
    }
    if (covered) out.push_back(x.flat);
  }
  return out;
}

struct AxiomViolation {
  std::string axiom;  // "Z0".."Z3"
  std::vector<GroundSubset> witnesses;
  std::string detail;
};

struct AxiomReport {
  bool valid = true;
  std::vector<AxiomViolation> violations;

  const AxiomViolation* first() const { return violations.empty() ? nullptr : &violations.front(); }

  std::string to_string() const {
    if (valid) return "valid";
    std::string s;
    for (const auto& v : violations) {
      s += v.axiom + ":";
      for (const auto& w : v.witnesses) s += " " + w.to_string();
      if (!v.detail.empty()) s += " (" + v.detail + ")";
      s += "\n";
    }
    return s;
  }
};

/// Checks Z0 through Z3 in that order. With `stop_at_first`, returns after
/// the first violation; otherwise every violated instance is listed.
inline AxiomReport validate(const CyclicFlatLattice& z, bool stop_at_first = false) {
  AxiomReport report;
  const auto& ms = z.members();
  const size_t count = ms.size();
  auto add = [&](std::string axiom, std::vector<GroundSubset> w, std::string detail) {
    report.valid = false;
    report.violations.push_back({std::move(axiom), std::move(w), std::move(detail)});
    return stop_at_first;
  };

  // Z0: every pair has a unique greatest lower bound and least upper bound.
  std::vector<std::optional<GroundSubset>> meets(count * count), joins(count * count);
  for (size_t i = 0; i < count; ++i) {
    for (size_t j = i; j < count; ++j) {
      auto m = detail::scan_meet(z, ms[i].flat, ms[j].flat);
      auto u = detail::scan_join(z, ms[i].flat, ms[j].flat);
      meets[i * count + j] = meets[j * count + i] = m;
      joins[i * count + j] = joins[j * count + i] = u;
      if (!m && add("Z0", {ms[i].flat, ms[j].flat}, "no meet")) return report;
      if (!u && add("Z0", {ms[i].flat, ms[j].flat}, "no join")) return report;
    }
  }

  // Z1
  if (auto zero = z.bottom()) {
    const int r0 = z.rank_of(*zero);
    if (r0 != 0 && add("Z1", {*zero}, "rank(0_Z) = " + std::to_string(r0))) return report;
  }

  // Z2
  for (size_t i = 0; i < count; ++i) {
    for (size_t j = 0; j < count; ++j) {
      const auto& x = ms[i];
      const auto& y = ms[j];
      if (!x.flat.is_proper_subset_of(y.flat)) continue;
      const int dr = y.rank - x.rank;
      const int ds = y.flat.size() - x.flat.size();
      if (!(0 < dr && dr < ds)) {
        if (add("Z2", {x.flat, y.flat},
                "rank gap " + std::to_string(dr) + ", size gap " + std::to_string(ds))) {
          return report;
        }
      }
    }
  }

  // Z3
  for (size_t i = 0; i < count; ++i) {
    for (size_t j = i + 1; j < count; ++j) {
      const auto& m = meets[i * count + j];
      const auto& u = joins[i * count + j];
      if (!m || !u) continue;
      const auto& x = ms[i];
      const auto& y = ms[j];
      const int lhs = x.rank + y.rank;
      const int rhs = z.rank_of(*u) + z.rank_of(*m) + ((x.flat & y.flat) - *m).size();
      if (lhs < rhs) {
        if (add("Z3", {x.flat, y.flat},
                "lhs " + std::to_string(lhs) + " < rhs " + std::to_string(rhs))) {
          return report;
        }
      }
    }
  }
  return report;
}

}  // namespace lrcm
