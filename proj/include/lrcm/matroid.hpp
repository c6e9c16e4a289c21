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

// A matroid is a rank oracle on the subsets of E = [n]. Each instance owns
// exactly one backing; derived operations only ever call rank().

#pragma once

#include <atomic>
#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "lrcm/error.hpp"
#include "lrcm/field.hpp"
#include "lrcm/gammoid.hpp"
#include "lrcm/lattice.hpp"
#include "lrcm/subset.hpp"

namespace lrcm {

/// Exhaustive operations (circuits, cyclic flats, rank tables) refuse larger
/// ground sets.
inline constexpr int kExhaustiveLimit = 20;
/// validate_rank_axioms refuses larger ground sets.
inline constexpr int kAxiomCheckLimit = 16;

enum class Backing { kUniform, kLattice, kMatrix, kGammoid, kRestriction };

inline const char* backing_name(Backing b) {
  switch (b) {
    case Backing::kUniform:
      return "uniform";
    case Backing::kLattice:
      return "lattice";
    case Backing::kMatrix:
      return "matrix";
    case Backing::kGammoid:
      return "gammoid";
    case Backing::kRestriction:
      return "restriction";
  }
  return "?";
}

class Matroid {
 public:
  struct UniformRank {
    int k;
  };
  struct RestrictionOf {
    std::shared_ptr<const Matroid> parent;
    GroundSubset carrier;     // in the parent's universe
    std::vector<int> to_parent;  // child index -> parent index, ascending
  };

  static Matroid uniform(int n, int k) {
    if (k < 0 || k > n) throw DomainError("uniform rank k=" + std::to_string(k) + " outside [0, n]");
    return Matroid(n, UniformRank{k});
  }

  /// No axiom check; use matroid_from_lattice for untrusted input.
  static Matroid from_lattice_unchecked(CyclicFlatLattice z) {
    const int n = z.ground_size();
    return Matroid(n, std::move(z));
  }

  /// Lattice backing that remembers the set system it was built from; the
  /// caller guarantees construction_lattice(origin) == z.
  static Matroid from_construction(CyclicFlatLattice z, SetSystem origin) {
    const int n = z.ground_size();
    Matroid m(n, std::move(z));
    std::const_pointer_cast<Impl>(m.impl_)->origin = std::move(origin);
    return m;
  }

  static Matroid from_matrix(FieldMatrix a) {
    const int n = a.cols();
    return Matroid(n, std::move(a));
  }

  static Matroid from_gammoid(GammoidGraph g) {
    const int n = g.n;
    return Matroid(n, std::move(g));
  }

  int ground_size() const noexcept { return impl_->n; }

  Backing backing() const noexcept { return static_cast<Backing>(impl_->backing.index()); }

  int rank(const GroundSubset& x) const {
    if (x.universe() != impl_->n) {
      throw DomainError("subset over universe " + std::to_string(x.universe()) +
                        " passed to matroid on " + std::to_string(impl_->n) + " elements");
    }
    if (impl_->n <= kExhaustiveLimit && backing() != Backing::kUniform) {
      auto* memo = impl_->memo_table();
      const uint64_t idx = x.low_word();
      const int8_t cached = memo[idx].load(std::memory_order_relaxed);
      if (cached >= 0) return cached;
      const int r = compute_rank(x);
      memo[idx].store(static_cast<int8_t>(r), std::memory_order_relaxed);
      return r;
    }
    return compute_rank(x);
  }

  int full_rank() const { return rank(GroundSubset::full(impl_->n)); }

  const CyclicFlatLattice* lattice() const { return std::get_if<CyclicFlatLattice>(&impl_->backing); }
  const FieldMatrix* matrix() const { return std::get_if<FieldMatrix>(&impl_->backing); }
  const GammoidGraph* gammoid() const { return std::get_if<GammoidGraph>(&impl_->backing); }
  std::optional<int> uniform_rank() const {
    if (auto* u = std::get_if<UniformRank>(&impl_->backing)) return u->k;
    return std::nullopt;
  }
  /// Set system behind a constructed matroid, if known.
  const SetSystem* origin() const { return impl_->origin ? &*impl_->origin : nullptr; }
  const RestrictionOf* restriction_info() const {
    return std::get_if<RestrictionOf>(&impl_->backing);
  }

  /// M|carrier with elements re-indexed 0..|carrier|-1 in ascending order.
  Matroid restrict_to(const GroundSubset& carrier) const {
    if (carrier.universe() != impl_->n) {
      throw DomainError("restriction carrier not over this matroid's universe");
    }
    RestrictionOf r{std::make_shared<const Matroid>(*this), carrier, carrier.elements()};
    const int size = carrier.size();
    return Matroid(size, std::move(r));
  }

 private:
  using BackingVariant =
      std::variant<UniformRank, CyclicFlatLattice, FieldMatrix, GammoidGraph, RestrictionOf>;

  struct Impl {
    int n;
    BackingVariant backing;
    std::optional<SetSystem> origin;
    mutable std::once_flag memo_once;
    mutable std::unique_ptr<std::atomic<int8_t>[]> memo;

    Impl(int n_in, BackingVariant b) : n(n_in), backing(std::move(b)) {}

    // Concurrent readers may race to fill an entry; they write equal values.
    std::atomic<int8_t>* memo_table() const {
      std::call_once(memo_once, [&] {
        const size_t size = size_t{1} << n;
        memo.reset(new std::atomic<int8_t>[size]);
        for (size_t i = 0; i < size; ++i) memo[i].store(-1, std::memory_order_relaxed);
      });
      return memo.get();
    }
  };

  Matroid(int n, BackingVariant b) : impl_(std::make_shared<const Impl>(n, std::move(b))) {
    if (n < 0 || n > GroundSubset::kMaxUniverse) {
      throw CapacityError("ground set of " + std::to_string(n) + " elements unsupported");
    }
  }

  int compute_rank(const GroundSubset& x) const {
    struct Visitor {
      const GroundSubset& x;
      int operator()(const UniformRank& u) const { return std::min(x.size(), u.k); }
      int operator()(const CyclicFlatLattice& z) const {
        // rank(X) = min over cyclic flats F of rank(F) + |X - F|.
        int best = x.size();
        for (const auto& m : z.members()) {
          const int v = m.rank + (x - m.flat).size();
          if (v < best) best = v;
        }
        return best;
      }
      int operator()(const FieldMatrix& a) const { return matrix_rank(a, x); }
      int operator()(const GammoidGraph& g) const { return gammoid_rank(g, x); }
      int operator()(const RestrictionOf& r) const {
        GroundSubset y(r.carrier.universe());
        x.for_each([&](int e) { y.insert(r.to_parent[e]); });
        return r.parent->rank(y);
      }
    };
    return std::visit(Visitor{x}, impl_->backing);
  }

  std::shared_ptr<const Impl> impl_;
};

inline Matroid uniform_matroid(int n, int k) { return Matroid::uniform(n, k); }

inline int rank(const Matroid& m, const GroundSubset& x) { return m.rank(x); }

inline int nullity(const Matroid& m, const GroundSubset& x) { return x.size() - m.rank(x); }

inline bool is_independent(const Matroid& m, const GroundSubset& x) { return m.rank(x) == x.size(); }

/// cl(X) = {e : rank(X + e) = rank(X)}.
inline GroundSubset closure(const Matroid& m, const GroundSubset& x) {
  const int r = m.rank(x);
  GroundSubset cl = x;
  for (int e = 0; e < m.ground_size(); ++e) {
    if (!x.contains(e) && m.rank(x.with(e)) == r) cl.insert(e);
  }
  return cl;
}

inline bool is_flat(const Matroid& m, const GroundSubset& x) { return closure(m, x) == x; }

/// X is cyclic iff no element of X is a coloop of M|X.
inline bool is_cyclic(const Matroid& m, const GroundSubset& x) {
  const int r = m.rank(x);
  bool cyclic = true;
  x.for_each([&](int e) {
    if (cyclic && m.rank(x.without(e)) != r) cyclic = false;
  });
  return cyclic;
}

inline void require_exhaustive(int n, int limit, const char* what) {
  if (n > limit) {
    throw CapacityError(std::string(what) + " is exhaustive and capped at n <= " +
                        std::to_string(limit) + " (got " + std::to_string(n) + ")");
  }
}

/// rank of every subset, indexed by bit pattern.
inline std::vector<int8_t> rank_table(const Matroid& m) {
  const int n = m.ground_size();
  require_exhaustive(n, kExhaustiveLimit, "rank table");
  std::vector<int8_t> t(size_t{1} << n);
  for (uint64_t mask = 0; mask < t.size(); ++mask) {
    t[mask] = static_cast<int8_t>(m.rank(GroundSubset::from_mask(n, mask)));
  }
  return t;
}

/// Minimal dependent sets in canonical order.
inline std::vector<GroundSubset> circuits(const Matroid& m) {
  const int n = m.ground_size();
  require_exhaustive(n, kExhaustiveLimit, "circuit enumeration");
  const auto t = rank_table(m);
  std::vector<GroundSubset> out;
  for (uint64_t mask = 1; mask < t.size(); ++mask) {
    const int size = std::popcount(mask);
    if (t[mask] != size - 1) continue;  // a circuit has rank |C| - 1
    bool minimal = true;
    for (uint64_t bits = mask; bits && minimal; bits &= bits - 1) {
      const uint64_t sub = mask & ~(bits & -bits);
      if (t[sub] != size - 1) minimal = false;
    }
    if (minimal) out.push_back(GroundSubset::from_mask(n, mask));
  }
  std::sort(out.begin(), out.end(), CanonicalLess{});
  return out;
}

/// Cyclic flats by testing every subset for being closed and cyclic.
inline CyclicFlatLattice cyclic_flats_exhaustive(const Matroid& m) {
  const int n = m.ground_size();
  require_exhaustive(n, kExhaustiveLimit, "cyclic flat enumeration");
  const auto t = rank_table(m);
  std::vector<LatticeMember> members;
  for (uint64_t mask = 0; mask < t.size(); ++mask) {
    bool ok = true;
    for (int e = 0; e < n && ok; ++e) {
      const uint64_t bit = uint64_t{1} << e;
      if (mask & bit) {
        ok = t[mask & ~bit] == t[mask];  // e is not a coloop of M|X
      } else {
        ok = t[mask | bit] > t[mask];  // e is outside the closure
      }
    }
    if (ok) members.push_back({GroundSubset::from_mask(n, mask), t[mask]});
  }
  return CyclicFlatLattice(n, std::move(members));
}

/// The lattice of cyclic flats. Lattice-backed matroids return their stored
/// lattice, uniform ones {0_Z, 1_Z}; other backings enumerate exhaustively.
inline CyclicFlatLattice cyclic_flats(const Matroid& m) {
  const int n = m.ground_size();
  if (const auto* z = m.lattice()) return *z;
  if (auto k = m.uniform_rank()) {
    const auto empty = GroundSubset(n);
    const auto full = GroundSubset::full(n);
    if (*k == 0) return CyclicFlatLattice(n, {{full, 0}});
    if (*k == n) return CyclicFlatLattice(n, {{empty, 0}});
    return CyclicFlatLattice(n, {{empty, 0}, {full, *k}});
  }
  if (const auto* r = m.restriction_info()) {
    // Restricting to a cyclic flat F keeps exactly the cyclic flats inside F.
    if (const auto* pz = r->parent->lattice(); pz && pz->contains(r->carrier)) {
      std::vector<int> to_child(r->carrier.universe(), -1);
      for (int i = 0; i < static_cast<int>(r->to_parent.size()); ++i) to_child[r->to_parent[i]] = i;
      std::vector<LatticeMember> members;
      for (const auto& mem : pz->members()) {
        if (!mem.flat.is_subset_of(r->carrier)) continue;
        GroundSubset f(n);
        mem.flat.for_each([&](int e) { f.insert(to_child[e]); });
        members.push_back({f, mem.rank});
      }
      return CyclicFlatLattice(n, std::move(members));
    }
  }
  return cyclic_flats_exhaustive(m);
}

inline Matroid restriction(const Matroid& m, const GroundSubset& x) { return m.restrict_to(x); }

struct RankViolation {
  std::string axiom;  // "R1", "R2" or "R3"
  GroundSubset x;
  GroundSubset y;  // R2: X + e; R3: the second set of the pair
};

struct RankAxiomReport {
  bool valid = true;
  uint64_t violation_count = 0;
  std::vector<RankViolation> violations;  // first kMaxListed instances
  static constexpr size_t kMaxListed = 64;
};

/// Exhaustive check of R1 (0 <= f(X) <= |X|), R2 (f(X) <= f(X + e)) and R3
/// in the local form f(X + a) + f(X + b) >= f(X + a + b) + f(X), which holds
/// for all a, b iff f is submodular on every pair of subsets.
template <class RankFn>
RankAxiomReport validate_rank_axioms(int n, RankFn&& f) {
  require_exhaustive(n, kAxiomCheckLimit, "rank axiom validation");
  const uint64_t total = uint64_t{1} << n;
  std::vector<int> t(total);
  for (uint64_t mask = 0; mask < total; ++mask) t[mask] = f(GroundSubset::from_mask(n, mask));
  RankAxiomReport rep;
  auto note = [&](const char* axiom, uint64_t x, uint64_t y) {
    rep.valid = false;
    ++rep.violation_count;
    if (rep.violations.size() < RankAxiomReport::kMaxListed) {
      rep.violations.push_back(
          {axiom, GroundSubset::from_mask(n, x), GroundSubset::from_mask(n, y)});
    }
  };
  for (uint64_t x = 0; x < total; ++x) {
    if (t[x] < 0 || t[x] > std::popcount(x)) note("R1", x, x);
  }
  for (uint64_t x = 0; x < total; ++x) {
    for (int e = 0; e < n; ++e) {
      const uint64_t xe = x | (uint64_t{1} << e);
      if (xe != x && t[x] > t[xe]) note("R2", x, xe);
    }
  }
  for (uint64_t x = 0; x < total; ++x) {
    for (int a = 0; a < n; ++a) {
      const uint64_t ba = uint64_t{1} << a;
      if (x & ba) continue;
      for (int b = a + 1; b < n; ++b) {
        const uint64_t bb = uint64_t{1} << b;
        if (x & bb) continue;
        if (t[x | ba] + t[x | bb] < t[x | ba | bb] + t[x]) note("R3", x | ba, x | bb);
      }
    }
  }
  return rep;
}

inline RankAxiomReport validate_rank_axioms(const Matroid& m) {
  return validate_rank_axioms(m.ground_size(), [&](const GroundSubset& x) { return m.rank(x); });
}

/// Validates Z0..Z3 first; throws ValidationError naming the first failure.
inline Matroid matroid_from_lattice(const CyclicFlatLattice& z) {
  const auto report = validate(z, /*stop_at_first=*/true);
  if (!report.valid) {
    const auto& v = *report.first();
    std::string w;
    for (const auto& s : v.witnesses) w += s.to_string() + " ";
    throw ValidationError(v.axiom, w + v.detail);
  }
  return Matroid::from_lattice_unchecked(z);
}

inline Matroid matroid_from_matrix(const FieldMatrix& a) { return Matroid::from_matrix(a); }

inline Matroid gammoid_matroid(const GammoidGraph& g) { return Matroid::from_gammoid(g); }

/// Element-wise rank agreement over all 2^n subsets.
inline bool same_rank_function(const Matroid& a, const Matroid& b) {
  if (a.ground_size() != b.ground_size()) return false;
  const int n = a.ground_size();
  require_exhaustive(n, kExhaustiveLimit, "rank comparison");
  for (uint64_t mask = 0; mask < (uint64_t{1} << n); ++mask) {
    const auto x = GroundSubset::from_mask(n, mask);
    if (a.rank(x) != b.rank(x)) return false;
  }
  return true;
}

}  // namespace lrcm
