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

// Generator matrices over prime fields: code minimum distance and a seeded
// randomized search for linear representations. Every accepted matrix is
// certified on all 2^n subsets.

#pragma once

#include <atomic>
#include <cstdint>
#include <limits>
#include <optional>
#include <random>
#include <thread>
#include <vector>

#include "lrcm/construct.hpp"
#include "lrcm/error.hpp"
#include "lrcm/field.hpp"
#include "lrcm/gammoid.hpp"
#include "lrcm/matroid.hpp"

namespace lrcm {

/// Target size for exhaustive certification of a representation.
inline constexpr int kRepresentationLimit = 16;

inline constexpr uint64_t kDistanceScanCap = 50'000'000;

/// min{|X| : rank of the columns outside X is below rank(A)}, scanning X by
/// ascending size. Requires rank(A) >= 1.
inline int code_min_distance(const FieldMatrix& a) {
  const int n = a.cols();
  const int k = matrix_rank(a);
  if (k == 0) throw DomainError("d undefined: the code is zero");
  const GroundSubset all = GroundSubset::full(n);
  uint64_t visited = 0;
  for (int size = 1; size <= n; ++size) {
    bool hit = false;
    for_each_subset_of_size(all, size, [&](const GroundSubset& x) {
      if (++visited > kDistanceScanCap) {
        throw CapacityError("minimum distance scan exceeded " + std::to_string(kDistanceScanCap) +
                            " subsets");
      }
      if (matrix_rank(a, all - x) < k) {
        hit = true;
        return false;
      }
      return true;
    });
    if (hit) return size;
  }
  return n;  // unreachable: removing every column drops the rank
}

struct RepresentationResult {
  bool found = false;
  std::optional<FieldMatrix> matrix;
  long attempts = 0;
  uint64_t seed = 0;
  std::string sampler;  // "gammoid" or "uniform"
};

namespace detail {

/// Rank table of the target, compared against candidate column ranks.
inline bool certify(const FieldMatrix& g, const std::vector<int8_t>& target) {
  const int n = g.cols();
  for (uint64_t mask = 0; mask < target.size(); ++mask) {
    if (matrix_rank(g, GroundSubset::from_mask(n, mask)) != target[mask]) return false;
  }
  return true;
}

/// Layered gammoid structure for matroids whose lattice is exactly the one
/// built from its atoms, or that are gammoid-backed already.
inline std::optional<GammoidGraph> representation_structure(const Matroid& m) {
  if (const auto* g = m.gammoid()) return *g;
  if (m.uniform_rank()) return std::nullopt;
  // Flats of rank >= k leave no trace in the lattice; prefer the origin.
  if (const auto* sys = m.origin()) return build_graph(*sys);
  std::optional<CyclicFlatLattice> z;
  if (const auto* lz = m.lattice()) {
    z = *lz;
  } else {
    z = cyclic_flats(m);
  }
  const auto bottom = z->bottom();
  if (!bottom || !bottom->empty()) return std::nullopt;
  SetSystem sys{m.ground_size(), m.full_rank(), {}};
  for (const auto& atom : atoms(*z)) sys.flats.push_back({atom, z->rank_of(atom)});
  if (sys.m() > 64 || find_violation(sys)) return std::nullopt;
  if (construction_lattice(sys).members() != z->members()) return std::nullopt;
  return build_graph(sys);
}

/// G = R * A: A has a random nonzero entry at (u, e) for every arc e -> u,
/// R is a uniformly random k x |H| matrix.
inline FieldMatrix sample_gammoid_matrix(const GammoidGraph& g, const PrimeField& f, int k,
                                         std::mt19937_64& rng) {
  const int h = static_cast<int>(g.middle.size());
  std::uniform_int_distribution<uint32_t> any(0, f.modulus() - 1);
  std::uniform_int_distribution<uint32_t> nonzero(1, f.modulus() - 1);
  std::vector<std::vector<uint32_t>> a(h, std::vector<uint32_t>(g.n, 0));
  for (int e = 0; e < g.n; ++e) {
    for (int u : g.arcs[e]) a[u][e] = nonzero(rng);
  }
  FieldMatrix out(f, k, g.n);
  for (int i = 0; i < k; ++i) {
    std::vector<uint32_t> row(h);
    for (auto& v : row) v = any(rng);
    for (int e = 0; e < g.n; ++e) {
      uint32_t acc = 0;
      for (int u = 0; u < h; ++u) {
        if (a[u][e] != 0) acc = f.add(acc, f.mul(row[u], a[u][e]));
      }
      out.set(i, e, acc);
    }
  }
  return out;
}

inline FieldMatrix sample_uniform_matrix(const PrimeField& f, int k, int n, std::mt19937_64& rng) {
  std::uniform_int_distribution<uint32_t> any(0, f.modulus() - 1);
  FieldMatrix out(f, k, n);
  for (int i = 0; i < k; ++i) {
    for (int e = 0; e < n; ++e) out.set(i, e, any(rng));
  }
  return out;
}

}  // namespace detail

/// Seeded search for a k x n matrix over GF(p) whose column matroid equals m.
/// Attempt i draws from its own generator seeded with (seed, i); with several
/// jobs the lowest successful attempt index still wins. A negative outcome
/// within the budget says nothing about representability.
inline RepresentationResult find_representation(const Matroid& m, uint32_t p, uint64_t seed,
                                                long max_attempts = 10'000, int jobs = 1) {
  const int n = m.ground_size();
  require_exhaustive(n, kRepresentationLimit, "representation certificate");
  const PrimeField field(p);
  const int k = m.full_rank();
  const auto target = rank_table(m);

  RepresentationResult result;
  result.seed = seed;

  if (const auto* own = m.matrix(); own && own->field().modulus() == p && own->rows() == k) {
    if (detail::certify(*own, target)) {
      result.found = true;
      result.matrix = *own;
      result.sampler = "given";
      return result;
    }
  }

  const auto structure = detail::representation_structure(m);
  result.sampler = structure ? "gammoid" : "uniform";
  auto attempt = [&](long index) -> std::optional<FieldMatrix> {
    std::seed_seq seq{static_cast<uint32_t>(seed), static_cast<uint32_t>(seed >> 32),
                      static_cast<uint32_t>(index), static_cast<uint32_t>(index >> 32)};
    std::mt19937_64 rng(seq);
    FieldMatrix g = structure ? detail::sample_gammoid_matrix(*structure, field, k, rng)
                              : detail::sample_uniform_matrix(field, k, n, rng);
    if (detail::certify(g, target)) return g;
    return std::nullopt;
  };

  jobs = std::max(1, jobs);
  std::atomic<long> best{std::numeric_limits<long>::max()};
  std::vector<std::optional<FieldMatrix>> found_by(jobs);
  std::vector<long> index_by(jobs, -1);
  auto worker = [&](int w) {
    for (long i = w; i < max_attempts && i < best.load(); i += jobs) {
      if (auto g = attempt(i)) {
        found_by[w] = std::move(g);
        index_by[w] = i;
        long cur = best.load();
        while (i < cur && !best.compare_exchange_weak(cur, i)) {
        }
        return;
      }
    }
  };
  if (jobs == 1) {
    worker(0);
  } else {
    std::vector<std::thread> threads;
    for (int w = 0; w < jobs; ++w) threads.emplace_back(worker, w);
    for (auto& t : threads) t.join();
  }
  const long winner = best.load();
  if (winner == std::numeric_limits<long>::max()) {
    result.attempts = max_attempts;
    return result;
  }
  for (int w = 0; w < jobs; ++w) {
    if (index_by[w] == winner) result.matrix = std::move(found_by[w]);
  }
  result.found = true;
  result.attempts = winner + 1;
  return result;
}

struct FieldScanEntry {
  uint32_t p = 0;
  bool found = false;
  long attempts = 0;
};

inline std::vector<FieldScanEntry> min_field_scan(const Matroid& m, const std::vector<uint32_t>& primes,
                                                  uint64_t seed, long max_attempts = 10'000) {
  std::vector<FieldScanEntry> out;
  for (uint32_t p : primes) {
    const auto r = find_representation(m, p, seed, max_attempts);
    out.push_back({p, r.found, r.attempts});
  }
  return out;
}

}  // namespace lrcm
