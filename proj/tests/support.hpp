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

// Fixtures, seeded generators and brute-force oracles shared by the unit
// and acceptance suites. Oracles here never call into the code under test
// beyond the rank oracle they are checking.

#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "lrcm/io.hpp"
#include "lrcm/lrcm.hpp"

#ifndef LRCM_DATA_DIR
#error "LRCM_DATA_DIR must point at the data/ fixtures"
#endif

namespace lrcm::testing {

inline std::string data_path(const std::string& name) { return std::string(LRCM_DATA_DIR) + "/" + name; }

/// Subset from 1-based labels, as printed in the source material.
inline GroundSubset one_based(int n, std::initializer_list<int> labels) {
  GroundSubset s(n);
  for (int x : labels) s.insert(x - 1);
  return s;
}

inline FieldMatrix eq4_matrix() { return io::matrix_from_json(io::read_json_file(data_path("eq4_matrix.json"))); }

inline SetSystem three_clouds() {
  return io::set_system_from_json(io::read_json_file(data_path("three_clouds_system.json")));
}

inline SetSystem six_block_system() {
  return io::set_system_from_json(io::read_json_file(data_path("six_block_system.json")));
}

inline WeightedGraph six_block_graph() {
  return io::graph_from_json(io::read_json_file(data_path("six_block_graph.json")));
}

inline WeightedGraph theta_fixture() { return io::graph_from_json(io::read_json_file(data_path("theta_graph.json"))); }

inline std::vector<GroundSubset> cloud_sets() {
  return {one_based(12, {1, 2, 3, 7, 10}), one_based(12, {3, 4, 5, 8, 11}), one_based(12, {1, 5, 6, 9, 12})};
}

// ---------------------------------------------------------------------------
// Oracles.

/// Rank straight from a list of (flat, rank) pairs:
///   rank(X) = min over members F of rank(F) + |X - F|.
inline int lattice_formula_rank(const std::vector<LatticeMember>& members, const GroundSubset& x) {
  int best = x.size();
  for (const auto& m : members) best = std::min(best, m.rank + (x - m.flat).size());
  return best;
}

/// Gaussian elimination on a dense copy, written independently of
/// matrix_rank.
inline int dense_rank(const FieldMatrix& a, const GroundSubset& cols) {
  const uint64_t p = a.field().modulus();
  std::vector<std::vector<uint64_t>> rows;
  for (int c : cols.elements()) {
    std::vector<uint64_t> col(a.rows());
    for (int i = 0; i < a.rows(); ++i) col[i] = a.at(i, c);
    rows.push_back(col);
  }
  auto power = [p](uint64_t b, uint64_t e) {
    uint64_t r = 1;
    b %= p;
    while (e) {
      if (e & 1) r = r * b % p;
      b = b * b % p;
      e >>= 1;
    }
    return r;
  };
  int rank = 0;
  const int width = a.rows();
  for (int c = 0; c < width && rank < static_cast<int>(rows.size()); ++c) {
    int piv = -1;
    for (int i = rank; i < static_cast<int>(rows.size()); ++i) {
      if (rows[i][c] != 0) {
        piv = i;
        break;
      }
    }
    if (piv < 0) continue;
    std::swap(rows[rank], rows[piv]);
    const uint64_t inv = power(rows[rank][c], p - 2);
    for (int i = 0; i < static_cast<int>(rows.size()); ++i) {
      if (i == rank || rows[i][c] == 0) continue;
      const uint64_t factor = rows[i][c] * inv % p;
      for (int j = 0; j < width; ++j) rows[i][j] = (rows[i][j] + p - factor * rows[rank][j] % p) % p;
    }
    ++rank;
  }
  return rank;
}

/// Independence in the set-system matroid without lattices: X is
/// independent iff |X| <= k and |X & F_J| <= |F_J| - sum_{i in J} nullity(F_i)
/// for every nonempty J.
inline bool set_system_independent(const SetSystem& sys, const GroundSubset& x) {
  if (x.size() > sys.k) return false;
  for (uint64_t j = 1; j < (uint64_t{1} << sys.m()); ++j) {
    int eta = 0;
    for (int i = 0; i < sys.m(); ++i) {
      if ((j >> i) & 1) eta += sys.flats[i].nullity();
    }
    const GroundSubset u = sys.union_of(j);
    if ((x & u).size() > u.size() - eta) return false;
  }
  return true;
}

/// Rank as the largest independent subset, by exhaustive search.
template <class IndepFn>
inline int rank_by_independence(const GroundSubset& x, IndepFn&& indep) {
  int best = 0;
  const auto elems = x.elements();
  const int size = static_cast<int>(elems.size());
  for (uint64_t mask = 0; mask < (uint64_t{1} << size); ++mask) {
    const int c = std::popcount(mask);
    if (c <= best) continue;
    GroundSubset y(x.universe());
    for (int i = 0; i < size; ++i) {
      if ((mask >> i) & 1) y.insert(elems[i]);
    }
    if (indep(y)) best = c;
  }
  return best;
}

/// Cyclic flats recomputed from a rank table by definition: every element
/// outside X raises the rank, no element inside X lowers it.
inline std::vector<LatticeMember> cyclic_flats_from_table(int n, const std::vector<int>& table) {
  std::vector<LatticeMember> out;
  for (uint64_t mask = 0; mask < table.size(); ++mask) {
    bool ok = true;
    for (int e = 0; e < n && ok; ++e) {
      const uint64_t bit = uint64_t{1} << e;
      if (mask & bit) {
        ok = table[mask & ~bit] == table[mask];
      } else {
        ok = table[mask | bit] > table[mask];
      }
    }
    if (ok) out.push_back({GroundSubset::from_mask(n, mask), table[mask]});
  }
  std::sort(out.begin(), out.end(),
            [](const LatticeMember& a, const LatticeMember& b) { return CanonicalLess{}(a.flat, b.flat); });
  return out;
}

/// Brute-force d: n minus the largest set of rank below k.
inline int distance_from_table(int n, const std::vector<int>& table) {
  const int k = table.back();
  int largest = 0;
  for (uint64_t mask = 0; mask < table.size(); ++mask) {
    if (table[mask] < k) largest = std::max(largest, std::popcount(mask));
  }
  return n - largest;
}

inline std::vector<int> table_of(const Matroid& m) {
  const int n = m.ground_size();
  std::vector<int> t(size_t{1} << n);
  for (uint64_t mask = 0; mask < t.size(); ++mask) t[mask] = m.rank(GroundSubset::from_mask(n, mask));
  return t;
}

// ---------------------------------------------------------------------------
// Seeded generators.

inline FieldMatrix random_matrix(std::mt19937_64& rng, int k, int n, uint32_t p, int zero_percent = 30) {
  std::uniform_int_distribution<uint32_t> any(1, p - 1);
  std::uniform_int_distribution<int> pct(0, 99);
  FieldMatrix a(PrimeField(p), k, n);
  for (int i = 0; i < k; ++i) {
    for (int c = 0; c < n; ++c) a.set(i, c, pct(rng) < zero_percent ? 0 : any(rng));
  }
  return a;
}

/// A set system satisfying the construction's conditions, or nothing after
/// a bounded number of tries. Every flat owns at least two private elements,
/// so a rank strictly between its overlap and its size always exists.
inline std::optional<SetSystem> random_set_system(std::mt19937_64& rng, int n, int max_flats) {
  const int top = std::max(1, std::min(max_flats, n / 2));
  for (int tries = 0; tries < 200; ++tries) {
    // Single flats only give uniform matroids; keep them rare.
    const int m = (top == 1 || rng() % 8 == 0) ? 1 : std::uniform_int_distribution<int>(2, top)(rng);
    std::vector<GroundSubset> sets(m, GroundSubset(n));
    std::vector<int> order(n);
    for (int e = 0; e < n; ++e) order[e] = e;
    std::shuffle(order.begin(), order.end(), rng);
    std::uniform_int_distribution<int> pick(0, m - 1);
    for (int i = 0; i < n; ++i) sets[i < 2 * m ? i % m : pick(rng)].insert(order[i]);
    // Shared elements: a few extra memberships.
    if (m > 1) {
      const int extra = std::uniform_int_distribution<int>(0, n / 3)(rng);
      for (int t = 0; t < extra; ++t) sets[pick(rng)].insert(order[std::uniform_int_distribution<int>(0, n - 1)(rng)]);
    }
    SetSystem sys{n, 0, {}};
    bool ok = true;
    for (int j = 0; j < m && ok; ++j) {
      GroundSubset others(n);
      for (int i = 0; i < m; ++i) {
        if (i != j) others |= sets[i];
      }
      const int lo = (sets[j] & others).size() + 1;
      const int hi = sets[j].size() - 1;
      if (lo > hi) {
        ok = false;
        break;
      }
      sys.flats.push_back({sets[j], std::uniform_int_distribution<int>(lo, hi)(rng)});
    }
    if (!ok) continue;
    int budget = n;
    for (const auto& f : sys.flats) budget += f.rank - f.elements.size();
    if (budget < 1) continue;
    // Favour k near the budget, where the lattice is richest.
    const int lo_k = std::max(1, budget / 2);
    sys.k = std::uniform_int_distribution<int>(lo_k, budget)(rng);
    if (!find_violation(sys)) return sys;
  }
  return std::nullopt;
}

/// Seeded suite of valid set systems over at most `max_n` elements.
inline std::vector<SetSystem> set_system_suite(uint64_t seed, int count, int min_n, int max_n) {
  std::mt19937_64 rng(seed);
  std::vector<SetSystem> out;
  while (static_cast<int>(out.size()) < count) {
    const int n = std::uniform_int_distribution<int>(min_n, max_n)(rng);
    if (auto s = random_set_system(rng, n, 5)) out.push_back(*s);
  }
  return out;
}

/// A valid lattice from a seeded source: half from random matrices over
/// small primes, half from random set systems.
inline CyclicFlatLattice random_valid_lattice(std::mt19937_64& rng, int max_n) {
  const int n = std::uniform_int_distribution<int>(1, max_n)(rng);
  if (std::uniform_int_distribution<int>(0, 1)(rng) == 0 || n < 3) {
    static const uint32_t primes[] = {2, 3, 5, 7};
    const uint32_t p = primes[std::uniform_int_distribution<int>(0, 3)(rng)];
    const int k = std::uniform_int_distribution<int>(1, n)(rng);
    const int zeros = std::uniform_int_distribution<int>(0, 60)(rng);
    return cyclic_flats_exhaustive(Matroid::from_matrix(random_matrix(rng, k, n, p, zeros)));
  }
  if (auto s = random_set_system(rng, n, 3)) return construction_lattice(*s);
  return cyclic_flats_exhaustive(Matroid::uniform(n, std::uniform_int_distribution<int>(0, n)(rng)));
}

}  // namespace lrcm::testing
