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

// Inputs to the combinatorial constructions: a family of flats with local
// ranks plus a global rank, and a weighted graph describing how equal-sized
// blocks overlap.

#pragma once

#include <algorithm>
#include <array>
#include <deque>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "lrcm/error.hpp"
#include "lrcm/subset.hpp"

namespace lrcm {

struct Flat {
  GroundSubset elements;
  int rank = 0;

  int nullity() const { return elements.size() - rank; }
  friend bool operator==(const Flat&, const Flat&) = default;
};

/// Flats F_1..F_m over E = [n] with ranks, and the target rank k of E.
struct SetSystem {
  int n = 0;
  int k = 0;
  std::vector<Flat> flats;

  int m() const { return static_cast<int>(flats.size()); }

  /// F_J for J given as a bitmask over flat indices (m <= 64).
  GroundSubset union_of(uint64_t j_mask) const {
    GroundSubset u(n);
    for (int i = 0; i < m(); ++i) {
      if ((j_mask >> i) & 1) u |= flats[i].elements;
    }
    return u;
  }

  friend bool operator==(const SetSystem&, const SetSystem&) = default;
};

struct ConditionFailure {
  std::string condition;  // "(i)".."(iv)"
  std::string detail;
};

/// First violated condition among
///   (i)   0 < rank(F_i) < |F_i|,
///   (ii)  the flats cover E,
///   (iii) k <= |E| + sum(rank(F_i) - |F_i|),
///   (iv)  |F_I & F_j| < rank(F_j) for j not in I.
/// (iv) is tested with I = [m] - {j}, which dominates every smaller I.
inline std::optional<ConditionFailure> find_violation(const SetSystem& sys) {
  if (sys.n < 0 || sys.n > GroundSubset::kMaxUniverse) {
    return ConditionFailure{"(ii)", "ground size " + std::to_string(sys.n) + " unsupported"};
  }
  if (sys.m() > 64) return ConditionFailure{"(i)", "more than 64 flats"};
  if (sys.k < 0) return ConditionFailure{"(iii)", "negative k"};
  for (int i = 0; i < sys.m(); ++i) {
    const auto& f = sys.flats[i];
    if (f.elements.universe() != sys.n) {
      return ConditionFailure{"(ii)", "flat " + std::to_string(i) + " not over [n]"};
    }
    if (!(0 < f.rank && f.rank < f.elements.size())) {
      return ConditionFailure{"(i)", "flat " + std::to_string(i) + " has rank " +
                                         std::to_string(f.rank) + " and size " +
                                         std::to_string(f.elements.size())};
    }
  }
  GroundSubset cover(sys.n);
  long budget = 0;
  for (const auto& f : sys.flats) {
    cover |= f.elements;
    budget += f.rank - f.elements.size();
  }
  if (cover != GroundSubset::full(sys.n)) {
    return ConditionFailure{"(ii)", "elements " + (GroundSubset::full(sys.n) - cover).to_string() +
                                        " are not covered"};
  }
  budget += sys.n;
  if (sys.k > budget) {
    return ConditionFailure{"(iii)", "k = " + std::to_string(sys.k) + " exceeds " +
                                         std::to_string(budget)};
  }
  for (int j = 0; j < sys.m(); ++j) {
    GroundSubset others(sys.n);
    for (int i = 0; i < sys.m(); ++i) {
      if (i != j) others |= sys.flats[i].elements;
    }
    const int overlap = (others & sys.flats[j].elements).size();
    if (overlap >= sys.flats[j].rank) {
      return ConditionFailure{"(iv)", "flat " + std::to_string(j) + " meets the others in " +
                                          std::to_string(overlap) + " elements, rank is " +
                                          std::to_string(sys.flats[j].rank)};
    }
  }
  return std::nullopt;
}

inline void require_conditions(const SetSystem& sys) {
  if (auto f = find_violation(sys)) throw ValidationError(f->condition, f->detail);
}

struct WeightedEdge {
  int u = 0;  // u < v
  int v = 0;
  int gamma = 1;
  friend bool operator==(const WeightedEdge&, const WeightedEdge&) = default;
};

/// Simple undirected graph on vertices 0..m-1 with positive edge weights.
class WeightedGraph {
 public:
  WeightedGraph() = default;

  /// Endpoints are normalized to u < v. Throws FormatError on loops,
  /// duplicate edges, out-of-range vertices, or weights below 1.
  WeightedGraph(int m, std::vector<WeightedEdge> edges) : m_(m), edges_(std::move(edges)) {
    if (m < 0) throw FormatError("negative vertex count");
    for (auto& e : edges_) {
      if (e.u > e.v) std::swap(e.u, e.v);
      if (e.u < 0 || e.v >= m_) throw FormatError("edge endpoint outside [0, m)");
      if (e.u == e.v) throw FormatError("loop at vertex " + std::to_string(e.u));
      if (e.gamma < 1) throw FormatError("edge weight below 1");
    }
    std::sort(edges_.begin(), edges_.end(), [](const WeightedEdge& a, const WeightedEdge& b) {
      return a.u != b.u ? a.u < b.u : a.v < b.v;
    });
    for (size_t i = 1; i < edges_.size(); ++i) {
      if (edges_[i].u == edges_[i - 1].u && edges_[i].v == edges_[i - 1].v) {
        throw FormatError("duplicate edge {" + std::to_string(edges_[i].u) + "," +
                          std::to_string(edges_[i].v) + "}");
      }
    }
  }

  int m() const noexcept { return m_; }
  const std::vector<WeightedEdge>& edges() const noexcept { return edges_; }

  int total_weight() const {
    int b = 0;
    for (const auto& e : edges_) b += e.gamma;
    return b;
  }

  /// Sum of weights of edges incident to vertex i.
  int incident_weight(int i) const {
    int s = 0;
    for (const auto& e : edges_) {
      if (e.u == i || e.v == i) s += e.gamma;
    }
    return s;
  }

  /// Sum of weights of edges with both ends in the vertex mask (m <= 64).
  int induced_weight(uint64_t vertex_mask) const {
    int s = 0;
    for (const auto& e : edges_) {
      if (((vertex_mask >> e.u) & 1) && ((vertex_mask >> e.v) & 1)) s += e.gamma;
    }
    return s;
  }

  std::optional<int> weight(int u, int v) const {
    if (u > v) std::swap(u, v);
    for (const auto& e : edges_) {
      if (e.u == u && e.v == v) return e.gamma;
    }
    return std::nullopt;
  }

  /// Some triangle {a,b,c} with a < b < c, if one exists.
  std::optional<std::array<int, 3>> find_triangle() const {
    for (const auto& e : edges_) {
      for (int c = e.v + 1; c < m_; ++c) {
        if (weight(e.u, c) && weight(e.v, c)) return std::array<int, 3>{e.u, e.v, c};
      }
    }
    return std::nullopt;
  }

  /// Length of a shortest cycle, or nullopt for a forest.
  std::optional<int> girth() const {
    std::vector<std::vector<int>> adj(m_);
    for (const auto& e : edges_) {
      adj[e.u].push_back(e.v);
      adj[e.v].push_back(e.u);
    }
    int best = std::numeric_limits<int>::max();
    for (int s = 0; s < m_; ++s) {
      std::vector<int> dist(m_, -1), parent(m_, -1);
      std::deque<int> queue{s};
      dist[s] = 0;
      while (!queue.empty()) {
        const int x = queue.front();
        queue.pop_front();
        for (int y : adj[x]) {
          if (dist[y] < 0) {
            dist[y] = dist[x] + 1;
            parent[y] = x;
            queue.push_back(y);
          } else if (parent[x] != y) {
            best = std::min(best, dist[x] + dist[y] + 1);
          }
        }
      }
    }
    if (best == std::numeric_limits<int>::max()) return std::nullopt;
    return best;
  }

  friend bool operator==(const WeightedGraph&, const WeightedGraph&) = default;

 private:
  int m_ = 0;
  std::vector<WeightedEdge> edges_;
};

}  // namespace lrcm
