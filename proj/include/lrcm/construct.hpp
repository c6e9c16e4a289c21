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

// Matroids with prescribed (n, k, d, r, delta) built from set systems and
// weighted graphs, the witness generators for the maximal-distance regimes,
// and the decision procedure that picks among them.
//
// Throughout, h = ceil(k/r), L = r + delta - 1, a = h*r - k and
// b = ceil(n/L)*L - n.

#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "lrcm/error.hpp"
#include "lrcm/gammoid.hpp"
#include "lrcm/lattice.hpp"
#include "lrcm/lrc.hpp"
#include "lrcm/matroid.hpp"
#include "lrcm/set_system.hpp"

namespace lrcm {

/// A member F_J of Z_{<k}: J as a bitmask over flats, with its rank
/// v(J) = |F_J| - sum_{i in J} nullity(F_i).
struct UnionRank {
  uint64_t j_mask = 0;
  GroundSubset set;
  int rank = 0;
  int nullity_sum = 0;
};

/// Every F_J with v(J) < k. Adding flat j to J raises v by
/// rank(F_j) - |F_j & F_J| >= 1, so the search prunes at the first J with
/// v(J) >= k.
inline std::vector<UnionRank> z_below_k(const SetSystem& sys) {
  std::vector<UnionRank> out;
  const int m = sys.m();
  auto visit = [&](auto&& self, int start, uint64_t mask, const GroundSubset& u, int v,
                   int eta) -> void {
    out.push_back({mask, u, v, eta});
    for (int j = start; j < m; ++j) {
      const auto& f = sys.flats[j];
      const int nv = v + f.rank - (f.elements & u).size();
      if (nv >= sys.k) continue;
      self(self, j + 1, mask | (uint64_t{1} << j), u | f.elements, nv, eta + f.nullity());
    }
  };
  if (sys.k > 0) visit(visit, 0, 0, GroundSubset(sys.n), 0, 0);
  return out;
}

/// The lattice Z_{<k} + {E} with its ranks.
inline CyclicFlatLattice construction_lattice(const SetSystem& sys) {
  require_conditions(sys);
  std::vector<LatticeMember> members;
  for (const auto& z : z_below_k(sys)) members.push_back({z.set, z.rank});
  members.push_back({GroundSubset::full(sys.n), sys.k});
  return CyclicFlatLattice(sys.n, std::move(members));
}

/// Lattice-backed matroid M(F_1..F_m; k; rank). Throws ValidationError
/// naming the first violated condition (i)..(iv).
inline Matroid general_construction(const SetSystem& sys) {
  return Matroid::from_construction(construction_lattice(sys), sys);
}

/// Parameters predicted by the construction:
///   d = n - k + 1 - max{sum_{i in J} nullity(F_i) : F_J in Z_{<k}},
///   delta = 1 + min nullity(F_i), r = max rank(F_i).
inline LrcParams construction_params(const SetSystem& sys) {
  require_conditions(sys);
  LrcParams p;
  p.n = sys.n;
  p.k = sys.k;
  int best = 0;
  for (const auto& z : z_below_k(sys)) best = std::max(best, z.nullity_sum);
  p.d = sys.n - sys.k + 1 - best;
  if (sys.m() > 0) {
    int min_eta = sys.flats[0].nullity();
    int max_rank = 0;
    for (const auto& f : sys.flats) {
      min_eta = std::min(min_eta, f.nullity());
      max_rank = std::max(max_rank, f.rank);
    }
    p.delta = 1 + min_eta;
    p.r = max_rank;
  }
  return p;
}

/// Locality assignment read off the flats. M|F_i is uniform of rank
/// rank(F_i), so x in F_i gets x plus the lowest rank(F_i) + delta - 2 other
/// elements of the first flat containing it: a set of size at most
/// r + delta - 1 with distance exactly delta.
inline LocalityAssignment construction_locality(const SetSystem& sys) {
  const auto p = construction_params(sys);
  const int delta = p.delta.value_or(0);
  LocalityAssignment a{p.r.value_or(0), delta, std::vector<GroundSubset>(sys.n, GroundSubset(sys.n))};
  for (int x = 0; x < sys.n; ++x) {
    for (const auto& f : sys.flats) {
      if (!f.elements.contains(x)) continue;
      const int want = std::min(f.elements.size(), f.rank + delta - 1);
      GroundSubset s(sys.n);
      s.insert(x);
      for (int e : f.elements.elements()) {
        if (s.size() >= want) break;
        s.insert(e);
      }
      a.sets[x] = s;
      break;
    }
  }
  return a;
}

// ---------------------------------------------------------------------------
// Weighted-graph construction.

/// Checks that (g, k, r, delta) admits the block construction:
///   (i) no triangle, (ii) k <= r*m - sum(gamma), (iii) r > incident weight.
inline void require_graph_conditions(const WeightedGraph& g, int k, int r, int delta) {
  if (!(0 < r && r < k) || delta < 2) {
    throw DomainError("graph construction needs 0 < r < k and delta >= 2");
  }
  if (auto tri = g.find_triangle()) {
    throw ValidationError("(i)", "triangle {" + std::to_string((*tri)[0]) + "," +
                                     std::to_string((*tri)[1]) + "," +
                                     std::to_string((*tri)[2]) + "}");
  }
  if (k > r * g.m() - g.total_weight()) {
    throw ValidationError("(ii)", "k = " + std::to_string(k) + " exceeds r*m - sum(gamma) = " +
                                      std::to_string(r * g.m() - g.total_weight()));
  }
  for (int i = 0; i < g.m(); ++i) {
    if (g.incident_weight(i) >= r) {
      throw ValidationError("(iii)", "vertex " + std::to_string(i) + " has incident weight " +
                                         std::to_string(g.incident_weight(i)) + " >= r");
    }
  }
}

/// Blocks F_0..F_{m-1} of size L and rank r. Vertices are laid out in order;
/// for an edge {i,j} with i < j, the gamma lowest-indexed elements of F_i not
/// yet shared are placed into F_j, after which F_j is filled with fresh
/// elements.
inline SetSystem graph_set_system(const WeightedGraph& g, int k, int r, int delta) {
  require_graph_conditions(g, k, r, delta);
  const int size = r + delta - 1;
  const int n = size * g.m() - g.total_weight();
  if (n > GroundSubset::kMaxUniverse) {
    throw CapacityError("graph construction needs " + std::to_string(n) + " elements");
  }
  std::vector<std::vector<int>> blocks(g.m());
  std::vector<std::vector<int>> unshared(g.m());  // ascending
  int next = 0;
  for (int j = 0; j < g.m(); ++j) {
    for (const auto& e : g.edges()) {
      if (e.v != j) continue;
      auto& pool = unshared[e.u];
      for (int t = 0; t < e.gamma; ++t) {
        blocks[j].push_back(pool.front());
        pool.erase(pool.begin());
      }
    }
    while (static_cast<int>(blocks[j].size()) < size) {
      blocks[j].push_back(next);
      unshared[j].push_back(next);
      ++next;
    }
  }
  SetSystem sys{n, k, {}};
  for (const auto& b : blocks) sys.flats.push_back({GroundSubset::from_elements(n, b), r});
  return sys;
}

inline Matroid graph_construction(const WeightedGraph& g, int k, int r, int delta) {
  return general_construction(graph_set_system(g, k, r, delta));
}

/// n = L*m - sum(gamma) and
/// d = n - k + 1 - (delta-1) * max{|I| : r|I| - gamma(I) < k}.
inline LrcParams graph_params(const WeightedGraph& g, int k, int r, int delta) {
  require_graph_conditions(g, k, r, delta);
  if (g.m() > 64) throw CapacityError("more than 64 vertices");
  LrcParams p;
  p.n = (r + delta - 1) * g.m() - g.total_weight();
  p.k = k;
  int best = 0;
  // r|I| - gamma(I) grows by r - (weight into I) >= 1 per added vertex.
  auto visit = [&](auto&& self, int start, uint64_t mask, int count) -> void {
    best = std::max(best, count);
    for (int v = start; v < g.m(); ++v) {
      const uint64_t next = mask | (uint64_t{1} << v);
      if (r * (count + 1) - g.induced_weight(next) < k) self(self, v + 1, next, count + 1);
    }
  };
  visit(visit, 0, 0, 0);
  p.d = p.n - k + 1 - (delta - 1) * best;
  p.r = r;
  p.delta = delta;
  return p;
}

// ---------------------------------------------------------------------------
// Regime parameters and witness generators.

struct DmaxParams {
  int n = 0, k = 0, r = 0, delta = 0;
  int h = 0;       // ceil(k/r)
  int L = 0;       // r + delta - 1
  int a = 0;       // h*r - k
  int b = 0;       // ceil(n/L)*L - n
  int mcount = 0;  // ceil(n/L)
  int singleton = 0;
};

/// Rejects tuples outside 0 < r <= k <= n - h(delta-1), delta >= 2.
inline DmaxParams dmax_params(int n, int k, int r, int delta) {
  if (!(0 < r && r <= k) || delta < 2 || n < 1) {
    throw DomainError("need 0 < r <= k and delta >= 2");
  }
  const auto aux = aux_bounds_ok(n, k, r, delta);
  if (!aux.ok) throw ValidationError("feasibility", aux.reasons.front());
  DmaxParams p{n, k, r, delta};
  p.h = ceil_div(k, r);
  p.L = r + delta - 1;
  p.a = p.h * r - k;
  p.mcount = ceil_div(n, p.L);
  p.b = p.mcount * p.L - n;
  p.singleton = singleton_bound(n, k, r, delta);
  return p;
}

namespace detail {

inline SetSystem disjoint_blocks(int n, int k, const std::vector<std::pair<int, int>>& size_rank) {
  SetSystem sys{n, k, {}};
  int next = 0;
  for (auto [size, rank] : size_rank) {
    GroundSubset f(n);
    for (int t = 0; t < size; ++t) f.insert(next++);
    sys.flats.push_back({f, rank});
  }
  if (next != n) throw DomainError("block sizes do not sum to n");
  return sys;
}

}  // namespace detail

/// ceil(n/L) - 1 disjoint blocks of size L and rank r, plus a tail block of
/// size L - b and rank r - b. Requires b < r. Perfect when a >= b; otherwise
/// d >= n - k + 1 - h(delta-1).
inline SetSystem blocks_tail_system(int n, int k, int r, int delta) {
  const auto p = dmax_params(n, k, r, delta);
  if (p.b >= r) throw ValidationError("b < r", "tail block would have rank " + std::to_string(r - p.b));
  std::vector<std::pair<int, int>> blocks(p.mcount - 1, {p.L, r});
  blocks.push_back({p.L - p.b, r - p.b});
  return detail::disjoint_blocks(n, k, blocks);
}

inline Matroid gen_blocks_case_i(int n, int k, int r, int delta) {
  const auto p = dmax_params(n, k, r, delta);
  if (p.a < p.b) throw ValidationError("a >= b", "a = " + std::to_string(p.a) + " < b = " + std::to_string(p.b));
  return general_construction(blocks_tail_system(n, k, r, delta));
}

/// ceil(n/L) - 2 disjoint full blocks plus one tail of size 2L - b and rank r.
/// d = n - k + 1 - h(delta-1) + (b - r).
inline SetSystem blocks_double_tail_system(int n, int k, int r, int delta) {
  const auto p = dmax_params(n, k, r, delta);
  if (p.b <= p.a) throw ValidationError("b > a", "b = " + std::to_string(p.b) + " <= a = " + std::to_string(p.a));
  if (p.mcount < 2) throw ValidationError("b > a", "fewer than two blocks");
  std::vector<std::pair<int, int>> blocks(p.mcount - 2, {p.L, r});
  blocks.push_back({2 * p.L - p.b, r});
  return detail::disjoint_blocks(n, k, blocks);
}

inline Matroid gen_blocks_case_ii(int n, int k, int r, int delta) {
  return general_construction(blocks_double_tail_system(n, k, r, delta));
}

/// Integer form of ceil(n/L) >= h - 1 + (b - a)(1 + 1/t) with
/// t = floor(a / (h - 1 - a)); false when t = 0.
inline bool case_iii_count_ok(const DmaxParams& p) {
  const int denom = p.h - 1 - p.a;
  if (denom <= 0) return false;
  const long t = p.a / denom;
  if (t == 0) return false;
  return t * p.mcount >= t * (p.h - 1) + static_cast<long>(p.b - p.a) * (t + 1);
}

/// Vertex-disjoint unit-weight paths. With s = floor((h-1)/(h-1-a)),
/// u = h-1-a + ceil((b-a)/(s-1)) and x = h-1 - s(h-1-a): the first x paths
/// have s+1 vertices, the next ones s, and the last s or
/// (b-a) mod (s-1) + 1. Padded with isolated vertices to ceil(n/L).
inline WeightedGraph paths_case_iii_graph(int n, int k, int r, int delta) {
  const auto p = dmax_params(n, k, r, delta);
  if (!(p.b > p.a && p.a < p.h - 1)) {
    throw ValidationError("(iii)", "requires b > a and a < h - 1");
  }
  if (p.a < p.h / 2 || !case_iii_count_ok(p)) {
    throw ValidationError("(iii)", "existence test fails");
  }
  const int c = p.h - 1 - p.a;
  const int s = (p.h - 1) / c;
  const int diff = p.b - p.a;
  const int u = c + ceil_div(diff, s - 1);
  const int x = p.h - 1 - s * c;
  std::vector<int> sizes;
  for (int i = 1; i <= u; ++i) {
    if (i <= x) {
      sizes.push_back(s + 1);
    } else if (i < u || diff % (s - 1) == 0) {
      sizes.push_back(s);
    } else {
      sizes.push_back(diff - (diff / (s - 1)) * (s - 1) + 1);
    }
  }
  std::vector<WeightedEdge> edges;
  int v = 0;
  for (int len : sizes) {
    for (int t = 0; t + 1 < len; ++t) edges.push_back({v + t, v + t + 1, 1});
    v += len;
  }
  if (v > p.mcount) {
    throw ValidationError("(iii)", "paths need " + std::to_string(v) + " vertices, only " +
                                       std::to_string(p.mcount) + " available");
  }
  return WeightedGraph(p.mcount, std::move(edges));
}

inline Matroid gen_paths_case_iii(int n, int k, int r, int delta) {
  return graph_construction(paths_case_iii_graph(n, k, r, delta), k, r, delta);
}

struct ThetaShape {
  int s = 0, t = 0, u = 0, x = 0, y = 0;
  int copies = 0;     // floor(b / stu)
  int vertices = 0;   // copies * (t(u-1) + 2) + y
};

/// s = floor(a/(h-1)), t = floor((r-1)/s), u = ceil((h+1)/2),
/// x = ceil((b - floor(b/stu) stu) / s), y = |V(B'(x))|.
inline ThetaShape theta_shape(int h, int r, int a, int b) {
  ThetaShape th;
  if (h < 2) throw DomainError("theta graph needs h >= 2");
  th.s = a / (h - 1);
  if (th.s < 1) throw ValidationError("(iv)", "s = floor(a/(h-1)) is zero");
  th.t = (r - 1) / th.s;
  th.u = ceil_div(h + 1, 2);
  const int stu = th.s * th.t * th.u;
  if (stu < 1) throw ValidationError("(iv)", "t = floor((r-1)/s) is zero");
  th.copies = b / stu;
  const int rest = b - th.copies * stu;
  th.x = ceil_div(rest, th.s);
  th.y = rest == 0 ? 0 : th.x - th.x / th.u + 1 + std::min(th.x / th.u, 1);
  th.vertices = th.copies * (th.t * (th.u - 1) + 2) + th.y;
  return th;
}

/// floor(b/stu) copies of B (t paths of u+1 vertices glued at both ends),
/// then B'(x), the first x edges of B in path order, then isolated vertices
/// up to m. All weights are s except edge number x of B'(x), which carries
/// b mod s when s does not divide b.
inline WeightedGraph theta_graph(int k, int r, int delta, int b, int m) {
  (void)delta;
  const int h = ceil_div(k, r);
  const int a = h * r - k;
  const ThetaShape th = theta_shape(h, r, a, b);
  if (m < th.vertices) {
    throw ValidationError("(iv)", "need " + std::to_string(th.vertices) + " vertices, have " +
                                      std::to_string(m));
  }
  std::vector<WeightedEdge> edges;
  int next = 0;
  // Emits edges 1..count of one copy of B with fresh vertices.
  auto emit_b = [&](int count, int last_weight) {
    const int p = next++;
    int q = -1;
    int emitted = 0;
    for (int i = 0; i < th.t && emitted < count; ++i) {
      int prev = p;
      for (int j = 1; j <= th.u && emitted < count; ++j) {
        int to;
        if (j == th.u) {
          if (q < 0) q = next++;
          to = q;
        } else {
          to = next++;
        }
        ++emitted;
        const int w = (emitted == count) ? last_weight : th.s;
        edges.push_back({prev, to, w});
        prev = to;
      }
    }
  };
  for (int c = 0; c < th.copies; ++c) emit_b(th.t * th.u, th.s);
  if (th.x > 0) {
    const int rem = b % th.s;
    emit_b(th.x, rem == 0 ? th.s : rem);
  }
  return WeightedGraph(m, std::move(edges));
}

inline bool case_iv_count_ok(const DmaxParams& p) {
  if (p.h < 3 || p.a < p.h - 1) return false;
  const ThetaShape th = theta_shape(p.h, p.r, p.a, p.b);
  return p.mcount >= th.vertices;
}

inline WeightedGraph theta_case_iv_graph(int n, int k, int r, int delta) {
  const auto p = dmax_params(n, k, r, delta);
  if (!(p.b > p.a && p.a >= p.h - 1 && p.h >= 3)) {
    throw ValidationError("(iv)", "requires b > a >= h - 1 and h >= 3");
  }
  if (!case_iv_count_ok(p)) throw ValidationError("(iv)", "vertex count test fails");
  return theta_graph(k, r, delta, p.b, p.mcount);
}

inline Matroid gen_theta_case_iv(int n, int k, int r, int delta) {
  return graph_construction(theta_case_iv_graph(n, k, r, delta), k, r, delta);
}

/// Edge weight used by the h = 2 path: a when 2a <= r-1, else floor((r-1)/2).
inline int case_v_weight(const DmaxParams& p) {
  return 2 * p.a <= p.r - 1 ? p.a : (p.r - 1) / 2;
}

inline bool case_v_count_ok(const DmaxParams& p) {
  if (p.h != 2 || p.a < 1) return false;
  const int g = case_v_weight(p);
  if (g < 1) return false;
  return p.mcount >= ceil_div(p.b, g) + 1;
}

/// Path on vertices 0..ceil(b/g) with weight g per edge; the last edge
/// carries b mod g when g does not divide b.
inline WeightedGraph path_case_v_graph(int n, int k, int r, int delta) {
  const auto p = dmax_params(n, k, r, delta);
  if (!(p.b > p.a && p.h == 2)) throw ValidationError("(v)", "requires b > a and h = 2");
  if (!case_v_count_ok(p)) throw ValidationError("(v)", "vertex count test fails");
  const int g = case_v_weight(p);
  const int len = ceil_div(p.b, g);
  std::vector<WeightedEdge> edges;
  for (int i = 0; i < len; ++i) {
    const bool last = i + 1 == len;
    edges.push_back({i, i + 1, (last && p.b % g != 0) ? p.b % g : g});
  }
  return WeightedGraph(p.mcount, std::move(edges));
}

inline Matroid gen_path_case_v(int n, int k, int r, int delta) {
  return graph_construction(path_case_v_graph(n, k, r, delta), k, r, delta);
}

// ---------------------------------------------------------------------------
// Decision procedure.

struct DmaxVerdict {
  DmaxParams params;
  /// r_eq_k, i, iii_yes, iv_yes, v_yes (perfect witnesses), nonexist_i,
  /// nonexist_ii (perfect matroids cannot exist) or unknown.
  std::string tag;
  int d_upper = 0;
  int d_lower = 0;
  std::string lower_source;  // which construction supplies d_lower
  std::optional<SetSystem> witness_system;
  std::optional<WeightedGraph> witness_graph;
  std::optional<Matroid> witness;
  int witness_d = 0;  // measured through the coatom formula
  std::vector<std::string> notes;

  bool perfect() const { return d_lower == params.singleton; }
  bool nonexistence() const { return tag.rfind("nonexist", 0) == 0; }
};

/// Classifies (n, k, r, delta) and attaches a measured witness.
inline DmaxVerdict dmax_decide(int n, int k, int r, int delta) {
  DmaxVerdict v;
  v.params = dmax_params(n, k, r, delta);
  const auto& p = v.params;
  v.d_upper = p.singleton;

  auto attach = [&](SetSystem sys, std::optional<WeightedGraph> g, std::string source) {
    v.witness = general_construction(sys);
    v.witness_system = std::move(sys);
    v.witness_graph = std::move(g);
    v.witness_d = min_distance(*v.witness);
    v.d_lower = v.witness_d;
    v.lower_source = std::move(source);
  };
  auto attach_graph = [&](WeightedGraph g, std::string source) {
    auto sys = graph_set_system(g, k, r, delta);
    attach(std::move(sys), std::move(g), std::move(source));
  };
  // Best non-perfect witness: the double tail when b >= r, else the short tail.
  auto attach_lower = [&] {
    if (p.b >= r) {
      attach(blocks_double_tail_system(n, k, r, delta), std::nullopt, "double_tail_block");
    } else {
      attach(blocks_tail_system(n, k, r, delta), std::nullopt, "short_tail_block");
    }
  };

  if (r == k) {
    v.tag = "r_eq_k";
    v.witness = Matroid::uniform(n, k);
    v.witness_d = min_distance(*v.witness);
    v.d_lower = v.witness_d;
    v.lower_source = "uniform";
    return v;
  }
  if (p.a >= p.b) {
    v.tag = "i";
    attach(blocks_tail_system(n, k, r, delta), std::nullopt, "short_tail_block");
    return v;
  }
  if (p.a < p.h - 1) {
    if (p.a < p.h / 2) {
      v.tag = "nonexist_i";
      v.d_upper = p.singleton - 1;
      attach_lower();
    } else if (case_iii_count_ok(p)) {
      v.tag = "iii_yes";
      attach_graph(paths_case_iii_graph(n, k, r, delta), "unit_weight_paths");
    } else {
      v.tag = "nonexist_ii";
      v.d_upper = p.singleton - 1;
      attach_lower();
    }
    return v;
  }
  if (p.h >= 3 && case_iv_count_ok(p)) {
    v.tag = "iv_yes";
    attach_graph(theta_case_iv_graph(n, k, r, delta), "theta_graph");
    return v;
  }
  if (p.h == 2 && case_v_count_ok(p)) {
    v.tag = "v_yes";
    attach_graph(path_case_v_graph(n, k, r, delta), "weighted_path");
    return v;
  }
  v.tag = "unknown";
  v.notes.push_back("b > a >= h - 1 and the sufficient vertex-count test fails");
  attach_lower();
  return v;
}

/// Rank agreement on all 2^n subsets between the layered gammoid and the
/// lattice construction. n <= 14.
inline bool equivalence_check(const SetSystem& sys) {
  require_exhaustive(sys.n, 14, "gammoid equivalence check");
  const Matroid lattice_side = general_construction(sys);
  const GammoidGraph g = build_graph(sys);
  for (uint64_t mask = 0; mask < (uint64_t{1} << sys.n); ++mask) {
    const auto x = GroundSubset::from_mask(sys.n, mask);
    if (gammoid_rank(g, x) != lattice_side.rank(x)) return false;
  }
  return true;
}

}  // namespace lrcm
