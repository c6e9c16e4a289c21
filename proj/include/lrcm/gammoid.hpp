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

// Layered digraph sources -> H -> sinks whose gammoid equals the matroid
// built from a set system. Sources are the ground elements; H holds one node
// per element lying in two or more flats plus l_i private nodes per flat;
// every H node reaches every one of the k sinks.

#pragma once

#include <algorithm>
#include <bit>
#include <deque>
#include <functional>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "lrcm/error.hpp"
#include "lrcm/set_system.hpp"
#include "lrcm/subset.hpp"

namespace lrcm {

struct MiddleNode {
  std::string name;       // "u_e" or "v_i_j" (0-based indices)
  uint64_t flats = 0;     // h(u) as a bitmask over flat indices
  int shared_element = -1;  // e for u_e, -1 for private nodes
};

struct GammoidGraph {
  int n = 0;  // |S|
  int k = 0;  // |T|
  std::vector<uint64_t> labels;       // s(e) per source
  std::vector<MiddleNode> middle;     // H in creation order
  std::vector<std::vector<int>> arcs; // arcs[e] = H indices u with s(e) <= h(u), ascending
  std::vector<int> private_counts;    // l_i per flat
};

/// Follows the layered recipe line by line. Throws ValidationError("(iv)")
/// when some l_i would be negative.
inline GammoidGraph build_graph(const SetSystem& sys) {
  if (sys.m() > 64) throw CapacityError("more than 64 flats");
  GammoidGraph g;
  g.n = sys.n;
  g.k = sys.k;
  g.labels.assign(sys.n, 0);
  for (int i = 0; i < sys.m(); ++i) {
    sys.flats[i].elements.for_each([&](int e) { g.labels[e] |= uint64_t{1} << i; });
  }
  for (int e = 0; e < sys.n; ++e) {
    if (std::popcount(g.labels[e]) >= 2) {
      g.middle.push_back({"u_" + std::to_string(e), g.labels[e], e});
    }
  }
  const size_t shared_count = g.middle.size();
  for (int i = 0; i < sys.m(); ++i) {
    int touching = 0;
    for (size_t u = 0; u < shared_count; ++u) {
      if ((g.middle[u].flats >> i) & 1) ++touching;
    }
    const int l = sys.flats[i].rank - touching;
    if (l < 0) {
      throw ValidationError("(iv)", "flat " + std::to_string(i) + " has " +
                                        std::to_string(touching) +
                                        " shared elements but rank " +
                                        std::to_string(sys.flats[i].rank));
    }
    g.private_counts.push_back(l);
    for (int j = 0; j < l; ++j) {
      g.middle.push_back({"v_" + std::to_string(i) + "_" + std::to_string(j), uint64_t{1} << i, -1});
    }
  }
  g.arcs.assign(sys.n, {});
  for (int e = 0; e < sys.n; ++e) {
    for (size_t u = 0; u < g.middle.size(); ++u) {
      if ((g.labels[e] & ~g.middle[u].flats) == 0) g.arcs[e].push_back(static_cast<int>(u));
    }
  }
  return g;
}

namespace detail {

struct Matching {
  std::vector<int> source_of;  // per H node, matched source or -1
  std::vector<int> middle_of;  // per source, matched H node or -1
  int size = 0;
};

// Kuhn's augmenting paths; sources and arcs are tried in ascending order.
inline Matching max_matching(const GammoidGraph& g, const GroundSubset& x) {
  Matching mt;
  mt.source_of.assign(g.middle.size(), -1);
  mt.middle_of.assign(g.n, -1);
  std::vector<char> seen;
  std::function<bool(int)> augment = [&](int e) {
    for (int u : g.arcs[e]) {
      if (seen[u]) continue;
      seen[u] = 1;
      if (mt.source_of[u] < 0 || augment(mt.source_of[u])) {
        mt.source_of[u] = e;
        mt.middle_of[e] = u;
        return true;
      }
    }
    return false;
  };
  x.for_each([&](int e) {
    seen.assign(g.middle.size(), 0);
    if (augment(e)) ++mt.size;
  });
  return mt;
}

inline void require_sources(const GammoidGraph& g, const GroundSubset& x) {
  if (x.universe() != g.n) {
    throw DomainError("subset universe " + std::to_string(x.universe()) +
                      " does not match " + std::to_string(g.n) + " sources");
  }
}

}  // namespace detail

/// Size of a maximum matching from x into H, capped at |T| = k.
inline int gammoid_rank(const GammoidGraph& g, const GroundSubset& x) {
  detail::require_sources(g, x);
  return std::min(detail::max_matching(g, x).size, g.k);
}

/// Maximum number of vertex-disjoint paths from x to T in the full digraph,
/// by unit-capacity max-flow with every vertex split into in/out halves.
/// Independent of the matching shortcut; kept as a second route for tests.
inline int linkage_rank(const GammoidGraph& g, const GroundSubset& x) {
  detail::require_sources(g, x);
  const int h = static_cast<int>(g.middle.size());
  // Vertex ids: source e -> e, middle u -> n + u, sink t -> n + h + t.
  const int vertices = g.n + h + g.k;
  const int super_s = 2 * vertices;
  const int super_t = super_s + 1;
  struct Arc {
    int to;
    int cap;
    int rev;
  };
  std::vector<std::vector<Arc>> adj(super_t + 1);
  auto add = [&](int a, int b) {
    adj[a].push_back({b, 1, static_cast<int>(adj[b].size())});
    adj[b].push_back({a, 0, static_cast<int>(adj[a].size()) - 1});
  };
  auto in = [](int v) { return 2 * v; };
  auto out = [](int v) { return 2 * v + 1; };
  for (int v = 0; v < vertices; ++v) add(in(v), out(v));
  x.for_each([&](int e) { add(super_s, in(e)); });
  for (int e = 0; e < g.n; ++e) {
    for (int u : g.arcs[e]) add(out(e), in(g.n + u));
  }
  for (int u = 0; u < h; ++u) {
    for (int t = 0; t < g.k; ++t) add(out(g.n + u), in(g.n + h + t));
  }
  for (int t = 0; t < g.k; ++t) add(out(g.n + h + t), super_t);

  int flow = 0;
  while (true) {
    std::vector<std::pair<int, int>> prev(adj.size(), {-1, -1});
    std::deque<int> queue{super_s};
    prev[super_s] = {super_s, -1};
    while (!queue.empty() && prev[super_t].first < 0) {
      const int v = queue.front();
      queue.pop_front();
      for (int i = 0; i < static_cast<int>(adj[v].size()); ++i) {
        const Arc& a = adj[v][i];
        if (a.cap > 0 && prev[a.to].first < 0) {
          prev[a.to] = {v, i};
          queue.push_back(a.to);
        }
      }
    }
    if (prev[super_t].first < 0) return flow;
    for (int v = super_t; v != super_s; v = prev[v].first) {
      Arc& a = adj[prev[v].first][prev[v].second];
      a.cap -= 1;
      adj[v][a.rev].cap += 1;
    }
    ++flow;
  }
}

inline bool independence(const GammoidGraph& g, const GroundSubset& x) {
  detail::require_sources(g, x);
  if (x.size() > g.k) return false;
  return detail::max_matching(g, x).size == x.size();
}

/// For x with no perfect matching into H, a set A of sources with
/// |N(A)| < |A|, grown by alternating paths from an unmatched source.
inline std::optional<GroundSubset> hall_witness(const GammoidGraph& g, const GroundSubset& x) {
  detail::require_sources(g, x);
  const auto mt = detail::max_matching(g, x);
  if (mt.size == x.size()) return std::nullopt;
  int root = -1;
  x.for_each([&](int e) {
    if (root < 0 && mt.middle_of[e] < 0) root = e;
  });
  GroundSubset a(g.n);
  std::vector<char> seen_mid(g.middle.size(), 0);
  std::vector<int> stack{root};
  a.insert(root);
  while (!stack.empty()) {
    const int e = stack.back();
    stack.pop_back();
    for (int u : g.arcs[e]) {
      if (seen_mid[u]) continue;
      seen_mid[u] = 1;
      const int next = mt.source_of[u];  // matched, else the matching was not maximum
      if (next >= 0 && !a.contains(next)) {
        a.insert(next);
        stack.push_back(next);
      }
    }
  }
  return a;
}

/// H nodes adjacent to some source in a.
inline std::vector<int> neighbourhood(const GammoidGraph& g, const GroundSubset& a) {
  detail::require_sources(g, a);
  std::vector<char> hit(g.middle.size(), 0);
  a.for_each([&](int e) {
    for (int u : g.arcs[e]) hit[u] = 1;
  });
  std::vector<int> out;
  for (int u = 0; u < static_cast<int>(hit.size()); ++u) {
    if (hit[u]) out.push_back(u);
  }
  return out;
}

/// Three-layer directed DOT: sources on top, H in the middle, sinks below.
inline std::string to_dot(const GammoidGraph& g) {
  std::ostringstream out;
  out << "digraph gammoid {\n  rankdir=TB;\n";
  out << "  { rank=same;";
  for (int e = 0; e < g.n; ++e) out << " s" << e << ";";
  out << " }\n  { rank=same;";
  for (const auto& u : g.middle) out << " " << u.name << ";";
  out << " }\n  { rank=same;";
  for (int t = 0; t < g.k; ++t) out << " t" << t << ";";
  out << " }\n";
  for (int e = 0; e < g.n; ++e) {
    out << "  s" << e << " [label=\"" << e << "\", shape=circle];\n";
  }
  for (int t = 0; t < g.k; ++t) out << "  t" << t << " [shape=box];\n";
  for (int e = 0; e < g.n; ++e) {
    for (int u : g.arcs[e]) out << "  s" << e << " -> " << g.middle[u].name << ";\n";
  }
  for (const auto& u : g.middle) {
    for (int t = 0; t < g.k; ++t) out << "  " << u.name << " -> t" << t << ";\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace lrcm
