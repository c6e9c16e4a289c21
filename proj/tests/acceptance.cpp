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

// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails. Every comparison goes through an oracle from support.hpp
// that is independent of the code under test.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "support.hpp"

namespace lrcm {
namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      if (!detail.empty()) detail += "; ";
      detail += what;
    }
  }
};

std::string set_list(const std::vector<GroundSubset>& sets) {
  std::string s;
  for (const auto& x : sets) s += (s.empty() ? "" : " ") + x.to_string();
  return s;
}

bool table_agrees(const Matroid& a, const std::function<int(const GroundSubset&)>& oracle) {
  const int n = a.ground_size();
  for (uint64_t mask = 0; mask < (uint64_t{1} << n); ++mask) {
    const auto x = GroundSubset::from_mask(n, mask);
    if (a.rank(x) != oracle(x)) return false;
  }
  return true;
}

// (R1)-(R3) on a full table, the last in its local form.
bool rank_table_is_matroid(int n, const std::vector<int>& t) {
  for (uint64_t x = 0; x < t.size(); ++x) {
    if (t[x] < 0 || t[x] > std::popcount(x)) return false;
    for (int a = 0; a < n; ++a) {
      const uint64_t xa = x | (uint64_t{1} << a);
      if (t[xa] < t[x] || t[xa] > t[x] + 1) return false;
      for (int b = a + 1; b < n; ++b) {
        const uint64_t xb = x | (uint64_t{1} << b);
        if (t[xa] + t[xb] < t[xa | xb] + t[x]) return false;
      }
    }
  }
  return true;
}

// ---------------------------------------------------------------------------

Outcome ac1() {
  Outcome o;
  const auto a = testing::eq4_matrix();
  const auto m = Matroid::from_matrix(a);
  const auto table = testing::table_of(m);
  const int k = m.full_rank();
  const int d = min_distance(m);
  o.require(m.ground_size() == 12 && k == 6 && d == 3,
            "(n,k,d) = (" + std::to_string(m.ground_size()) + "," + std::to_string(k) + "," + std::to_string(d) + ")");
  o.require(testing::dense_rank(a, GroundSubset::full(12)) == 6, "dense rank differs");
  o.require(testing::distance_from_table(12, table) == 3, "brute-force d differs");
  o.require(code_min_distance(a) == 3, "codeword weight d differs");

  const auto loc = has_locality(m, 3, 3);
  o.require(loc.has_value(), "no (3,3) locality assignment");
  if (loc) {
    o.require(verify_locality(m, *loc), "locality assignment fails verification");
    o.require(loc->distinct() == testing::cloud_sets(), "locality sets " + set_list(loc->distinct()));
  }

  const auto z = cyclic_flats(m);
  const auto oracle_flats = testing::cyclic_flats_from_table(12, table);
  o.require(z.members() == oracle_flats, "cyclic flats differ from the table oracle");
  const auto at = atoms(z);
  auto expected = testing::cloud_sets();
  std::sort(expected.begin(), expected.end(), CanonicalLess{});
  auto got = at;
  std::sort(got.begin(), got.end(), CanonicalLess{});
  if (got != expected) {
    int extra = 0;
    for (const auto& x : got) extra += std::find(expected.begin(), expected.end(), x) == expected.end();
    o.require(false, "atoms are not exactly the three clouds: " + std::to_string(got.size()) + " atoms, " +
                         std::to_string(extra) + " beyond the clouds (e.g. " +
                         [&] {
                           for (const auto& x : got) {
                             if (std::find(expected.begin(), expected.end(), x) == expected.end()) {
                               std::string labels;
                               for (int e : x.elements()) labels += (labels.empty() ? "" : ",") + std::to_string(e + 1);
                               return "columns {" + labels + "} of rank " + std::to_string(z.rank_of(x));
                             }
                           }
                           return std::string();
                         }() +
                         ")");
  }
  return o;
}

Outcome ac2() {
  Outcome o;
  {
    const auto m = graph_construction(testing::six_block_graph(), 14, 4, 2);
    const auto r = minimal_r(m, 2);
    const LrcParams p{m.ground_size(), m.full_rank(), min_distance(m), r, 2};
    o.require(p.to_string() == "(27,14,11,4,2)", "six-block graph measured " + p.to_string());
    const auto a = has_locality(m, 4, 2);
    o.require(a && verify_locality(m, *a), "six-block locality does not verify");
    o.require(is_perfect(m, 4, 2), "six-block matroid not perfect");
  }
  {
    const auto g = testing::theta_fixture();
    const auto m = graph_construction(g, 19, 9, 5);
    const auto a = has_locality(m, 9, 5);
    const bool tight = !has_locality(m, 8, 5).has_value();
    const LrcParams p{m.ground_size(), m.full_rank(), min_distance(m),
                      a && tight ? std::optional<int>(9) : std::nullopt, 5};
    o.require(p.to_string() == "(122,19,96,9,5)", "theta graph measured " + p.to_string());
    o.require(a && verify_locality(m, *a), "theta locality does not verify");
    o.require(graph_params(g, 19, 9, 5) == p, "declared and measured theta parameters differ");
  }
  return o;
}

Outcome ac3() {
  Outcome o;
  auto suite = testing::set_system_suite(2026, 24, 4, 12);
  suite.insert(suite.begin(), testing::three_clouds());
  int agreed = 0;
  for (const auto& sys : suite) {
    const auto g = build_graph(sys);
    const auto m = general_construction(sys);
    bool ok = true;
    for (uint64_t mask = 0; mask < (uint64_t{1} << sys.n) && ok; ++mask) {
      const auto x = GroundSubset::from_mask(sys.n, mask);
      const int gr = gammoid_rank(g, x);
      ok = gr == m.rank(x) && gr == linkage_rank(g, x) &&
           (x.size() > sys.k || (gr == x.size()) == testing::set_system_independent(sys, x));
    }
    o.require(ok, "disagreement on " + io::to_json(sys).dump());
    agreed += ok;
  }
  o.detail = std::to_string(agreed) + "/" + std::to_string(suite.size()) + " set systems agree on all subsets" +
             (o.detail.empty() ? "" : "; " + o.detail);
  return o;
}

struct RepFixture {
  std::string name;
  Matroid m;
  std::optional<std::pair<int, int>> perfect;  // (r, delta)
};

std::vector<uint32_t> prime_ladder() {
  std::vector<uint32_t> out;
  for (uint32_t p = 2; p < 64; ++p) {
    if (is_prime(p)) out.push_back(p);
  }
  for (uint32_t p : {127u, 251u, 509u, 1021u, 2039u, 4093u, 8191u}) out.push_back(p);
  return out;
}

std::vector<FieldMatrix> g_represented;
std::vector<Matroid> g_represented_targets;

Outcome ac4() {
  Outcome o;
  std::vector<RepFixture> fixtures;
  fixtures.push_back({"storage matrix", Matroid::from_matrix(testing::eq4_matrix()), std::nullopt});
  fixtures.push_back({"three clouds", general_construction(testing::three_clouds()), std::nullopt});
  fixtures.push_back({"U(10,4)", uniform_matroid(10, 4), std::pair{4, 7}});
  for (int n = 5; n <= 12; ++n) {
    for (int k = 2; k < n; ++k) {
      for (int r = 1; r < k; ++r) {
        for (int delta : {2, 3}) {
          if (!aux_bounds_ok(n, k, r, delta).ok) continue;
          const auto v = dmax_decide(n, k, r, delta);
          if (!v.perfect() || !v.witness_system) continue;
          fixtures.push_back({"witness " + LrcParams{n, k, v.witness_d, r, delta}.to_string() + " " + v.tag,
                              *v.witness, std::pair{r, delta}});
        }
      }
    }
  }
  const auto primes = prime_ladder();
  int perfect_checked = 0;
  for (const auto& f : fixtures) {
    std::optional<RepresentationResult> hit;
    for (uint32_t p : primes) {
      auto r = find_representation(f.m, p, 7, p == primes.back() ? 20'000 : 200);
      if (r.found) {
        hit = std::move(r);
        break;
      }
    }
    if (!hit) {
      o.require(false, f.name + ": no representation up to 8191");
      continue;
    }
    const auto& a = *hit->matrix;
    o.require(table_agrees(f.m, [&](const GroundSubset& x) { return testing::dense_rank(a, x); }),
              f.name + ": certified matrix disagrees with the dense-rank oracle");
    if (f.perfect) {
      const auto [r, delta] = *f.perfect;
      const int bound = singleton_bound(f.m.ground_size(), f.m.full_rank(), r, delta);
      o.require(code_min_distance(a) == bound, f.name + ": code distance " + std::to_string(code_min_distance(a)) +
                                                   " != bound " + std::to_string(bound));
      ++perfect_checked;
    }
    g_represented.push_back(a);
    g_represented_targets.push_back(f.m);
  }
  o.detail = std::to_string(fixtures.size()) + " fixtures, " + std::to_string(perfect_checked) +
             " perfect ones meet the bound" + (o.detail.empty() ? "" : "; " + o.detail);
  return o;
}

Outcome ac5() {
  Outcome o;
  long checked = 0, skipped = 0, violations = 0;
  auto check = [&](const Matroid& m, int r, int delta, int d) {
    const int n = m.ground_size();
    const int k = m.full_rank();
    ++checked;
    const bool ok = d <= singleton_bound(n, k, r, delta) && delta <= d && k <= n - ceil_div(k, r) * (delta - 1);
    if (!ok) {
      ++violations;
      o.require(false, "n=" + std::to_string(n) + " k=" + std::to_string(k) + " d=" + std::to_string(d) +
                           " r=" + std::to_string(r) + " delta=" + std::to_string(delta));
    }
  };
  // Large fixtures at their declared locality.
  check(graph_construction(testing::six_block_graph(), 14, 4, 2), 4, 2, 11);
  {
    const auto m = graph_construction(testing::theta_fixture(), 19, 9, 5);
    check(m, 9, 5, min_distance(m));
  }
  auto sweep = [&](const Matroid& m) {
    const int n = m.ground_size();
    int d = 0;
    try {
      d = min_distance(m);
    } catch (const DomainError&) {
      ++skipped;
      return;
    }
    if (d != testing::distance_from_table(n, testing::table_of(m))) {
      ++violations;
      o.require(false, "coatom d disagrees with brute force");
    }
    for (int delta = 2; delta <= n; ++delta) {
      if (const auto r = minimal_r(m, delta)) check(m, *r, delta, d);
    }
  };
  sweep(Matroid::from_matrix(testing::eq4_matrix()));
  sweep(general_construction(testing::three_clouds()));
  sweep(uniform_matroid(10, 4));
  std::mt19937_64 rng(5005);
  for (int t = 0; t < 1000; ++t) sweep(Matroid::from_lattice_unchecked(testing::random_valid_lattice(rng, 10)));
  o.detail = std::to_string(checked) + " (matroid, r, delta) triples, " + std::to_string(violations) +
             " violations, " + std::to_string(skipped) + " matroids with undefined d" +
             (o.detail.empty() ? "" : "; " + o.detail);
  return o;
}

Outcome ac6() {
  Outcome o;
  int perfect = 0, nonexist = 0, other = 0, contradictions = 0;
  for (int n = 2; n <= 14; ++n) {
    for (int k = 1; k < n; ++k) {
      for (int r = 1; r <= k; ++r) {
        if (!aux_bounds_ok(n, k, r, 2).ok) continue;
        const auto v = dmax_decide(n, k, r, 2);
        const std::string where = "(" + std::to_string(n) + "," + std::to_string(k) + "," + std::to_string(r) + ",2)";
        if (v.perfect()) {
          ++perfect;
          const auto& m = *v.witness;
          const bool ok = testing::distance_from_table(n, testing::table_of(m)) == v.params.singleton &&
                          m.ground_size() == n && m.full_rank() == k && [&] {
                            const auto a = has_locality(m, r, 2);
                            return a && verify_locality(m, *a);
                          }();
          if (!ok) {
            ++contradictions;
            o.require(false, where + " perfect witness falls short");
          }
          if (v.nonexistence()) {
            ++contradictions;
            o.require(false, where + " tagged both ways");
          }
        } else if (v.nonexistence()) {
          ++nonexist;
          if (search_perfect_family(n, k, r, 2).found) {
            ++contradictions;
            o.require(false, where + " nonexistence verdict but a family exists");
          }
        } else {
          ++other;
        }
      }
    }
  }
  o.detail = std::to_string(perfect) + " perfect, " + std::to_string(nonexist) + " nonexistence, " +
             std::to_string(other) + " other verdicts, " + std::to_string(contradictions) + " contradictions" +
             (o.detail.empty() ? "" : "; " + o.detail);
  return o;
}

Outcome ac7() {
  Outcome o;
  const std::vector<std::pair<std::string, CyclicFlatLattice>> fixtures = {
      {"storage matrix", cyclic_flats(Matroid::from_matrix(testing::eq4_matrix()))},
      {"three clouds", construction_lattice(testing::three_clouds())},
      {"six blocks", construction_lattice(testing::six_block_system())},
      {"theta", construction_lattice(graph_set_system(testing::theta_fixture(), 19, 9, 5))},
      {"U(10,4)", cyclic_flats(uniform_matroid(10, 4))},
  };
  for (const auto& [name, z] : fixtures) o.require(validate(z).valid, name + " fixture lattice rejected");

  std::vector<CyclicFlatLattice> bases = {fixtures[0].second, fixtures[1].second, fixtures[4].second};
  std::mt19937_64 rng(7007);
  for (int t = 0; t < 7; ++t) bases.push_back(testing::random_valid_lattice(rng, 10));

  int rejected = 0, accepted = 0, false_accepts = 0, unnamed = 0, made = 0;
  while (made < 200) {
    const auto& base = bases[rng() % bases.size()];
    const int n = base.ground_size();
    auto members = base.members();
    const size_t i = rng() % members.size();
    switch (rng() % 3) {
      case 0:
        members[i].rank += (rng() % 2) ? 1 : -1;
        break;
      case 1: {
        if (n == 0) continue;
        const int e = static_cast<int>(rng() % n);
        if (members[i].flat.contains(e)) {
          members[i].flat.erase(e);
        } else {
          members[i].flat.insert(e);
        }
        break;
      }
      default:
        if (members.size() < 2) continue;
        members.erase(members.begin() + static_cast<long>(i));
    }
    std::optional<CyclicFlatLattice> z;
    try {
      z.emplace(n, members);
    } catch (const FormatError&) {
      continue;  // not a lattice document at all; draw again
    }
    ++made;
    const auto rep = validate(*z);
    if (!rep.valid) {
      ++rejected;
      const auto* v = rep.first();
      const bool named = v && (v->axiom == "Z0" || v->axiom == "Z1" || v->axiom == "Z2" || v->axiom == "Z3") &&
                         !v->witnesses.empty();
      if (!named) {
        ++unnamed;
        o.require(false, "rejection without axiom and witness");
      }
      continue;
    }
    ++accepted;
    std::vector<int> t(size_t{1} << n);
    for (uint64_t mask = 0; mask < t.size(); ++mask) {
      t[mask] = testing::lattice_formula_rank(z->members(), GroundSubset::from_mask(n, mask));
    }
    if (!rank_table_is_matroid(n, t) || testing::cyclic_flats_from_table(n, t) != z->members()) {
      ++false_accepts;
      o.require(false, "false accept: " + io::to_json(*z).dump());
    }
  }
  o.detail = std::to_string(made) + " perturbations: " + std::to_string(rejected) + " rejected (" +
             std::to_string(unnamed) + " unnamed), " + std::to_string(accepted) + " accepted (" +
             std::to_string(false_accepts) + " false)" + (o.detail.empty() ? "" : "; " + o.detail);
  return o;
}

Outcome ac8() {
  Outcome o;
  int pairs = 0;
  auto lattice_vs_matrix = [&](const Matroid& target, const FieldMatrix& a, const std::string& name) {
    const auto lattice_side = Matroid::from_lattice_unchecked(cyclic_flats(Matroid::from_matrix(a)));
    const auto matrix_side = Matroid::from_matrix(a);
    o.require(table_agrees(lattice_side, [&](const GroundSubset& x) { return matrix_side.rank(x); }) &&
                  table_agrees(lattice_side, [&](const GroundSubset& x) { return testing::dense_rank(a, x); }) &&
                  table_agrees(target, [&](const GroundSubset& x) { return lattice_side.rank(x); }),
              name + ": lattice and matrix backings disagree");
    ++pairs;
  };
  const auto eq4 = testing::eq4_matrix();
  lattice_vs_matrix(Matroid::from_matrix(eq4), eq4, "storage matrix");
  std::mt19937_64 rng(8008);
  for (int t = 0; t < 40; ++t) {
    const int n = 2 + t % 11;
    const auto a = testing::random_matrix(rng, 1 + static_cast<int>(rng() % n), n, t % 2 ? 3 : 7, 30);
    lattice_vs_matrix(Matroid::from_matrix(a), a, "random matrix " + std::to_string(t));
  }
  for (size_t i = 0; i < g_represented.size(); ++i) {
    lattice_vs_matrix(g_represented_targets[i], g_represented[i], "represented fixture " + std::to_string(i));
  }
  auto suite = testing::set_system_suite(8080, 30, 3, 12);
  suite.push_back(testing::three_clouds());
  for (const auto& sys : suite) {
    const auto lattice_side = general_construction(sys);
    const auto gammoid_side = gammoid_matroid(build_graph(sys));
    o.require(table_agrees(lattice_side, [&](const GroundSubset& x) { return gammoid_side.rank(x); }) &&
                  table_agrees(lattice_side, [&](const GroundSubset& x) {
                    return testing::rank_by_independence(
                        x, [&](const GroundSubset& y) { return testing::set_system_independent(sys, y); });
                  }),
              "lattice and gammoid backings disagree on " + io::to_json(sys).dump());
    ++pairs;
  }
  o.detail = std::to_string(pairs) + " backing pairs agree on all subsets" + (o.detail.empty() ? "" : "; " + o.detail);
  return o;
}

}  // namespace
}  // namespace lrcm

int main() {
  struct Criterion {
    const char* name;
    lrcm::Outcome (*fn)();
    double limit_s;  // runtime limit; 0 when none is set
  };
  const Criterion criteria[] = {{"AC1 storage matrix fixture", lrcm::ac1, 1},
                                {"AC2 graph constructions", lrcm::ac2, 5},
                                {"AC3 gammoid equivalence", lrcm::ac3, 30},
                                {"AC4 representation", lrcm::ac4, 120},
                                {"AC5 bound invariants", lrcm::ac5, 0},
                                {"AC6 dmax decision soundness", lrcm::ac6, 600},
                                {"AC7 axiom validator discrimination", lrcm::ac7, 0},
                                {"AC8 oracle agreement", lrcm::ac8, 0}};
  int failed = 0;
  for (const auto& [name, fn, limit_s] : criteria) {
    const auto start = lrcm::Clock::now();
    lrcm::Outcome o;
    try {
      o = fn();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(lrcm::Clock::now() - start).count();
    if (limit_s > 0) o.require(secs < limit_s, "over the " + std::to_string(static_cast<int>(limit_s)) + " s limit");
    std::printf("%s %s (%.2f s)%s%s\n", o.pass ? "PASS" : "FAIL", name, secs, o.detail.empty() ? "" : ": ",
                o.detail.c_str());
    std::fflush(stdout);
    failed += !o.pass;
  }
  return failed == 0 ? 0 : 1;
}
