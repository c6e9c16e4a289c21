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

#include "lrcm/represent.hpp"

#include <gtest/gtest.h>

#include "lrcm/construct.hpp"
#include "support.hpp"

namespace lrcm {
namespace {

// Rank tables compared through the independent dense elimination.
bool represents(const FieldMatrix& a, const Matroid& m) {
  const auto table = testing::table_of(m);
  for (uint64_t mask = 0; mask < table.size(); ++mask) {
    if (testing::dense_rank(a, GroundSubset::from_mask(m.ground_size(), mask)) != table[mask]) return false;
  }
  return true;
}

TEST(CodeDistance, Fixtures) {
  EXPECT_EQ(code_min_distance(testing::eq4_matrix()), 3);
  EXPECT_EQ(code_min_distance(FieldMatrix::identity(PrimeField(7), 5)), 1);
  EXPECT_EQ(code_min_distance(FieldMatrix::from_rows(PrimeField(5), {{1, 0, 1, 1}, {0, 1, 1, 2}})), 3);
  EXPECT_EQ(code_min_distance(FieldMatrix::from_rows(PrimeField(3), {{1, 1, 1, 1, 1}})), 5);
}

TEST(CodeDistance, MatchesDefinitionOnRandomMatrices) {
  std::mt19937_64 rng(12);
  for (int t = 0; t < 80; ++t) {
    const int n = 3 + t % 8;
    const int k = 1 + static_cast<int>(rng() % n);
    const auto a = testing::random_matrix(rng, k, n, 5, 30);
    if (matrix_rank(a) == 0) continue;
    const auto m = Matroid::from_matrix(a);
    EXPECT_EQ(code_min_distance(a), testing::distance_from_table(n, testing::table_of(m)));
    if (*cyclic_flats(m).top() == GroundSubset::full(n)) {
      EXPECT_EQ(code_min_distance(a), min_distance(m));
    }
  }
}

TEST(FindRepresentation, UniformOverFive) {
  const auto u = uniform_matroid(4, 2);
  const auto r = find_representation(u, 5, 1);
  ASSERT_TRUE(r.found);
  EXPECT_TRUE(represents(*r.matrix, u));
  EXPECT_EQ(r.matrix->field().modulus(), 5u);
  EXPECT_EQ(code_min_distance(*r.matrix), 3);
}

TEST(FindRepresentation, StorageMatrixCertifiesItself) {
  const auto m = Matroid::from_matrix(testing::eq4_matrix());
  const auto r = find_representation(m, 5, 1);
  ASSERT_TRUE(r.found);
  EXPECT_EQ(r.sampler, "given");
  EXPECT_TRUE(represents(*r.matrix, m));
}

TEST(FindRepresentation, StorageMatroidNotFoundOverTwo) {
  // Empirical: no certified matrix turns up over GF(2) within the budget.
  const auto m = Matroid::from_matrix(testing::eq4_matrix());
  const auto r = find_representation(m, 2, 1, 2000);
  EXPECT_FALSE(r.found);
  EXPECT_EQ(r.attempts, 2000);
}

TEST(FindRepresentation, CloudSystemOverLargerField) {
  const auto m = general_construction(testing::three_clouds());
  const auto r = find_representation(m, 13, 7);
  ASSERT_TRUE(r.found);
  EXPECT_EQ(r.sampler, "gammoid");
  EXPECT_TRUE(represents(*r.matrix, m));
  EXPECT_EQ(code_min_distance(*r.matrix), min_distance(m));
}

TEST(FindRepresentation, PerfectWitnessMeetsBound) {
  const auto v = dmax_decide(12, 7, 3, 2);
  ASSERT_TRUE(v.perfect());
  const auto r = find_representation(*v.witness, 8191, 3);
  ASSERT_TRUE(r.found);
  EXPECT_TRUE(represents(*r.matrix, *v.witness));
  EXPECT_EQ(code_min_distance(*r.matrix), singleton_bound(12, 7, 3, 2));
}

TEST(FindRepresentation, SetSystemSuiteOverLargePrime) {
  for (const auto& sys : testing::set_system_suite(555, 12, 4, 10)) {
    const auto m = general_construction(sys);
    const auto r = find_representation(m, 8191, 11, 200);
    ASSERT_TRUE(r.found);
    EXPECT_TRUE(represents(*r.matrix, m));
  }
}

TEST(FindRepresentation, DeterministicAcrossJobs) {
  const auto m = general_construction(testing::three_clouds());
  const auto one = find_representation(m, 11, 42, 10'000, 1);
  const auto again = find_representation(m, 11, 42, 10'000, 1);
  const auto four = find_representation(m, 11, 42, 10'000, 4);
  ASSERT_TRUE(one.found);
  EXPECT_EQ(one.attempts, again.attempts);
  EXPECT_EQ(one.attempts, four.attempts);
  EXPECT_EQ(io::to_json(*one.matrix), io::to_json(*again.matrix));
  EXPECT_EQ(io::to_json(*one.matrix), io::to_json(*four.matrix));
  const auto other = find_representation(m, 11, 43, 10'000, 1);
  ASSERT_TRUE(other.found);
  EXPECT_NE(io::to_json(*one.matrix), io::to_json(*other.matrix));
}

TEST(FindRepresentation, Preconditions) {
  EXPECT_THROW(find_representation(uniform_matroid(17, 3), 5, 1), CapacityError);
  EXPECT_THROW(find_representation(uniform_matroid(4, 2), 6, 1), DomainError);
}

TEST(FieldScan, ReportsEveryPrime) {
  const auto free = Matroid::from_matrix(FieldMatrix::identity(PrimeField(3), 4));
  const auto scan = min_field_scan(free, {2}, 1);
  ASSERT_EQ(scan.size(), 1u);
  EXPECT_TRUE(scan[0].found);

  const auto u = uniform_matroid(6, 3);
  const auto us = min_field_scan(u, {2, 7, 11}, 5, 500);
  ASSERT_EQ(us.size(), 3u);
  EXPECT_FALSE(us[0].found);  // no [6,3,4] MDS code over GF(2)
  EXPECT_TRUE(us[1].found);
  EXPECT_TRUE(us[2].found);
}

}  // namespace
}  // namespace lrcm
