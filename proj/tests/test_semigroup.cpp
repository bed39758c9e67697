// Copyright 2026 The gamma4 Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS-IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include <numeric>
#include <random>

#include "gamma4/semigroup.hpp"
#include "oracles.hpp"

namespace gamma4 {
namespace {

std::vector<std::int64_t> gap_vector(const FormalSemigroup& s) { return {s.gaps().begin(), s.gaps().end()}; }

TEST(FromGenerators, Examples) {
  const auto s211 = from_generators(2, 11);
  EXPECT_EQ(gap_vector(s211), (std::vector<std::int64_t>{1, 3, 5, 7, 9}));
  EXPECT_EQ(s211.genus(), 5);
  EXPECT_EQ(from_generators(5, 26).genus(), 50);
  EXPECT_EQ(gap_vector(from_generators(2, 3)), (std::vector<std::int64_t>{1}));
  EXPECT_EQ(gap_vector(from_generators(3, 5)), (std::vector<std::int64_t>{1, 2, 4, 7}));
  EXPECT_THROW(from_generators(4, 6), NotCoprime);
}

TEST(Enumerating, Examples) {
  EXPECT_EQ(enumerating(from_generators(2, 11), 3), 6);
  EXPECT_EQ(enumerating(from_generators(7, 9), 0), 0);
  EXPECT_EQ(enumerating(from_generators(5, 26), 7), 30);
  EXPECT_EQ(enumerating(FormalSemigroup(), 4), 4);
}

TEST(EnumeratingBruteforce, Examples) {
  EXPECT_EQ(enumerating_bruteforce(2, 11, 7), 12);
  EXPECT_EQ(enumerating_bruteforce(2, 3, 1), 2);
  EXPECT_EQ(enumerating_bruteforce(5, 26, 6), 26);
  EXPECT_THROW(enumerating_bruteforce(6, 9, 1), NotCoprime);
}

TEST(EnumeratingFunction, PiecewiseShapeOfTheTwoFamilies) {
  // <2, 10l+1>: 2k up to k = 5l, then 5l + k.
  for (std::int64_t l = 1; l <= 6; ++l) {
    const auto s = from_generators(2, 10 * l + 1);
    for (std::int64_t k = 0; k <= 20 * l; ++k) EXPECT_EQ(s.enumerate(k), k <= 5 * l ? 2 * k : 5 * l + k);
  }
}

TEST(FromVi, Examples) {
  EXPECT_EQ(from_vi(ViSequence::from_values({1, 0})), from_generators(2, 3));
  EXPECT_EQ(from_vi(ViSequence::from_values({2, 1, 1, 1, 0})), from_generators(3, 5));
  EXPECT_EQ(from_vi(ViSequence::from_values({0})).genus(), 0);
  EXPECT_THROW(ViSequence::from_values({2, 0}), MalformedSequence);
  EXPECT_THROW(ViSequence::from_values({1, 2, 0}), MalformedSequence);
  EXPECT_THROW(ViSequence::from_values({1, 1}), MalformedSequence);
}

TEST(FormalSemigroup, RejectsAsymmetricGapSets) {
  EXPECT_THROW(FormalSemigroup::from_gaps({0}), MalformedSequence);
  EXPECT_THROW(FormalSemigroup::from_gaps({1, 2}), MalformedSequence);
  EXPECT_THROW(FormalSemigroup::from_gaps({1, 1}), MalformedSequence);
  EXPECT_THROW(FormalSemigroup::from_gaps({5}), MalformedSequence);
  EXPECT_NO_THROW(FormalSemigroup::from_gaps({1, 3}));
}

std::vector<std::pair<std::int64_t, std::int64_t>> coprime_pairs(std::int64_t max_product) {
  std::vector<std::pair<std::int64_t, std::int64_t>> out;
  for (std::int64_t a = 2; a * (a + 1) <= max_product; ++a)
    for (std::int64_t b = a + 1; a * b <= max_product; ++b)
      if (std::gcd(a, b) == 1) out.push_back({a, b});
  return out;
}

TEST(SemigroupOracle, ClosedTailMatchesSieveOnRandomPairs) {
  const auto pairs = coprime_pairs(2000);
  std::mt19937 rng(2026);
  std::uniform_int_distribution<std::size_t> pick(0, pairs.size() - 1);
  std::uniform_int_distribution<std::int64_t> kdist(0, 10000);
  for (int trial = 0; trial < 200; ++trial) {
    const auto [a, b] = pairs[pick(rng)];
    const auto s = from_generators(a, b);
    std::vector<std::int64_t> ks = {0, s.genus() - 1, s.genus(), s.genus() + 1, 10000};
    for (int i = 0; i < 20; ++i) ks.push_back(kdist(rng));
    for (auto k : ks) {
      if (k < 0) continue;
      EXPECT_EQ(s.enumerate(k), enumerating_bruteforce(a, b, k)) << a << "," << b << " k=" << k;
    }
  }
}

TEST(SemigroupOracle, GapsAgreeWithExplicitCombinations) {
  for (const auto& [a, b] : coprime_pairs(400)) {
    EXPECT_EQ(gap_vector(from_generators(a, b)), oracle::gaps(a, b)) << a << "," << b;
  }
}

TEST(SemigroupProperties, StrictlyIncreasingWithGenusTail) {
  for (const auto& [a, b] : coprime_pairs(600)) {
    const auto s = from_generators(a, b);
    const std::int64_t g = s.genus();
    EXPECT_EQ(g, (a - 1) * (b - 1) / 2);
    EXPECT_EQ(s.enumerate(0), 0);
    for (std::int64_t k = 0; k < g + 5; ++k) EXPECT_LT(s.enumerate(k), s.enumerate(k + 1));
    for (std::int64_t k = g; k < g + 5; ++k) EXPECT_EQ(s.enumerate(k), g + k);
    for (std::int64_t x = 0; x < 2 * g; ++x) EXPECT_NE(s.contains(x), s.contains(2 * g - 1 - x));
    EXPECT_FALSE(s.contains(a * b - a - b));  // Frobenius number
    EXPECT_TRUE(s.contains(a * b - a - b + 1));
  }
}

TEST(SemigroupProperties, FromViRoundTripsOnAllSmallPairs) {
  for (const auto& [a, b] : coprime_pairs(2000)) {
    const auto s = from_generators(a, b);
    const ViSequence v = vi_of(s);
    EXPECT_EQ(from_vi(v), s) << a << "," << b;
    EXPECT_EQ(std::vector<std::int64_t>(v.values().begin(), v.values().end()),
              oracle::vi_from_gaps(gap_vector(s)));
  }
}

}  // namespace
}  // namespace gamma4
