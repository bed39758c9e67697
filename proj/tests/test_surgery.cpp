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

#include "gamma4/surgery.hpp"
#include "sample_family.hpp"

namespace gamma4 {
namespace {

TEST(DInvariant, Examples) {
  EXPECT_EQ(d_invariant(KnotExpression(), 3, 1), Rational(-1, 6));
  EXPECT_EQ(d_invariant(parse("T(2,3)"), 1, 0), Rational(-2));
  EXPECT_EQ(d_invariant(KnotExpression(), 1, 0), Rational(0));
  EXPECT_THROW(d_invariant(KnotExpression(), 3, 3), InvalidArgument);
  EXPECT_THROW(d_invariant(KnotExpression(), 0, 0), InvalidArgument);
}

TEST(DInvariantNegative, Examples) {
  const auto k = parse("T(2,3) - T(5,6)");
  EXPECT_EQ(d_invariant_negative(k, -1, 0), -d_invariant(mirror(k), 1, 0));
  EXPECT_EQ(d_invariant_negative(k, -1, 0), Rational(2 * vi_expr(mirror(k))[0]));
  EXPECT_EQ(d_invariant_negative(KnotExpression(), -3, 1), Rational(1, 6));
  EXPECT_EQ(d_invariant_negative(parse("T(3,-5)"), -1, 0), Rational(4));
  EXPECT_THROW(d_invariant_negative(k, 2, 0), InvalidArgument);
}

TEST(DInvariant, LabelDispatch) {
  const auto k = parse("T(3,4)");
  EXPECT_EQ(d_invariant(k, SpincLabel(5, 2)), d_invariant(k, 5, 2));
  EXPECT_EQ(d_invariant(k, SpincLabel(-5, 2)), d_invariant_negative(k, -5, 2));
  EXPECT_THROW(SpincLabel(0, 0), InvalidArgument);
  EXPECT_THROW(SpincLabel(-3, 3), InvalidArgument);
  EXPECT_THROW(SpincLabel(4, -1), InvalidArgument);
}

TEST(DInvariant, UnknotIsTheLensQuadratic) {
  for (std::int64_t n = 1; n <= 50; ++n) {
    const auto row = d_table(KnotExpression(), n);
    for (std::int64_t k = 0; k < n; ++k) {
      const Rational expected((2 * k - n) * (2 * k - n) - n, 4 * n);
      EXPECT_EQ(row[static_cast<std::size_t>(k)], expected);
      EXPECT_EQ(d_invariant(KnotExpression(), n, k), expected);
      EXPECT_EQ(lens_term(n, k), expected);
    }
  }
}

TEST(DInvariant, ConjugationSymmetryAndSignConsistency) {
  for (const auto& e : testing::sample_subset(60, 12, 3)) {
    for (std::int64_t n : {1, 2, 3, 5, 8, 13}) {
      const auto row = d_table(e, n);
      const auto neg = d_table(e, -n);
      for (std::int64_t k = 1; k < n; ++k) {
        EXPECT_EQ(row[static_cast<std::size_t>(k)], row[static_cast<std::size_t>(n - k)]);
        EXPECT_EQ(neg[static_cast<std::size_t>(k)], d_invariant_negative(e, -n, k));
      }
      EXPECT_EQ(row[0], d_invariant(e, n, 0));
    }
    EXPECT_EQ(d_invariant(e, 1, 0) + d_invariant_negative(mirror(e), -1, 0), Rational(0));
    EXPECT_EQ(d_invariant_negative(e, -1, 0), Rational(2 * vi_expr(mirror(e))[0])) << render(e);
  }
}

}  // namespace
}  // namespace gamma4
