// Copyright 2026 The rpsgraph Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "rpsgraph/linear_system.h"

#include <random>
#include <vector>

#include "absl/status/status.h"
#include "gtest/gtest.h"
#include "oracles.h"
#include "rpsgraph/rational.h"

namespace rpsgraph {
namespace {

IntMatrix RandomMatrix(int n, int lo, int hi, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> dist(lo, hi);
  IntMatrix a(n, std::vector<BigInt>(n));
  for (auto& row : a) {
    for (BigInt& x : row) x = dist(rng);
  }
  return a;
}

TEST(DeterminantTest, MatchesPermutationExpansion) {
  std::mt19937_64 rng(1);
  for (int n = 1; n <= 6; ++n) {
    for (int trial = 0; trial < 40; ++trial) {
      // Small entries give plenty of singular and pivot-swapping cases.
      const IntMatrix a = RandomMatrix(n, -2, 2, rng);
      EXPECT_EQ(Determinant(a), oracle::PermutationDeterminant(a));
    }
  }
}

TEST(DeterminantTest, ZeroSizeIsOne) { EXPECT_EQ(Determinant({}), 1); }

TEST(SolveFractionFreeTest, MatchesGaussJordan) {
  std::mt19937_64 rng(2);
  for (int n = 1; n <= 7; ++n) {
    for (int trial = 0; trial < 40; ++trial) {
      const IntMatrix a = RandomMatrix(n, -3, 3, rng);
      std::vector<BigInt> b = RandomMatrix(1, -5, 5, rng)[0];
      b.resize(n, 1);
      std::vector<std::vector<Rational>> qa(n, std::vector<Rational>(n));
      std::vector<Rational> qb(n);
      for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) qa[i][j] = a[i][j];
        qb[i] = b[i];
      }
      const auto expected = oracle::GaussJordan(qa, qb);
      absl::StatusOr<ExactSolution> got = SolveFractionFree(a, b);
      ASSERT_EQ(got.ok(), expected.has_value());
      if (!got.ok()) {
        EXPECT_EQ(got.status().code(), absl::StatusCode::kFailedPrecondition);
        continue;
      }
      EXPECT_EQ(got->values, *expected);
      EXPECT_EQ(got->determinant, oracle::PermutationDeterminant(a));
    }
  }
}

TEST(SolveFractionFreeTest, NeedsPivotSwap) {
  absl::StatusOr<ExactSolution> s =
      SolveFractionFree({{0, 1}, {1, 0}}, {BigInt(3), BigInt(5)});
  ASSERT_TRUE(s.ok());
  EXPECT_EQ(s->values, (std::vector<Rational>{5, 3}));
  EXPECT_EQ(s->determinant, -1);
}

TEST(SolveFractionFreeTest, RejectsShapeMismatch) {
  EXPECT_FALSE(SolveFractionFree({{1, 2}, {3, 4}}, {BigInt(1)}).ok());
  EXPECT_FALSE(SolveFractionFree({{1, 2}}, {BigInt(1)}).ok());
}

TEST(RationalTest, ToStringAndParse) {
  EXPECT_EQ(ToString(Rational(2, 6)), "1/3");
  EXPECT_EQ(ToString(Rational(4, 2)), "2");
  EXPECT_EQ(ToString(Rational(-3, 9)), "-1/3");
  EXPECT_EQ(*ParseRational("6/8"), Rational(3, 4));
  EXPECT_EQ(*ParseRational("-7"), Rational(-7));
  EXPECT_FALSE(ParseRational("1/0").ok());
  EXPECT_FALSE(ParseRational("0.5").ok());
  EXPECT_FALSE(ParseRational("").ok());
  EXPECT_FALSE(ParseRational("1/2/3").ok());
}

TEST(RationalTest, ScaleToIntegers) {
  const std::vector<Rational> v = {Rational(1, 9), Rational(1, 9),
                                   Rational(1, 9), Rational(1, 3),
                                   Rational(1, 3)};
  EXPECT_EQ(CommonDenominator(v), 9);
  EXPECT_EQ(ScaleToIntegers(v),
            (std::vector<BigInt>{1, 1, 1, 3, 3}));
  EXPECT_EQ(ScaleToIntegers(std::vector<Rational>{0, Rational(2, 5)}),
            (std::vector<BigInt>{0, 2}));
}

}  // namespace
}  // namespace rpsgraph
