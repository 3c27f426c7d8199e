// Copyright 2026 The fsl Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include "fsl/linalg.hpp"
#include "fsl/random.hpp"

#include <gtest/gtest.h>

#include <set>

namespace fsl {
namespace {

TEST(Random, StreamsAreReproducibleAndDistinct) {
  EXPECT_EQ(StreamSeed(1, "a", 0), StreamSeed(1, "a", 0));
  std::set<std::uint64_t> seen;
  for (std::uint64_t seed : {0ull, 1ull, 2ull}) {
    for (const char* label : {"a", "b", "cross-ratios"}) {
      for (std::uint64_t i = 0; i < 100; ++i) seen.insert(StreamSeed(seed, label, i));
    }
  }
  EXPECT_EQ(seen.size(), 900u);
  Rng a(5), b(5);
  for (int k = 0; k < 10; ++k) EXPECT_EQ(a.Gaussian(), b.Gaussian());
}

TEST(Random, GaussianMoments) {
  Rng rng(12);
  double s = 0, s2 = 0;
  constexpr int kN = 200000;
  for (int k = 0; k < kN; ++k) {
    const double x = rng.Gaussian();
    s += x;
    s2 += x * x;
  }
  EXPECT_NEAR(s / kN, 0.0, 0.01);
  EXPECT_NEAR(s2 / kN, 1.0, 0.02);
  for (int k = 0; k < 1000; ++k) {
    const double u = rng.Uniform(-1.0, 2.0);
    EXPECT_GE(u, -1.0);
    EXPECT_LT(u, 2.0);
  }
}

TEST(Linalg, RankAndNullspace) {
  Rng rng(3);
  const Matrix a = rng.ComplexGaussianMatrix(5, 3);
  Matrix m(5, 4);
  m << a, a.col(0) - Complex(0, 2) * a.col(2);
  EXPECT_EQ(NumericalRank(m), 3);
  EXPECT_FALSE(HasFullColumnRank(m));
  EXPECT_TRUE(HasFullColumnRank(a));
  const Matrix ns = OrthonormalNullspace(m);
  ASSERT_EQ(ns.cols(), 1);
  EXPECT_LE((m * ns).norm(), 1e-12);
  EXPECT_EQ(OrthonormalColumnBasis(m).cols(), 3);
}

TEST(Linalg, FullRankTestAgreesWithSvdRank) {
  Rng rng(4);
  for (int k = 0; k < 200; ++k) {
    Matrix m = rng.ComplexGaussianMatrix(4, 3);
    if (k % 3 == 0) m.col(2) = m.col(0) * Complex(1.5, -0.5) + m.col(1) * 1e-12;
    EXPECT_EQ(HasFullColumnRank(m), NumericalRank(m) == 3) << k;
  }
}

TEST(Linalg, ConditionNumber) {
  Matrix d = Matrix::Zero(3, 3);
  d.diagonal() << 10.0, 1.0, 0.1;
  EXPECT_NEAR(ConditionNumber(d), 100.0, 1e-10);
}

}  // namespace
}  // namespace fsl
