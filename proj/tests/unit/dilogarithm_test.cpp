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


#include "fsl/dilogarithm.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "fsl/random.hpp"
#include "oracles.hpp"

namespace fsl {
namespace {

TEST(Dilog, MatchesFrozenValues) {
  for (const auto& [z, li2] : testing::kFrozenLi2) {
    EXPECT_LE(std::abs(Dilog(z) - li2), 1e-14 * std::max(1.0, std::abs(li2))) << z;
  }
  EXPECT_NEAR(Dilog(1.0).real(), std::numbers::pi * std::numbers::pi / 6.0, 1e-15);
  EXPECT_EQ(Dilog(0.0), Complex(0.0));
}

TEST(BlochWigner, MatchesFrozenValues) {
  for (const auto& [z, d] : testing::kFrozenD) {
    EXPECT_NEAR(BlochWigner(z), d, 1e-14) << z;
  }
}

TEST(BlochWigner, VanishesOnTheRealLine) {
  for (double x : {-5.0, -1.0, 0.0, 0.3, 1.0, 2.0, 1e6}) {
    EXPECT_EQ(BlochWigner(x), 0.0) << x;
  }
}

TEST(BlochWigner, SixSymmetries) {
  Rng rng(1);
  for (int k = 0; k < 1000; ++k) {
    const Complex z = rng.ComplexGaussian() * std::exp(rng.Uniform(-3.0, 3.0));
    for (double r : SixSymmetryResiduals(z)) EXPECT_LE(r, 1e-13);
  }
}

TEST(BlochWigner, MaximumIsTheRegularIdealTetrahedron) {
  EXPECT_NEAR(MaxBlochWigner(), testing::kRegularIdealVolume, 1e-12);
  EXPECT_LE(std::abs(ArgMaxBlochWigner() - std::polar(1.0, std::numbers::pi / 3.0)), 1e-6);
}

TEST(SpenceAbel, HoldsForD) {
  Rng rng(2);
  for (int k = 0; k < 1000; ++k) {
    EXPECT_LE(SpenceAbelResidual(BlochWigner, rng.ComplexGaussian(), rng.ComplexGaussian()),
              1e-13);
  }
}

TEST(SpenceAbel, DetectsANonSolution) {
  const Function1 f = [](Complex z) { return std::abs(z) / (1.0 + std::abs(z)); };
  EXPECT_GT(std::abs(SpenceAbelResidual(f, {0.3, 0.4}, {-1.0, 2.0})), 1e-3);
}

TEST(SpenceAbel, GuardBand) {
  EXPECT_THROW(SpenceAbelResidual(BlochWigner, 0.0, {0.5, 0.5}), DomainError);
  EXPECT_THROW(SpenceAbelResidual(BlochWigner, {0.5, 0.5}, 1.0), DomainError);
  EXPECT_THROW(SpenceAbelResidual(BlochWigner, {0.5, 0.5}, {0.5, 0.5}), DomainError);
}

TEST(D3, ConstantFunctionGivesTheConstant) {
  const Function2 one = [](Complex, Complex) { return 1.0; };
  EXPECT_EQ(D3InfinityResidual(one, {1.0, 2.0, 3.0, 4.0, 5.0}, 1), 1.0);
  EXPECT_THROW(D3InfinityResidual(one, {0.0, 2.0, 3.0, 4.0, 5.0}, 1), DomainError);
}

TEST(VolP1, CrossRatioConvention) {
  // Points infinity, 0, 1, z in homogeneous coordinates.
  const Complex z(0.4, 1.3);
  const std::array<Eigen::Vector2cd, 4> p = {
      Eigen::Vector2cd(1.0, 0.0), Eigen::Vector2cd(0.0, 1.0), Eigen::Vector2cd(1.0, 1.0),
      Eigen::Vector2cd(z, 1.0)};
  EXPECT_NEAR(std::abs(VolP1(p)), std::abs(BlochWigner(z)), 1e-14);
  std::array<Eigen::Vector2cd, 4> q = p;
  std::swap(q[0], q[1]);
  EXPECT_NEAR(VolP1(q), -VolP1(p), 1e-14);
  q = p;
  q[3] = q[2];
  EXPECT_EQ(VolP1(q), 0.0);
}

}  // namespace
}  // namespace fsl
