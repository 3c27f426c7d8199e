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


#include "fsl/flags.hpp"

#include <gtest/gtest.h>

#include <numeric>

#include "fsl/dilogarithm.hpp"
#include "fsl/forms.hpp"
#include "fsl/random.hpp"

namespace fsl {
namespace {

std::vector<AffineFlag> RandomFlags(int n, int k, Rng& rng) {
  std::vector<AffineFlag> f;
  for (int i = 0; i < k; ++i) f.push_back(RandomFlag(n, rng));
  return f;
}

TEST(AffineFlag, RejectsDependentVectors) {
  Matrix m = Matrix::Identity(3, 3);
  m.col(2) = m.col(0) + m.col(1);
  EXPECT_THROW(AffineFlag::Make(m), InvalidArgument);
  EXPECT_THROW(AffineFlag::Make(Matrix::Identity(3, 2)), InvalidArgument);
}

class BnDegree : public ::testing::TestWithParam<int> {};

TEST_P(BnDegree, PrunedSumEqualsBruteForce) {
  const int n = GetParam();
  Rng rng(100 + n);
  for (int k = 0; k < 10; ++k) {
    const auto f = RandomFlags(n, 4, rng);
    ASSERT_TRUE(GeneralPosition(f));
    EXPECT_NEAR(Bn(f), BnFull(f), 1e-12);
  }
}

TEST_P(BnDegree, ContributingIndicesHaveNormNMinusTwo) {
  const int n = GetParam();
  Rng rng(200 + n);
  const auto f = RandomFlags(n, 4, rng);
  const auto js = ContributingIndices(f);
  EXPECT_EQ(static_cast<int>(js.size()), n * (n * n - 1) / 6);
  for (const IndexTuple& j : js) {
    EXPECT_EQ(std::accumulate(j.begin(), j.end(), 0), n - 2);
  }
}

TEST_P(BnDegree, CocycleAlternationInvariance) {
  const int n = GetParam();
  Rng rng(300 + n);
  for (int k = 0; k < 10; ++k) {
    const auto five = RandomFlags(n, 5, rng);
    const CocycleCheck c = CocycleResidual(five);
    ASSERT_TRUE(c.general_position);
    EXPECT_LE(c.residual, 1e-10);

    const std::vector<AffineFlag> f(five.begin(), five.end() - 1);
    const double b = Bn(f);
    std::vector<AffineFlag> s = {f[1], f[0], f[2], f[3]};
    EXPECT_NEAR(Bn(s), -b, 1e-11);
    const Matrix g = rng.ComplexGaussianMatrix(n, n);
    std::vector<AffineFlag> gf;
    for (const auto& x : f) gf.push_back(x.Transformed(g));
    EXPECT_NEAR(Bn(gf), b, 1e-10);
    EXPECT_LE(std::abs(b), n * (n * n - 1) / 6.0 * MaxBlochWigner() + 1e-9);
  }
}

INSTANTIATE_TEST_SUITE_P(Degrees, BnDegree, ::testing::Values(2, 3, 4));

TEST(Bn, DegreeTwoIsTheP1Volume) {
  Rng rng(7);
  for (int k = 0; k < 10; ++k) {
    const auto f = RandomFlags(2, 4, rng);
    std::array<Eigen::Vector2cd, 4> p;
    for (int i = 0; i < 4; ++i) p[i] = f[i].vec(1);
    EXPECT_NEAR(std::abs(Bn(f)), std::abs(VolP1(p)), 1e-13);
  }
}

TEST(GeneralPosition, FailsForRepeatedFlags) {
  Rng rng(8);
  auto f = RandomFlags(3, 4, rng);
  f[3] = f[0];
  EXPECT_FALSE(GeneralPosition(f));
  EXPECT_NEAR(Bn(f), BnFull(f), 1e-12);
}

TEST(So4Boundary, PhiLiesOnBothLines) {
  const FormedSpace s = FormedSpace::Make(1, 0, 2);
  const Complex a(0.3, -1.1), b(2.0, 0.5);
  const Vector phi = PhiAB(a, b);
  EXPECT_LE(std::abs(s.Q(phi)), 1e-14);
  for (const Matrix& l : {LinePlus(a), LineMinus(b)}) {
    Matrix m(4, 3);
    m << l, phi;
    Eigen::JacobiSVD<Matrix> svd(m);
    EXPECT_LE(svd.singularValues()(2), 1e-12);
    // Isotropic planes.
    EXPECT_LE((l.transpose() * s.gram() * l).cwiseAbs().maxCoeff(), 1e-14);
  }
  const AffineFlag f = StandardFlagSO4(a, b);
  EXPECT_LE(ProjectiveDistance(f.vec(1), phi), 1e-12);
}

TEST(B4Standard, ClosedFormAndTable) {
  const Complex a(0.3, 0.8), b(-1.2, 0.4);
  EXPECT_NEAR(B4Standard(a, b), 2.0 * (BlochWigner(a) + BlochWigner(b)), 1e-12);
  const std::array<AffineFlag, 4> f{Rho(BoundaryPoint::Infinity()), StandardFlagSO4(0.0, 0.0),
                                    StandardFlagSO4(1.0, 1.0), StandardFlagSO4(a, b)};
  EXPECT_NEAR(BnJ(f, {2, 0, 0, 0}), BlochWigner(b), 1e-12);
  EXPECT_NEAR(BnJ(f, {0, 0, 0, 2}), BlochWigner(b), 1e-12);
  EXPECT_NEAR(BnJ(f, {1, 1, 0, 0}), -BlochWigner(b / a), 1e-12);
  EXPECT_NEAR(BnJ(f, {0, 1, 0, 1}), BlochWigner((1.0 - b) / (1.0 - a)), 1e-12);
  EXPECT_NEAR(BnJ(f, {0, 1, 1, 0}), -BlochWigner(a * (1.0 - b) / (b * (1.0 - a))), 1e-12);
  // Peak at both coordinates equal to exp(i pi/3).
  const Complex w = std::polar(1.0, std::acos(-1.0) / 3.0);
  EXPECT_NEAR(B4Standard(w, w), 4.0 * MaxBlochWigner(), 1e-10);
}

TEST(B4Standard, RhoVariantsAgreeOnTheStandardConfiguration) {
  const Complex a(0.7, 0.2), b(0.1, -0.9);
  std::vector<AffineFlag> plus, minus;
  for (const BoundaryPoint& p :
       {BoundaryPoint::Infinity(), BoundaryPoint::Finite(0.0, 0.0),
        BoundaryPoint::Finite(1.0, 1.0), BoundaryPoint::Finite(a, b)}) {
    plus.push_back(Rho(p, RhoVariant::kPlusFirst));
    minus.push_back(Rho(p, RhoVariant::kMinusFirst));
  }
  EXPECT_NEAR(std::abs(Bn(plus)), std::abs(Bn(minus)), 1e-10);
}

}  // namespace
}  // namespace fsl
