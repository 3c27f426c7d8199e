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


#include "fsl/cross_ratios.hpp"

#include <string>

#include <gtest/gtest.h>

#include "fsl/random.hpp"
#include "fsl/reduction.hpp"
#include "oracles.hpp"

namespace fsl {
namespace {

using testing::HandGram;
using testing::HandOmega;

struct Case {
  int eps, d, r;
};

std::string CaseName(const ::testing::TestParamInfo<Case>& info) {
  const Case& c = info.param;
  return std::string(c.eps > 0 ? "plus" : "minus") + "_d" + std::to_string(c.d) + "_r" +
         std::to_string(c.r);
}

class CrossRatioCase : public ::testing::TestWithParam<Case> {
 protected:
  FormedSpace Space() const {
    return FormedSpace::Make(GetParam().eps, GetParam().d, GetParam().r);
  }
};

TEST_P(CrossRatioCase, MatchesPairingFormula) {
  const FormedSpace s = Space();
  const Matrix g = HandGram(s.epsilon(), s.d(), s.r());
  Rng rng(31);
  for (int k = 0; k < 20; ++k) {
    const ConfigTuple t = RandomTuple(s, 4, rng);
    const auto w = [&](int i, int j) { return HandOmega(g, t.point(i), t.point(j)); };
    const CrossRatios4 c = ComputeCrossRatios4(t);
    EXPECT_LE(RelativeResidual(c.cr0, w(0, 2) * w(1, 3) / (w(0, 3) * w(1, 2))), 1e-12);
    EXPECT_LE(RelativeResidual(c.cr1, w(1, 3) * w(2, 0) / (w(1, 0) * w(2, 3))), 1e-12);
    EXPECT_LE(RelativeResidual(c.cr2, w(2, 1) * w(0, 3) / (w(2, 3) * w(0, 1))), 1e-12);
    // Product relation.
    EXPECT_LE(RelativeResidual(c.cr0 / c.cr1 * c.cr2, Complex(s.epsilon())), 1e-12);
  }
}

TEST_P(CrossRatioCase, FourAndFiveTupleIdentities) {
  const FormedSpace s = Space();
  Rng rng(41);
  for (int k = 0; k < 50; ++k) {
    const ConfigTuple t = RandomTuple(s, 5, rng);
    for (const auto& r : FourTupleIdentityResiduals(t.Face(4))) {
      EXPECT_LE(r.residual, 1e-10) << r.name;
    }
    for (const auto& r : FiveTupleIdentityResiduals(t)) {
      EXPECT_LE(r.residual, 1e-10) << r.name;
    }
  }
  EXPECT_EQ(FourTupleIdentityResiduals(RandomTuple(s, 4, rng)).size(), 13u);
  EXPECT_EQ(FiveTupleIdentityResiduals(RandomTuple(s, 5, rng)).size(), 7u);
}

TEST_P(CrossRatioCase, InvariantUnderGroupAndRescaling) {
  const FormedSpace s = Space();
  Rng rng(43);
  for (int k = 0; k < 20; ++k) {
    const ConfigTuple t = RandomTuple(s, 4, rng);
    const Pair p = Pi3(t);
    const Pair q = Pi3(t.Transformed(RandomGroupElement(s, rng).matrix()));
    const std::array<Complex, 4> sc{{{2.0, 1.0}, {-0.5, 0.0}, {0.0, 3.0}, {1.5, -1.5}}};
    const Pair u = Pi3(t.Rescaled(sc));
    for (int i = 0; i < 2; ++i) {
      EXPECT_LE(RelativeResidual(p[i], q[i]), 1e-8);
      EXPECT_LE(RelativeResidual(p[i], u[i]), 1e-13);
    }
  }
}

TEST_P(CrossRatioCase, RandomTuplesAreGeneric) {
  const FormedSpace s = Space();
  Rng rng(47);
  for (int k = 0; k < 20; ++k) {
    EXPECT_TRUE(Certify(RandomTuple(s, 4, rng)).ok());
    EXPECT_TRUE(Certify(RandomTuple(s, 5, rng)).ok());
  }
}

INSTANTIATE_TEST_SUITE_P(Cases, CrossRatioCase,
                         ::testing::Values(Case{1, 0, 2}, Case{1, 0, 3}, Case{1, 1, 2},
                                           Case{1, 1, 4}, Case{-1, 0, 2}, Case{-1, 0, 3}),
                         CaseName);

TEST(ConfigTuple, RejectsNonIsotropicPoints) {
  const FormedSpace s = FormedSpace::Make(1, 0, 2);
  Vector v = s.Basis(Slot::E(1)) + s.Basis(Slot::F(1));
  EXPECT_THROW(ConfigTuple::Make(s, {s.Basis(Slot::E(2)), v}), InvalidArgument);
  EXPECT_THROW(ConfigTuple::Make(s, {Vector::Zero(4)}), InvalidArgument);
  EXPECT_THROW(ConfigTuple::Make(s, {Vector::Ones(3)}), InvalidArgument);
}

TEST(Certify, NamesAVanishingPairing) {
  const FormedSpace s = FormedSpace::Make(1, 0, 3);
  Rng rng(1);
  std::vector<Vector> pts = {s.Basis(Slot::E(3)), s.Basis(Slot::E(2)),
                             RandomIsotropic(s, rng), RandomIsotropic(s, rng)};
  const ConfigTuple t = ConfigTuple::Make(s, pts);
  const GenericityCertificate c = Certify(t);
  EXPECT_FALSE(c.ok());
  EXPECT_EQ(c.failing, "omega(v0,v1)");
  try {
    RequireGeneric(t);
    FAIL() << "expected a genericity error";
  } catch (const GenericityError& e) {
    EXPECT_EQ(e.predicate(), "omega(v0,v1)");
  }
}

TEST(Certify, NamesDeltaOnTheExcludedLocus) {
  // eps = -1: Delta = (1 - z1 - z2)^2 vanishes on z1 + z2 = 1. In rank 2 the
  // tuple also loses general position, so push v3 off the span with an
  // isotropic vector orthogonal to everything; the Gram matrix is unchanged.
  const FormedSpace s = FormedSpace::Make(-1, 0, 3);
  const Pair a{Complex(0.3, 0.2), Complex(0.7, -0.2)};
  std::vector<Vector> pts = Phi2(s).points();
  pts.push_back(Phi3Vector(s, a));
  const Vector u = s.Basis(Slot::E(1));
  for (const Vector& p : pts) ASSERT_LE(std::abs(s.Omega(u, p)), 1e-15);
  pts[3] += u;
  const ConfigTuple t = ConfigTuple::Make(s, pts);
  const GenericityCertificate c = Certify(t);
  EXPECT_TRUE(c.pairwise);
  EXPECT_TRUE(c.general_position);
  EXPECT_FALSE(c.nondegenerate);
  EXPECT_EQ(c.failing, "Delta");
}

TEST(Certify, DeltaLocusInRankTwoLosesGeneralPosition) {
  const FormedSpace s = FormedSpace::Make(-1, 0, 2);
  std::vector<Vector> pts = Phi2(s).points();
  pts.push_back(Phi3Vector(s, Pair{Complex(0.3, 0.2), Complex(0.7, -0.2)}));
  const GenericityCertificate c = Certify(ConfigTuple::Make(s, pts));
  EXPECT_TRUE(c.pairwise);
  EXPECT_EQ(c.failing, "general_position");
}

TEST(Certify, GeneralPositionFailsForRepeatedLines) {
  const FormedSpace s = FormedSpace::Make(1, 1, 2);
  Rng rng(4);
  const Vector v = RandomIsotropic(s, rng);
  const Vector w = RandomIsotropic(s, rng);
  const ConfigTuple t =
      ConfigTuple::Make(s, {v, w, v + Complex(0, 1e-14) * w, RandomIsotropic(s, rng)}, 1.0);
  EXPECT_FALSE(Certify(t).ok());
}

TEST(ClosedForms, GammaDeltaVarphi) {
  Rng rng(8);
  for (int k = 0; k < 50; ++k) {
    const Complex z1 = rng.ComplexGaussian();
    const Complex z2 = rng.ComplexGaussian();
    EXPECT_EQ(Gamma(z1, z2), 1.0 - z1 - z2);
    for (int eps : {1, -1}) {
      const Complex g = 1.0 - z1 - z2;
      EXPECT_LE(std::abs(Delta(eps, z1, z2) - (g * g - 2.0 * (1.0 + eps) * z1 * z2)),
                1e-12 * std::max(1.0, std::norm(g)));
      const Complex sq = SqrtDelta(eps, z1, z2);
      EXPECT_LE(RelativeResidual(sq * sq, Delta(eps, z1, z2)), 1e-13);
      // phi+ phi- = (Delta - Gamma^2) / 4.
      const Complex prod = Varphi(eps, 1, z1, z2) * Varphi(eps, -1, z1, z2);
      EXPECT_LE(std::abs(prod + (1.0 + eps) * z1 * z2 / 2.0),
                1e-12 * std::max(1.0, std::abs(z1 * z2)));
    }
  }
  EXPECT_EQ(SqrtDelta(-1, 0.25, 0.5), Complex(0.25));
}

}  // namespace
}  // namespace fsl
