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

#include <algorithm>
#include <cmath>
#include <limits>

#include "fsl/linalg.hpp"

namespace fsl {

ConfigTuple::ConfigTuple(FormedSpace space, std::vector<Vector> points)
    : space_(std::move(space)), points_(std::move(points)) {
  const int k = size();
  pairings_.resize(k, k);
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < k; ++j) {
      pairings_(i, j) = space_.Omega(points_[i], points_[j]);
    }
  }
}

ConfigTuple ConfigTuple::Make(const FormedSpace& space,
                              std::vector<Vector> points, double tol) {
  for (std::size_t i = 0; i < points.size(); ++i) {
    const Vector& v = points[i];
    if (v.size() != space.n()) {
      throw InvalidArgument("point " + std::to_string(i) + " has length " +
                            std::to_string(v.size()) + ", expected " +
                            std::to_string(space.n()));
    }
    const double n2 = v.squaredNorm();
    if (n2 == 0.0) {
      throw InvalidArgument("point " + std::to_string(i) + " is zero");
    }
    if (std::abs(space.Q(v)) > tol * n2) {
      throw InvalidArgument("point " + std::to_string(i) +
                            " is not isotropic");
    }
  }
  return ConfigTuple(space, std::move(points));
}

ConfigTuple ConfigTuple::Face(int i) const {
  if (i < 0 || i >= size()) throw InvalidArgument("face index out of range");
  std::vector<Vector> pts;
  for (int k = 0; k < size(); ++k) {
    if (k != i) pts.push_back(points_[k]);
  }
  return ConfigTuple(space_, std::move(pts));
}

ConfigTuple ConfigTuple::Permuted(std::span<const int> perm) const {
  if (static_cast<int>(perm.size()) != size()) {
    throw InvalidArgument("permutation size mismatch");
  }
  std::vector<Vector> pts;
  for (int k : perm) pts.push_back(points_.at(k));
  return ConfigTuple(space_, std::move(pts));
}

ConfigTuple ConfigTuple::Transformed(const Matrix& g) const {
  if (g.rows() != space_.n() || g.cols() != space_.n()) {
    throw InvalidArgument("matrix size does not match the space");
  }
  std::vector<Vector> pts;
  for (const auto& v : points_) pts.push_back(g * v);
  return ConfigTuple(space_, std::move(pts));
}

ConfigTuple ConfigTuple::Rescaled(std::span<const Complex> scalars) const {
  if (static_cast<int>(scalars.size()) != size()) {
    throw InvalidArgument("scalar count mismatch");
  }
  std::vector<Vector> pts;
  for (int k = 0; k < size(); ++k) pts.push_back(scalars[k] * points_[k]);
  return ConfigTuple(space_, std::move(pts));
}

double ConfigTuple::ProjectiveResidual(const ConfigTuple& other) const {
  if (other.size() != size()) throw InvalidArgument("tuple size mismatch");
  double m = 0.0;
  for (int k = 0; k < size(); ++k) {
    m = std::max(m, ProjectiveDistance(points_[k], other.points_[k]));
  }
  return m;
}

namespace {

Complex CheckedPairing(const ConfigTuple& t, int i, int j, double tol) {
  const Complex w = t.pairing(i, j);
  if (std::abs(w) <= tol * t.point(i).norm() * t.point(j).norm()) {
    throw GenericityError(
        "omega(v" + std::to_string(i) + ",v" + std::to_string(j) + ")",
        "pairing omega(v" + std::to_string(i) + ",v" + std::to_string(j) +
            ") vanishes");
  }
  return w;
}

}  // namespace

Complex CrossRatio0(const ConfigTuple& t, int i, int j, int k, int l,
                    double tol) {
  const Complex den =
      CheckedPairing(t, i, l, tol) * CheckedPairing(t, j, k, tol);
  return t.pairing(i, k) * t.pairing(j, l) / den;
}

CrossRatios4 ComputeCrossRatios4(const ConfigTuple& t, double tol) {
  if (t.size() != 4) throw InvalidArgument("cross-ratios need a 4-tuple");
  for (int i = 0; i < 4; ++i) {
    for (int j = i + 1; j < 4; ++j) CheckedPairing(t, i, j, tol);
  }
  CrossRatios4 c;
  c.cr0 = CrossRatio0(t, 0, 1, 2, 3, tol);
  c.cr1 = 1.0 / CrossRatio0(t, 1, 2, 0, 3, tol);
  c.cr2 = CrossRatio0(t, 2, 0, 1, 3, tol);
  return c;
}

CrossRatios5 ComputeCrossRatios5(const ConfigTuple& t, double tol) {
  if (t.size() != 5) throw InvalidArgument("alpha/beta/gamma need a 5-tuple");
  const auto pack = [](const CrossRatios4& c) {
    return std::array<Complex, 3>{c.cr0, c.cr1, c.cr2};
  };
  CrossRatios5 c;
  c.alpha = pack(ComputeCrossRatios4(t.Face(4), tol));
  c.beta = pack(ComputeCrossRatios4(t.Face(3), tol));
  c.gamma = pack(ComputeCrossRatios4(t.Face(2), tol));
  return c;
}

Pair Pi3(const ConfigTuple& t, double tol) {
  const auto c = ComputeCrossRatios4(t, tol);
  return {c.cr1, c.cr2};
}

std::array<Complex, 5> Pi4(const ConfigTuple& t, double tol) {
  const auto c = ComputeCrossRatios5(t, tol);
  return {c.alpha[1], c.alpha[2], c.beta[1], c.beta[2], c.gamma[1]};
}

Complex Gamma(Complex z1, Complex z2) { return 1.0 - z1 - z2; }

Complex Delta(int epsilon, Complex z1, Complex z2) {
  const Complex g = Gamma(z1, z2);
  return g * g - 2.0 * (1.0 + epsilon) * z1 * z2;
}

Complex SqrtDelta(int epsilon, Complex z1, Complex z2) {
  if (epsilon == -1) return Gamma(z1, z2);
  return std::sqrt(Delta(epsilon, z1, z2));
}

Complex Varphi(int epsilon, int eta, Complex z1, Complex z2) {
  return (SqrtDelta(epsilon, z1, z2) + static_cast<double>(eta) * Gamma(z1, z2)) /
         2.0;
}

Complex Psi(int epsilon, int eta, const Pair& a, const Pair& b,
            const Pair& c) {
  if (c[0] == 0.0) throw DomainError("psi: c1 = 0");
  return static_cast<double>(eta) * Varphi(epsilon, eta, a[0], a[1]) *
             Gamma(b[0], b[1]) +
         a[1] * b[0] / c[0] * Gamma(c[0], c[1]);
}

Complex DerivedC2(int epsilon, const Pair& a, const Pair& b, Complex c1) {
  const Complex den = a[1] * b[0];
  if (den == 0.0) throw DomainError("c2: a2*b1 = 0");
  return static_cast<double>(epsilon) * a[0] * b[1] * c1 / den;
}

namespace {

bool InGeneralPosition(const ConfigTuple& t, double tol) {
  const int n = t.space().n();
  const int k = t.size();
  Matrix m(n, k);
  for (int i = 0; i < k; ++i) m.col(i) = t.point(i) / t.point(i).norm();
  if (k <= n) return NumericalRank(m, tol) == k;
  // More points than dimensions: every n of them must span.
  std::vector<int> pick(n);
  for (int i = 0; i < n; ++i) pick[i] = i;
  for (;;) {
    Matrix s(n, n);
    for (int i = 0; i < n; ++i) s.col(i) = m.col(pick[i]);
    if (NumericalRank(s, tol) < n) return false;
    int i = n - 1;
    while (i >= 0 && pick[i] == k - n + i) --i;
    if (i < 0) return true;
    ++pick[i];
    for (int j = i + 1; j < n; ++j) pick[j] = pick[j - 1] + 1;
  }
}

bool DeltaNonzero(int epsilon, const Pair& z, double tol) {
  const Complex g = Gamma(z[0], z[1]);
  const double scale =
      std::max({1.0, std::norm(g), std::abs(z[0] * z[1])});
  return std::abs(Delta(epsilon, z[0], z[1])) > tol * scale;
}

}  // namespace

GenericityCertificate Certify(const ConfigTuple& t, double tol) {
  GenericityCertificate c;
  const int k = t.size();
  if (k < 3 || k > 5) throw InvalidArgument("certificates cover 3..5 points");
  for (int i = 0; i < k && c.failing.empty(); ++i) {
    for (int j = i + 1; j < k; ++j) {
      if (std::abs(t.pairing(i, j)) <=
          tol * t.point(i).norm() * t.point(j).norm()) {
        c.failing = "omega(v" + std::to_string(i) + ",v" + std::to_string(j) +
                    ")";
        break;
      }
    }
  }
  if (!c.failing.empty()) return c;
  c.pairwise = true;

  if (!InGeneralPosition(t, tol)) {
    c.failing = "general_position";
    return c;
  }
  c.general_position = true;

  const int eps = t.space().epsilon();
  if (k == 4) {
    if (!DeltaNonzero(eps, Pi3(t, tol), tol)) {
      c.failing = "Delta";
      return c;
    }
  } else if (k == 5) {
    for (int i = 2; i < 5; ++i) {
      for (int j = i + 1; j < 5; ++j) {
        const std::array<int, 4> sub{0, 1, i, j};
        std::vector<Vector> pts;
        for (int s : sub) pts.push_back(t.point(s));
        const auto st = ConfigTuple::Make(t.space(), pts,
                                          std::numeric_limits<double>::max());
        if (!DeltaNonzero(eps, Pi3(st, tol), tol)) {
          c.failing = "Delta(0,1," + std::to_string(i) + "," +
                      std::to_string(j) + ")";
          return c;
        }
      }
    }
  }
  c.nondegenerate = true;
  return c;
}

void RequireGeneric(const ConfigTuple& t, double tol) {
  const auto c = Certify(t, tol);
  if (!c.ok()) {
    throw GenericityError(c.failing, "tuple is not generic: " + c.failing);
  }
}

double RelativeResidual(Complex x, Complex y) {
  const double s = std::max({std::abs(x), std::abs(y), 1e-300});
  return std::abs(x - y) / s;
}

namespace {

CrossRatios4 CrossRatiosOfPermuted(const ConfigTuple& t, int a, int b) {
  std::array<int, 4> p{0, 1, 2, 3};
  std::swap(p[a], p[b]);
  return ComputeCrossRatios4(t.Permuted(p));
}

}  // namespace

std::vector<NamedResidual> FourTupleIdentityResiduals(const ConfigTuple& t) {
  const auto c = ComputeCrossRatios4(t);
  const auto sw = [&](int a, int b) { return CrossRatiosOfPermuted(t, a, b); };
  const double eps = static_cast<double>(t.space().epsilon());
  const Complex inv0 = 1.0 / c.cr0;
  const Complex inv1 = 1.0 / c.cr1;
  const Complex inv2 = 1.0 / c.cr2;
  return {
      {"CR0(01) = 1/CR0", RelativeResidual(sw(0, 1).cr0, inv0)},
      {"CR0(23) = 1/CR0", RelativeResidual(sw(2, 3).cr0, inv0)},
      {"1/CR1(02) = 1/CR0", RelativeResidual(1.0 / sw(0, 2).cr1, inv0)},
      {"1/CR1(13) = 1/CR0", RelativeResidual(1.0 / sw(1, 3).cr1, inv0)},
      {"CR2(12) = 1/CR0", RelativeResidual(sw(1, 2).cr2, inv0)},
      {"CR2(03) = 1/CR0", RelativeResidual(sw(0, 3).cr2, inv0)},
      {"CR1(12) = 1/CR1", RelativeResidual(sw(1, 2).cr1, inv1)},
      {"CR1(03) = 1/CR1", RelativeResidual(sw(0, 3).cr1, inv1)},
      {"1/CR2(01) = 1/CR1", RelativeResidual(1.0 / sw(0, 1).cr2, inv1)},
      {"1/CR2(23) = 1/CR1", RelativeResidual(1.0 / sw(2, 3).cr2, inv1)},
      {"CR2(02) = 1/CR2", RelativeResidual(sw(0, 2).cr2, inv2)},
      {"CR2(13) = 1/CR2", RelativeResidual(sw(1, 3).cr2, inv2)},
      {"CR0/CR1*CR2 = eps", RelativeResidual(c.cr0 / c.cr1 * c.cr2, eps)},
  };
}

std::vector<NamedResidual> FiveTupleIdentityResiduals(const ConfigTuple& t) {
  const auto c = ComputeCrossRatios5(t);
  const auto d0 = ComputeCrossRatios4(t.Face(0));
  const auto d1 = ComputeCrossRatios4(t.Face(1));
  const double eps = static_cast<double>(t.space().epsilon());
  const auto& al = c.alpha;
  const auto& be = c.beta;
  const auto& ga = c.gamma;
  return {
      {"CR0 d1 = a2/b2", RelativeResidual(d1.cr0, al[2] / be[2])},
      {"CR1 d1 = g1/b1", RelativeResidual(d1.cr1, ga[1] / be[1])},
      {"CR2 d1 = eps b2 g1/(a2 b1)",
       RelativeResidual(d1.cr2, eps * be[2] * ga[1] / (al[2] * be[1]))},
      {"CR0 d0 = a1/b1", RelativeResidual(d0.cr0, al[1] / be[1])},
      {"CR1 d0 = eps a1 g1/(a2 b1)",
       RelativeResidual(d0.cr1, eps * al[1] * ga[1] / (al[2] * be[1]))},
      {"CR2 d0 = g1/a2", RelativeResidual(d0.cr2, ga[1] / al[2])},
      {"a0 g0 = b0", RelativeResidual(al[0] * ga[0], be[0])},
  };
}

ConfigTuple RandomTuple(const FormedSpace& space, int k, Rng& rng) {
  std::vector<Vector> pts;
  for (int i = 0; i < k; ++i) pts.push_back(RandomIsotropic(space, rng));
  return ConfigTuple::Make(space, std::move(pts));
}

}  // namespace fsl
