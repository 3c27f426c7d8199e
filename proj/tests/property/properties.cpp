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


// Randomized properties with a tiny harness: each property draws its own
// inputs from a seeded stream, reports the worst residual, and prints the
// failing trial index so a counterexample can be replayed.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "fsl/cross_ratios.hpp"
#include "fsl/dilogarithm.hpp"
#include "fsl/flags.hpp"
#include "fsl/forms.hpp"
#include "fsl/random.hpp"
#include "fsl/reduction.hpp"

namespace {

using fsl::Complex;
using fsl::Rng;

int g_failures = 0;

void Property(const std::string& name, int trials, double threshold,
              const std::function<double(Rng&)>& body) {
  double worst = 0.0;
  int worst_trial = -1;
  for (int i = 0; i < trials; ++i) {
    Rng rng(fsl::StreamSeed(2026, name, static_cast<std::uint64_t>(i)));
    double r = 0.0;
    try {
      r = body(rng);
    } catch (const std::exception& e) {
      std::printf("FAIL %s: trial %d threw: %s\n", name.c_str(), i, e.what());
      ++g_failures;
      return;
    }
    if (std::isnan(r)) {
      std::printf("FAIL %s: trial %d gave NaN\n", name.c_str(), i);
      ++g_failures;
      return;
    }
    if (worst_trial < 0 || r > worst) {
      worst = r;
      worst_trial = i;
    }
  }
  const bool ok = worst <= threshold;
  std::printf("%s %s: %d trials, worst %.3g at trial %d (threshold %.1g)\n",
              ok ? "ok  " : "FAIL", name.c_str(), trials, worst, worst_trial, threshold);
  if (!ok) ++g_failures;
}

fsl::FormedSpace RandomSpace(Rng& rng, int min_r = 2) {
  static constexpr int kKinds[3][2] = {{1, 0}, {1, 1}, {-1, 0}};
  const auto& k = kKinds[rng.Next() % 3];
  const int r = min_r + static_cast<int>(rng.Next() % 3);
  return fsl::FormedSpace::Make(k[0], k[1], r);
}

Complex AnywhereInC(Rng& rng) {
  // Mix of bulk points and points near 0, 1 and infinity.
  const Complex z = rng.ComplexGaussian();
  switch (rng.Next() % 4) {
    case 0:
      return z * 1e-4;
    case 1:
      return 1.0 + z * 1e-4;
    case 2:
      return z * 1e4;
    default:
      return z;
  }
}

}  // namespace

int main() {
  Property("group action preserves omega", 300, 1e-11, [](Rng& rng) {
    const auto s = RandomSpace(rng, 1);
    const fsl::Matrix g = fsl::RandomGroupElement(s, rng).matrix();
    const fsl::Vector v = rng.ComplexGaussianVector(s.n());
    const fsl::Vector w = rng.ComplexGaussianVector(s.n());
    return std::abs(s.Omega(g * v, g * w) - s.Omega(v, w)) / ((g * v).norm() * (g * w).norm());
  });

  Property("omega is eps-symmetric", 300, 1e-14, [](Rng& rng) {
    const auto s = RandomSpace(rng, 1);
    const fsl::Vector v = rng.ComplexGaussianVector(s.n());
    const fsl::Vector w = rng.ComplexGaussianVector(s.n());
    return std::abs(s.Omega(v, w) - double(s.epsilon()) * s.Omega(w, v)) / (v.norm() * w.norm());
  });

  Property("4- and 5-tuple identities", 500, 1e-9, [](Rng& rng) {
    const auto s = RandomSpace(rng);
    const auto t = fsl::RandomTuple(s, 5, rng);
    if (!fsl::Certify(t).ok()) return 0.0;
    double m = 0.0;
    for (const auto& r : fsl::FourTupleIdentityResiduals(t.Face(4))) m = std::max(m, r.residual);
    for (const auto& r : fsl::FiveTupleIdentityResiduals(t)) m = std::max(m, r.residual);
    return m;
  });

  Property("permuting a 4-tuple twice is the identity", 300, 1e-12, [](Rng& rng) {
    const auto s = RandomSpace(rng);
    const auto t = fsl::RandomTuple(s, 4, rng);
    const std::array<int, 4> p{2, 0, 3, 1};
    const std::array<int, 4> q{1, 3, 0, 2};  // inverse of p
    return t.Permuted(p).Permuted(q).ProjectiveResidual(t);
  });

  Property("reduction is constant on orbits", 300, 1e-8, [](Rng& rng) {
    const auto s = RandomSpace(rng);
    const auto t = fsl::RandomTuple(s, 4, rng);
    const fsl::Matrix g = fsl::RandomGroupElement(s, rng).matrix();
    return fsl::ReduceQuadruple(t.Transformed(g))
        .canonical.ProjectiveResidual(fsl::ReduceQuadruple(t).canonical);
  });

  Property("reduction maps t to its canonical form", 300, 1e-8, [](Rng& rng) {
    const auto s = RandomSpace(rng);
    if (!fsl::SupportsQuintuples(s)) return 0.0;
    const auto t = fsl::RandomTuple(s, 5, rng);
    const auto res = fsl::ReduceQuintuple(t);
    return std::max(res.residual, s.GroupResidual(res.g.matrix()));
  });

  Property("D symmetries near 0, 1, infinity", 3000, 1e-10, [](Rng& rng) {
    const auto r = fsl::SixSymmetryResiduals(AnywhereInC(rng));
    return *std::max_element(r.begin(), r.end());
  });

  Property("D is bounded by its maximum", 3000, 0.0, [](Rng& rng) {
    return std::max(0.0, std::abs(fsl::BlochWigner(AnywhereInC(rng))) - fsl::MaxBlochWigner());
  });

  Property("Spence-Abel anywhere", 3000, 1e-10, [](Rng& rng) {
    try {
      return fsl::SpenceAbelResidual(fsl::BlochWigner, AnywhereInC(rng), AnywhereInC(rng), 1e-6);
    } catch (const fsl::DomainError&) {
      return 0.0;
    }
  });

  Property("B_n cocycle identity", 200, 1e-8, [](Rng& rng) {
    const int n = 2 + static_cast<int>(rng.Next() % 2);
    std::vector<fsl::AffineFlag> f;
    for (int i = 0; i < 5; ++i) f.push_back(fsl::RandomFlag(n, rng));
    return fsl::CocycleResidual(f).residual;
  });

  Property("B_n is even under a double transposition", 200, 1e-10, [](Rng& rng) {
    const int n = 2 + static_cast<int>(rng.Next() % 3);
    std::vector<fsl::AffineFlag> f;
    for (int i = 0; i < 4; ++i) f.push_back(fsl::RandomFlag(n, rng));
    const std::vector<fsl::AffineFlag> g{f[1], f[0], f[3], f[2]};
    return std::abs(fsl::Bn(g) - fsl::Bn(f));
  });

  std::printf("%s: %d failing properties\n", g_failures ? "FAIL" : "PASS", g_failures);
  return g_failures == 0 ? 0 : 1;
}
