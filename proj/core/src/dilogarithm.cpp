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

#include <algorithm>
#include <cmath>
#include <numbers>

namespace fsl {
namespace {

// B_{2k} / (2k+1)! for k = 1..15.
constexpr std::array<double, 15> MakeCoefficients() {
  constexpr std::array<double, 15> bernoulli{
      1.0 / 6,
      -1.0 / 30,
      1.0 / 42,
      -1.0 / 30,
      5.0 / 66,
      -691.0 / 2730,
      7.0 / 6,
      -3617.0 / 510,
      43867.0 / 798,
      -174611.0 / 330,
      854513.0 / 138,
      -236364091.0 / 2730,
      8553103.0 / 6,
      -23749461029.0 / 870,
      8615841276005.0 / 14322};
  std::array<double, 15> out{};
  double fact = 1.0;  // (2k+1)!
  for (int k = 1; k <= 15; ++k) {
    fact *= (2.0 * k) * (2.0 * k + 1.0);
    out[k - 1] = bernoulli[k - 1] / fact;
  }
  return out;
}

constexpr std::array<double, 15> kCoefficients = MakeCoefficients();

// Li₂ for |z| ≤ 1, Re z ≤ 1/2, where |log(1 − z)| < 1.3.
Complex DilogCore(Complex z) {
  const Complex u = -std::log(1.0 - z);
  const Complex u2 = u * u;
  Complex term = u;
  Complex sum = u - u2 / 4.0;
  for (double c : kCoefficients) {
    term *= u2;
    const Complex add = c * term;
    sum += add;
    if (std::abs(add) < 1e-17 * std::abs(sum)) break;
  }
  return sum;
}

bool Degenerate(Complex z) {
  return !std::isfinite(z.real()) || !std::isfinite(z.imag()) ||
         z == Complex(0.0) || z == Complex(1.0);
}

}  // namespace

Complex Dilog(Complex z) {
  using std::numbers::pi;
  if (z == Complex(0.0)) return 0.0;
  if (z == Complex(1.0)) return pi * pi / 6.0;
  if (std::abs(z) > 1.0) {
    // Li₂(z) = −Li₂(1/z) − π²/6 − log²(−z)/2
    const Complex l = std::log(-z);
    return -Dilog(1.0 / z) - pi * pi / 6.0 - l * l / 2.0;
  }
  if (z.real() > 0.5) {
    // Li₂(z) = −Li₂(1−z) + π²/6 − log z · log(1−z)
    return -DilogCore(1.0 - z) + pi * pi / 6.0 -
           std::log(z) * std::log(1.0 - z);
  }
  return DilogCore(z);
}

double BlochWigner(Complex z) {
  if (Degenerate(z)) return 0.0;
  double sign = 1.0;
  if (std::abs(z) > 1.0) {
    z = 1.0 / z;
    sign = -sign;
  }
  if (z.real() > 0.5) {
    z = 1.0 - z;
    sign = -sign;
  }
  if (Degenerate(z)) return 0.0;
  return sign * (DilogCore(z).imag() + std::arg(1.0 - z) * std::log(std::abs(z)));
}

std::array<double, 5> SixSymmetryResiduals(Complex z) {
  const double d = BlochWigner(z);
  return {std::abs(d - BlochWigner(1.0 - 1.0 / z)),
          std::abs(d - BlochWigner(1.0 / (1.0 - z))),
          std::abs(d + BlochWigner(1.0 / z)),
          std::abs(d + BlochWigner(1.0 - z)),
          std::abs(d + BlochWigner(-z / (1.0 - z)))};
}

double SpenceAbelResidual(const Function1& f, Complex a, Complex b,
                          double guard) {
  const double m = std::min({std::abs(a), std::abs(1.0 - a), std::abs(b),
                             std::abs(1.0 - b), std::abs(a - b)});
  if (!(m > guard)) {
    throw DomainError("Spence-Abel arguments inside the guard band");
  }
  return f(a * (1.0 - b) / (b * (1.0 - a))) - f((1.0 - b) / (1.0 - a)) +
         f(b / a) - f(b) + f(a);
}

double D3InfinityResidual(const Function2& f, const std::array<Complex, 5>& x,
                          int epsilon) {
  const auto [a1, a2, b1, b2, c1] = x;
  for (Complex v : x) {
    if (v == Complex(0.0)) throw DomainError("D3: zero coordinate");
  }
  const double e = static_cast<double>(epsilon);
  const Complex ab = a2 * b1;
  return f(e * a1 * c1 / ab, c1 / a2) - f(c1 / b1, e * b2 * c1 / ab) +
         f(c1, e * a1 * b2 * c1 / ab) - f(b1, b2) + f(a1, a2);
}

double VolP1(const std::array<Eigen::Vector2cd, 4>& p) {
  const auto w = [&](int i, int j) {
    return p[i](0) * p[j](1) - p[i](1) * p[j](0);
  };
  const Complex den = w(0, 3) * w(1, 2);
  if (den == Complex(0.0)) return 0.0;
  return BlochWigner(w(0, 2) * w(1, 3) / den);
}

namespace {

struct Maximum {
  Complex z;
  double value;
};

Maximum Maximize() {
  Maximum best{Complex(0.5, 0.5), BlochWigner(Complex(0.5, 0.5))};
  // 𝒟 is maximal on the upper half plane; a coarse grid locates the peak.
  for (int i = 0; i <= 100; ++i) {
    for (int j = 1; j <= 200; ++j) {
      const Complex z(-0.5 + 0.02 * i, 0.01 * j);
      const double v = BlochWigner(z);
      if (v > best.value) best = {z, v};
    }
  }
  double step = 0.01;
  while (step > 1e-13) {
    bool moved = false;
    for (Complex d : {Complex(step, 0), Complex(-step, 0), Complex(0, step),
                      Complex(0, -step)}) {
      const double v = BlochWigner(best.z + d);
      if (v > best.value) {
        best = {best.z + d, v};
        moved = true;
      }
    }
    if (!moved) step /= 2.0;
  }
  return best;
}

const Maximum& CachedMaximum() {
  static const Maximum m = Maximize();
  return m;
}

}  // namespace

double MaxBlochWigner() { return CachedMaximum().value; }
Complex ArgMaxBlochWigner() { return CachedMaximum().z; }

}  // namespace fsl
