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

#include "fsl/random.hpp"

#include <cmath>

namespace fsl {

std::uint64_t Mix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t HashLabel(std::string_view label) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (char c : label) {
    h ^= static_cast<unsigned char>(c);
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::uint64_t StreamSeed(std::uint64_t seed, std::string_view label,
                         std::uint64_t index) {
  return Mix64(Mix64(seed ^ HashLabel(label)) + index);
}

double Rng::Uniform(double lo, double hi) {
  // 53 random mantissa bits; avoids the implementation-defined
  // std::uniform_real_distribution.
  const double u = static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  return lo + (hi - lo) * u;
}

// Box-Muller on our own uniforms so streams are identical across standard
// libraries.
double Rng::Gaussian() {
  if (has_spare_) {
    has_spare_ = false;
    return spare_;
  }
  double u = 0.0;
  while (u <= 0.0) u = Uniform();
  const double v = Uniform();
  const double radius = std::sqrt(-2.0 * std::log(u));
  const double angle = 2.0 * M_PI * v;
  spare_ = radius * std::sin(angle);
  has_spare_ = true;
  return radius * std::cos(angle);
}

Complex Rng::ComplexGaussian() {
  const double re = Gaussian();
  const double im = Gaussian();
  return {re, im};
}

Vector Rng::ComplexGaussianVector(int n) {
  Vector v(n);
  for (int i = 0; i < n; ++i) v(i) = ComplexGaussian();
  return v;
}

Matrix Rng::ComplexGaussianMatrix(int rows, int cols) {
  Matrix m(rows, cols);
  for (int j = 0; j < cols; ++j)
    for (int i = 0; i < rows; ++i) m(i, j) = ComplexGaussian();
  return m;
}

}  // namespace fsl
