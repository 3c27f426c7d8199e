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

#ifndef FSL_RANDOM_HPP
#define FSL_RANDOM_HPP

#include <cstdint>
#include <random>
#include <string_view>

#include "fsl/types.hpp"

namespace fsl {

/// SplitMix64 finalizer; used to derive independent streams from one seed.
std::uint64_t Mix64(std::uint64_t x);

/// FNV-1a hash of a stream label such as a module name.
std::uint64_t HashLabel(std::string_view label);

/// Seed of the `index`-th trial of the stream `label` under `seed`. Depends
/// only on its arguments, so trial loops can be partitioned freely.
std::uint64_t StreamSeed(std::uint64_t seed, std::string_view label,
                         std::uint64_t index);

/// Explicit random source. Every randomized operation takes one by reference.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(Mix64(seed)) {}

  double Uniform(double lo = 0.0, double hi = 1.0);
  double Gaussian();
  /// Standard complex Gaussian: independent N(0,1) real and imaginary parts.
  Complex ComplexGaussian();
  Vector ComplexGaussianVector(int n);
  Matrix ComplexGaussianMatrix(int rows, int cols);
  std::uint64_t Next() { return engine_(); }

 private:
  std::mt19937_64 engine_;
  double spare_ = 0.0;
  bool has_spare_ = false;
};

}  // namespace fsl

#endif  // FSL_RANDOM_HPP
