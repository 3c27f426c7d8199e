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


#ifndef FSL_TESTS_ORACLES_HPP
#define FSL_TESTS_ORACLES_HPP

#include <complex>

#include "fsl/types.hpp"

namespace fsl::testing {

/// Gram matrix written out from the adapted-basis convention: basis order
/// e_r, ..., e_1, [h], f_1, ..., f_r with omega(e_i, f_i) = 1,
/// omega(f_i, e_i) = eps and q(h) = 1.
inline Matrix HandGram(int eps, int d, int r) {
  const int n = 2 * r + d;
  Matrix g = Matrix::Zero(n, n);
  for (int i = 1; i <= r; ++i) {
    const int e = r - i;
    const int f = r + d + i - 1;
    g(e, f) = 1.0;
    g(f, e) = static_cast<double>(eps);
  }
  if (d == 1) g(r, r) = 1.0;
  return g;
}

inline Complex HandOmega(const Matrix& gram, const Vector& v, const Vector& w) {
  return (v.transpose() * gram * w)(0, 0);
}

/// Bloch-Wigner values at 30 digits.
struct FrozenD {
  Complex z;
  double d;
};
inline constexpr FrozenD kFrozenD[] = {
    {{0.5, 0.5}, 0.91596559417721901505},
    {{2.0, 1.0}, 0.51166639855382349597},
    {{-1.0, 0.25}, 0.16916447758391030762},
    {{0.5, 0.8660254037844386}, 1.014941606409653625},
    {{0.0, 1.0}, 0.91596559417721901505},
    {{-3.0, -4.0}, -0.37912957952507913065},
    {{0.1, 0.01}, 0.036063859520874911995},
    {{10.0, 10.0}, 0.19057859843818181707},
    {{1.0, 1.0}, 0.91596559417721901505},
    {{0.3, -0.7}, -0.98181057142732547089},
};

/// Li_2 values at 30 digits.
struct FrozenLi2 {
  Complex z;
  Complex li2;
};
inline constexpr FrozenLi2 kFrozenLi2[] = {
    {{0.5, 0.5}, {0.45398526915029558331, 0.64376733288926874874}},
    {{2.0, 1.0}, {1.1866885370000578311, 2.4077407693457720017}},
    {{-3.0, -4.0}, {-2.3880908045277449386, -1.6431791600530448011}},
    {{0.9, 0.0}, {1.299714723004958782, 0.0}},
    {{-0.5, 0.0}, {-0.44841420692364620244, 0.0}},
    {{3.0, 0.0001}, {2.3200757040062690871, 3.4513691920624893976}},
};

/// Cl_2(pi/3), the volume of the regular ideal tetrahedron.
inline constexpr double kRegularIdealVolume = 1.014941606409653625021203;

}  // namespace fsl::testing

#endif  // FSL_TESTS_ORACLES_HPP
