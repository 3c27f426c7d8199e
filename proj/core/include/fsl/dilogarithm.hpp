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

#ifndef FSL_DILOGARITHM_HPP
#define FSL_DILOGARITHM_HPP

#include <array>
#include <functional>

#include "fsl/types.hpp"

namespace fsl {

using Function1 = std::function<double(Complex)>;
using Function2 = std::function<double(Complex, Complex)>;

/// A function on Ĉ² with a declared bound.
struct BoundedFunction2 {
  Function2 f;
  double bound = 0.0;
};

/// Dilogarithm Li₂ on the principal branch (cut [1, ∞)).
Complex Dilog(Complex z);

/// 𝒟(z) = Im Li₂(z) + arg(1 − z)·log|z|, extended by 0 at 0, 1 and at
/// non-finite inputs. Absolute accuracy about 1e-15.
double BlochWigner(Complex z);

/// |𝒟(z) − s·𝒟(σ(z))| for the five nontrivial symmetries σ, in the order
/// 1−1/z, 1/(1−z), 1/z, 1−z, −z/(1−z).
std::array<double, 5> SixSymmetryResiduals(Complex z);

/// f(a(1−b)/(b(1−a))) − f((1−b)/(1−a)) + f(b/a) − f(b) + f(a). Throws
/// DomainError when a or b lies within `guard` of 0, 1, or each other.
double SpenceAbelResidual(const Function1& f, Complex a, Complex b,
                          double guard = 1e-8);

/// The higher-rank five-term operator applied to f at
/// x = (a₁, a₂, b₁, b₂, c₁).
double D3InfinityResidual(const Function2& f, const std::array<Complex, 5>& x,
                          int epsilon);

/// 𝒟 of the classical cross-ratio of four points of ℙ¹ given by vectors in
/// ℂ²; 0 when two points coincide.
double VolP1(const std::array<Eigen::Vector2cd, 4>& p);

/// Maximum of 𝒟, found by search and refinement on first use.
double MaxBlochWigner();
/// Location of the maximum.
Complex ArgMaxBlochWigner();

}  // namespace fsl

#endif  // FSL_DILOGARITHM_HPP
