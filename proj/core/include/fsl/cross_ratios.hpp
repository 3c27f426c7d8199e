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

#ifndef FSL_CROSS_RATIOS_HPP
#define FSL_CROSS_RATIOS_HPP

#include <array>
#include <span>
#include <string>
#include <vector>

#include "fsl/forms.hpp"
#include "fsl/types.hpp"

namespace fsl {

using Pair = std::array<Complex, 2>;

/// An ordered tuple of isotropic lines, held through chosen representatives
/// together with their pairing table ω(v_i, v_j).
class ConfigTuple {
 public:
  /// Throws InvalidArgument on size mismatch, a zero vector, or
  /// |q(v)| > tol·‖v‖².
  static ConfigTuple Make(const FormedSpace& space, std::vector<Vector> points,
                          double tol = kDefaultTolerances.generic);

  const FormedSpace& space() const { return space_; }
  int size() const { return static_cast<int>(points_.size()); }
  const Vector& point(int i) const { return points_.at(i); }
  const std::vector<Vector>& points() const { return points_; }

  /// Cached ω(v_i, v_j).
  Complex pairing(int i, int j) const { return pairings_(i, j); }
  const Matrix& pairings() const { return pairings_; }

  /// ∂_i: forgets the i-th entry.
  ConfigTuple Face(int i) const;
  /// Entry k of the result is entry perm[k] of this tuple.
  ConfigTuple Permuted(std::span<const int> perm) const;
  ConfigTuple Transformed(const Matrix& g) const;
  ConfigTuple Rescaled(std::span<const Complex> scalars) const;

  /// Max chordal distance between corresponding points.
  double ProjectiveResidual(const ConfigTuple& other) const;

 private:
  ConfigTuple(FormedSpace space, std::vector<Vector> points);

  FormedSpace space_;
  std::vector<Vector> points_;
  Matrix pairings_;
};

struct CrossRatios4 {
  Complex cr0;
  Complex cr1;
  Complex cr2;
};

struct CrossRatios5 {
  std::array<Complex, 3> alpha;  // CR_j ∘ ∂₄
  std::array<Complex, 3> beta;   // CR_j ∘ ∂₃
  std::array<Complex, 3> gamma;  // CR_j ∘ ∂₂
};

/// CR₀ of the tuple (i, j, k, l) of `t`. Throws GenericityError naming the
/// first vanishing denominator pairing.
Complex CrossRatio0(const ConfigTuple& t, int i, int j, int k, int l,
                    double tol = kDefaultTolerances.generic);

CrossRatios4 ComputeCrossRatios4(const ConfigTuple& t,
                                 double tol = kDefaultTolerances.generic);
CrossRatios5 ComputeCrossRatios5(const ConfigTuple& t,
                                 double tol = kDefaultTolerances.generic);

/// (CR₁, CR₂).
Pair Pi3(const ConfigTuple& t, double tol = kDefaultTolerances.generic);
/// (α₁, α₂, β₁, β₂, γ₁).
std::array<Complex, 5> Pi4(const ConfigTuple& t,
                           double tol = kDefaultTolerances.generic);

Complex Gamma(Complex z1, Complex z2);
Complex Delta(int epsilon, Complex z1, Complex z2);
/// Γ for ε = −1, principal √Δ for ε = +1.
Complex SqrtDelta(int epsilon, Complex z1, Complex z2);
/// (Δ^{1/2} + ηΓ)/2.
Complex Varphi(int epsilon, int eta, Complex z1, Complex z2);
/// η·φ_η(a)·Γ(b) + a₂b₁/c₁·Γ(c). Throws DomainError when c₁ = 0.
Complex Psi(int epsilon, int eta, const Pair& a, const Pair& b, const Pair& c);
/// ε·a₁b₂c₁/(a₂b₁): the dependent coordinate γ₂.
Complex DerivedC2(int epsilon, const Pair& a, const Pair& b, Complex c1);

struct GenericityCertificate {
  bool pairwise = false;          // all ω(v_i, v_j) ≠ 0, i ≠ j
  bool general_position = false;  // representatives in general position
  bool nondegenerate = false;     // 4: Δ ≠ 0; 5: every {0,1,i,j} subtuple
  std::string failing;            // first failing predicate, empty if none

  bool ok() const { return pairwise && general_position && nondegenerate; }
};

/// Classifies a 3-, 4- or 5-tuple. For 3-tuples the nondegenerate flag
/// equals general_position.
GenericityCertificate Certify(const ConfigTuple& t,
                              double tol = kDefaultTolerances.generic);

/// Throws GenericityError with the certificate's failing predicate.
void RequireGeneric(const ConfigTuple& t,
                    double tol = kDefaultTolerances.generic);

/// Relative deviation |x − y| / max(|x|, |y|, tiny).
double RelativeResidual(Complex x, Complex y);

struct NamedResidual {
  std::string name;
  double residual;
};

/// The thirteen equalities of the 4-tuple permutation lemma.
std::vector<NamedResidual> FourTupleIdentityResiduals(const ConfigTuple& t);
/// The seven identities expressing CR_j ∘ ∂₀, CR_j ∘ ∂₁ and β₀.
std::vector<NamedResidual> FiveTupleIdentityResiduals(const ConfigTuple& t);

/// Generic random tuple of k isotropic lines.
ConfigTuple RandomTuple(const FormedSpace& space, int k, Rng& rng);

}  // namespace fsl

#endif  // FSL_CROSS_RATIOS_HPP
