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

#ifndef FSL_FLAGS_HPP
#define FSL_FLAGS_HPP

#include <array>
#include <span>
#include <vector>

#include "fsl/random.hpp"
#include "fsl/types.hpp"

namespace fsl {

/// A complete flag F¹ ⊂ … ⊂ Fⁿ = ℂⁿ with chosen spanning vectors:
/// F^j = span(v¹, …, v^j).
class AffineFlag {
 public:
  /// Columns are v¹, …, vⁿ. Throws InvalidArgument unless they have full
  /// numerical rank.
  static AffineFlag Make(Matrix vecs);

  int n() const { return static_cast<int>(vecs_.cols()); }
  const Matrix& vecs() const { return vecs_; }
  /// v^j for j = 1..n.
  Vector vec(int j) const { return vecs_.col(j - 1); }

  AffineFlag Transformed(const Matrix& g) const;
  /// v^j ↦ s_j·v^j.
  AffineFlag Rescaled(const Vector& s) const;

 private:
  explicit AffineFlag(Matrix vecs) : vecs_(std::move(vecs)) {}

  Matrix vecs_;
};

using IndexTuple = std::array<int, 4>;

/// Representative of a σ₃ class: four vectors in ℂ^m.
struct Sigma3Class {
  int m = 0;
  std::array<Vector, 4> images;
  std::array<double, 4> source_norms{};  // ‖v_i^{j_i+1}‖
};

/// dim⟨F₀^{j₀}, …, F₃^{j₃}⟩ = Σ j_i whenever Σ j_i ≤ n.
bool GeneralPosition(std::span<const AffineFlag> flags);

/// The quotient ⟨F_i^{j_i+1}⟩ / ⟨F_i^{j_i}⟩ with the images of v_i^{j_i+1},
/// realized on the Hermitian complement of the denominator.
Sigma3Class TJ(std::span<const AffineFlag> flags, const IndexTuple& j);

/// Vol_ℙ of the images when m = 2 and none vanishes, else 0.
double VolSigma3(const Sigma3Class& c);

double BnJ(std::span<const AffineFlag> flags, const IndexTuple& j);

/// Σ_J Bₙ^J over all J ∈ {0..n−1}⁴.
double BnFull(std::span<const AffineFlag> flags);

/// Bₙ. In general position only ‖J‖₁ = n − 2 can contribute and only those
/// terms are evaluated; otherwise falls back to BnFull.
double Bn(std::span<const AffineFlag> flags);

/// J with a two-dimensional quotient and nonzero images.
std::vector<IndexTuple> ContributingIndices(std::span<const AffineFlag> flags);

struct CocycleCheck {
  double residual = 0.0;
  bool general_position = false;  // all five faces
};

/// Σᵢ (−1)ⁱ Bₙ(∂ᵢ flags) for five flags.
CocycleCheck CocycleResidual(std::span<const AffineFlag> flags);

AffineFlag RandomFlag(int n, Rng& rng);

// SO₄ boundary. Coordinates are (e₁, e₂, f₂, f₁) with antidiagonal Gram
// matrix, i.e. the formed space (+1,0) of rank 2.

/// Parameters of the pair of isotropic lines (l_a⁺, l_b⁻).
struct BoundaryPoint {
  Complex a;
  Complex b;
  bool a_infinite = false;
  bool b_infinite = false;

  static BoundaryPoint Finite(Complex a, Complex b) { return {a, b}; }
  static BoundaryPoint Infinity() { return {0.0, 0.0, true, true}; }
};

/// l_a⁺ = ⟨e₁ − a f₂, e₂ + a f₁⟩; l_∞⁺ = ⟨f₂, f₁⟩. Columns span the line.
Matrix LinePlus(Complex a, bool infinite = false);
/// l_b⁻ = ⟨e₁ + b e₂, b f₁ − f₂⟩; l_∞⁻ = ⟨e₂, f₁⟩.
Matrix LineMinus(Complex b, bool infinite = false);
/// [1, b, −a, ab]ᵀ = l_a⁺ ∩ l_b⁻.
Vector PhiAB(Complex a, Complex b);

enum class RhoVariant {
  kPlusFirst,   // ⟨φ⟩ ⊂ l⁺ ⊂ l⁺ + l⁻
  kMinusFirst,  // ⟨φ⟩ ⊂ l⁻ ⊂ l⁺ + l⁻
};

/// The flag {0} ⊂ l⁺ ∩ l⁻ ⊂ l⁺ ⊂ l⁺ + l⁻ ⊂ ℂ⁴ for two totally isotropic
/// planes meeting in a line.
AffineFlag RhoFromLines(const Matrix& l_plus, const Matrix& l_minus,
                        RhoVariant variant = RhoVariant::kPlusFirst);
AffineFlag Rho(const BoundaryPoint& p,
               RhoVariant variant = RhoVariant::kPlusFirst);

/// ρ(∂θ(a, b)).
AffineFlag StandardFlagSO4(Complex a, Complex b);
/// B₄(F_∞, F₀, F₁, F_{(a,b)}).
double B4Standard(Complex a, Complex b);

}  // namespace fsl

#endif  // FSL_FLAGS_HPP
