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

#ifndef FSL_FORMS_HPP
#define FSL_FORMS_HPP

#include <span>
#include <string>
#include <vector>

#include "fsl/random.hpp"
#include "fsl/types.hpp"

namespace fsl {

/// A position of the adapted basis e_r, …, e_1, (h), f_1, …, f_r.
struct Slot {
  enum class Kind { kE, kH, kF };

  Kind kind = Kind::kE;
  int index = 1;  // 1..r for e/f, 0 for h

  static Slot E(int i) { return {Kind::kE, i}; }
  static Slot F(int i) { return {Kind::kF, i}; }
  static Slot H() { return {Kind::kH, 0}; }

  std::string Name() const;
  friend bool operator==(const Slot&, const Slot&) = default;
};

/// The pair (ε, d) together with the rank r. Only (+1,1), (−1,0) and (+1,0)
/// are admissible; they select the families B_r, C_r, D_r.
class FormParams {
 public:
  static FormParams Make(int epsilon, int d, int r);

  int epsilon() const { return epsilon_; }
  int d() const { return d_; }
  int r() const { return r_; }
  int n() const { return 2 * r_ + d_; }

  /// Smallest rank with an irreducible variety of isotropic points.
  int r1() const { return (epsilon_ == 1 && d_ == 0) ? 2 : 1; }
  /// Start of the bounded-cohomological stability range.
  int r0() const { return (epsilon_ == 1 && d_ == 0) ? 3 : 1; }

  /// "(+1,0)" style label.
  std::string Label() const;

  friend bool operator==(const FormParams&, const FormParams&) = default;

 private:
  FormParams(int epsilon, int d, int r) : epsilon_(epsilon), d_(d), r_(r) {}

  int epsilon_;
  int d_;
  int r_;
};

/// ℂⁿ with the ε-symmetric form ω whose Gram matrix in the adapted basis is
/// antidiagonal: ω(e_i, f_i) = 1, ω(f_i, e_i) = ε, ω(h, h) = 1.
class FormedSpace {
 public:
  static FormedSpace Make(int epsilon, int d, int r) {
    return FormedSpace(FormParams::Make(epsilon, d, r));
  }
  explicit FormedSpace(FormParams params);

  const FormParams& params() const { return params_; }
  int epsilon() const { return params_.epsilon(); }
  int d() const { return params_.d(); }
  int r() const { return params_.r(); }
  int n() const { return params_.n(); }

  /// Gram matrix: ω(v, w) = vᵀ · gram() · w. Satisfies gramᵀ = ε·gram.
  const Matrix& gram() const { return gram_; }

  /// Coordinate position of a basis slot.
  int IndexOf(Slot slot) const;
  Slot SlotAt(int index) const;
  Vector Basis(Slot slot) const;

  Complex Omega(const Vector& v, const Vector& w) const;
  Complex Q(const Vector& v) const { return Omega(v, v); }

  /// ‖mᵀJm − J‖_max scaled by max(1, ‖m‖²_max).
  double GroupResidual(const Matrix& m) const;
  bool IsInGroup(const Matrix& m, double tol = kDefaultTolerances.group) const;

  /// "O_5(C)", "Sp_4(C)", ...
  std::string GroupName() const;

  friend bool operator==(const FormedSpace& a, const FormedSpace& b) {
    return a.params_ == b.params_;
  }

 private:
  void CheckDimension(const Vector& v) const;

  FormParams params_;
  Matrix gram_;
};

/// An element of G_r, stored with its determinant (±1 for orthogonal
/// groups, 1 for symplectic ones).
class GroupElement {
 public:
  /// Throws InvalidArgument unless `m` lies in G_r within `tol`.
  static GroupElement Make(const FormedSpace& space, Matrix m,
                           double tol = kDefaultTolerances.group);
  static GroupElement Identity(const FormedSpace& space);

  const Matrix& matrix() const { return m_; }
  Complex det() const { return det_; }
  /// Whether the element lies in S_r (determinant one).
  bool IsSpecial(double tol = kDefaultTolerances.group) const;

  Vector Apply(const Vector& v) const { return m_ * v; }
  GroupElement operator*(const GroupElement& other) const;
  /// Exact inverse J⁻¹ mᵀ J.
  GroupElement Inverse(const FormedSpace& space) const;

 private:
  GroupElement(Matrix m, Complex det) : m_(std::move(m)), det_(det) {}

  Matrix m_;
  Complex det_;
};

/// Perpendicular projection onto the hyperbolic plane ⟨v0, v1⟩ spanned by two
/// isotropic vectors with ω(v0, v1) ≠ 0.
Vector ProjHyperbolic(const FormedSpace& space, const Vector& v0,
                      const Vector& v1, const Vector& v,
                      double tol = kDefaultTolerances.generic);

/// v − ProjHyperbolic(v): the component in ⟨v0, v1⟩^⊥.
Vector ComplementHat(const FormedSpace& space, const Vector& v0,
                     const Vector& v1, const Vector& v,
                     double tol = kDefaultTolerances.generic);

struct AdaptedVector {
  Slot slot;
  Vector v;
};

/// Completes a partial adapted basis to a full one. `partial` must consist
/// of complete hyperbolic pairs (e_i together with f_i) and optionally h,
/// satisfying the adapted Gram relations within `tol`.
///
/// Missing pairs are filled greedily in basis order: an isotropic u of the
/// current ω-complement, then the complement vector w pairing most strongly
/// with u, rescaled to ω(u, w) = 1 and (for ε = +1) shifted by −q(w)/2·u.
/// A missing h is the last complement vector divided by the principal √q.
/// The result has the input vectors unchanged in their slots; its columns
/// form a matrix T ∈ G_r.
Matrix WittComplete(const FormedSpace& space,
                    std::span<const AdaptedVector> partial,
                    double tol = kDefaultTolerances.group);

/// ι: G_r → G_{r'} (r' ≥ r, same ε and d) placing `m` as the middle block
/// and fixing the outer e/f vectors.
Matrix EmbedIota(const FormedSpace& small, const FormedSpace& big,
                 const Matrix& m);

/// Projective normalization: the first coordinate with modulus above
/// 1e-12·‖v‖ becomes 1.
Vector NormalizeProjective(const Vector& v);

/// Chordal distance between the lines [a] and [b]: sin of the Hermitian angle,
/// computed without cancellation.
double ProjectiveDistance(const Vector& a, const Vector& b);

/// Uniformly chosen coordinates subject to q(v) = 0. For ε = +1 the f_r
/// coordinate is solved from the others (resampling when the e_r coordinate
/// is small), so isotropy holds to rounding.
Vector RandomIsotropic(const FormedSpace& space, Rng& rng);

/// The change of basis from the standard adapted basis to a random adapted
/// basis; lies in G_r. No claim of Haar distribution.
GroupElement RandomGroupElement(const FormedSpace& space, Rng& rng);

}  // namespace fsl

#endif  // FSL_FORMS_HPP
