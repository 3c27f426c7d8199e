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

#ifndef FSL_REDUCTION_HPP
#define FSL_REDUCTION_HPP

#include <array>
#include <vector>

#include "fsl/cross_ratios.hpp"
#include "fsl/forms.hpp"

namespace fsl {

/// The three forms of x₀ in φ₂ = e_r + f_r + x₀. Throws InvalidArgument
/// when r < r₁.
Vector Phi2Vector(const FormedSpace& space);
/// [e_r, f_r, φ₂].
ConfigTuple Phi2(const FormedSpace& space);

/// a₁e_r + φ₋(a)e_{r−1} + εφ₊(a)f_{r−1} + εa₂f_r. Needs r ≥ 2.
Vector Phi3Vector(const FormedSpace& space, const Pair& a);
/// [e_r, f_r, φ₂, φ₃(a)]. Throws DomainError outside Ω₃ (a₁a₂ = 0 or
/// Δ(a) ~ 0).
ConfigTuple Phi3(const FormedSpace& space, const Pair& a,
                 double tol = kDefaultTolerances.generic);

/// φ̃₄ in span(e_r, e_{r−1}, f_{r−1}, f_r), x = (a₁, a₂, b₁, b₂, c₁).
Vector Phi4TildeVector(const FormedSpace& space,
                       const std::array<Complex, 5>& x);
/// φ̃₄ plus the isotropy correction: e_{r−2} − q(φ̃₄)/2·f_{r−2} for r ≥ 3,
/// √(−q(φ̃₄))·h for (+1,1) at r = 2, nothing for (−1,0) at r = 2.
Vector Phi4Vector(const FormedSpace& space, const std::array<Complex, 5>& x);
/// [e_r, f_r, φ₂, φ₃(a), φ₄(x)]. Throws DomainError outside Ω₄ and
/// InvalidArgument when r < r₁ + 1.
ConfigTuple Phi4(const FormedSpace& space, const std::array<Complex, 5>& x,
                 double tol = kDefaultTolerances.generic);

enum class SqrtBranch { kPrincipal, kNegated };

struct ReductionResult {
  GroupElement g;
  ConfigTuple canonical;
  double residual = 0.0;   // max chordal distance between g·t and canonical
  double condition = 1.0;  // worst condition estimate of the linear solves
  bool ill_conditioned = false;
};

/// Data of the adapted basis built from a generic 4-tuple.
struct QuadrupleFrame {
  Complex pi;
  Complex lambda;
  Complex mu;
  Pair z;  // π₃(t)
  Vector e_r, e_r1, f_r1, f_r;  // e′_r, e′_{r−1}, f′_{r−1}, f′_r
  double condition = 1.0;
};

QuadrupleFrame ComputeQuadrupleFrame(const ConfigTuple& t,
                                     SqrtBranch branch = SqrtBranch::kPrincipal);

ReductionResult ReduceTriple(const ConfigTuple& t);
ReductionResult ReduceQuadruple(const ConfigTuple& t,
                                SqrtBranch branch = SqrtBranch::kPrincipal);
ReductionResult ReduceQuintuple(const ConfigTuple& t,
                                SqrtBranch branch = SqrtBranch::kPrincipal);

/// Relative residuals of ω(e′, v₄) and ω(f′, v₄) against their closed forms
/// in terms of ψ∓ and Δ^{1/2}.
std::array<double, 2> PairingLemmaResiduals(const ConfigTuple& t);

/// Identities of the complement map onto ⟨v₀, v₁⟩ for a 4-tuple.
std::vector<NamedResidual> HatLemmaResiduals(const ConfigTuple& t);

/// Rank condition for reducing 5-tuples.
bool SupportsQuintuples(const FormedSpace& space);

}  // namespace fsl

#endif  // FSL_REDUCTION_HPP
