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

#ifndef FSL_NORMS_HPP
#define FSL_NORMS_HPP

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "fsl/random.hpp"

namespace fsl {

enum class Family { kA, kB, kC, kD };

struct FamilyTag {
  Family family = Family::kA;
  int r = 1;

  /// Parses "A3", "b2", ... Throws InvalidArgument.
  static FamilyTag Parse(std::string_view s);
  static FamilyTag Make(Family family, int r);

  std::string Name() const;
  /// D₁ and D₂ are outside the range of the stability theorem.
  bool Exceptional() const { return family == Family::kD && r <= 2; }
};

/// Exact Dynkin index of the principal SL₂ in the family.
std::int64_t DynkinIndex(const FamilyTag& tag);

/// n(n² − 1)/6, the coefficient of v in ‖bₙ‖.
std::int64_t BnCoefficient(int n);
/// ‖bₙ‖ = n(n² − 1)/6 · v. Throws InvalidArgument for n < 2.
double GromovNormBn(int n);

struct FamilyNorm {
  double value = 0.0;
  int ambient_n = 0;      // n with b_F = factor · res(bₙ)
  double factor = 1.0;    // 1 or 1/2
  bool conjecture = false;
  std::string status;     // "theorem" or "CONJECTURE"
};

/// ‖b_F‖ for A, B, C (a theorem), and I(D_r)·v for D, a conjecture except
/// at r = 2.
FamilyNorm FamilyGromovNorm(const FamilyTag& tag);

/// Real parameters of a sample.
using Params = std::vector<double>;
using Sampler = std::function<Params(Rng&)>;
using Objective = std::function<double(std::span<const double>)>;

struct RefineOptions {
  int iterations = 20;
  double initial_step = 0.05;
};

struct SupEstimate {
  double value = 0.0;          // after refinement
  double sampled_value = 0.0;  // best raw sample
  Params argmax;
  std::uint64_t best_trial = 0;
  std::uint64_t trials = 0;
};

/// Number of worker threads: FSL_THREADS if set (≥ 1), else the hardware
/// concurrency.
int ThreadCount();

/// max |f| over `trials` samples, then coordinate-descent refinement.
/// Trial i draws from Rng(StreamSeed(seed, label, i)), so the result does not
/// depend on the thread count. Ties go to the lowest trial index.
SupEstimate EstimateSup(const Objective& f, const Sampler& sampler,
                        std::uint64_t trials, std::uint64_t seed,
                        std::string_view label, const RefineOptions& refine = {},
                        int threads = 0);

/// Coordinate descent on |f|: each iteration tries ±step on every
/// coordinate, then halves the step.
Params Refine(const Objective& f, Params start, const RefineOptions& refine,
              double* value = nullptr);

// Built-in objectives and samplers.

/// |𝒟(z)| with z = (p₀ + i p₁).
Objective VolP1Objective();
/// Uniform z in [−1, 2] × [−2, 2].
Sampler VolP1Sampler();
/// |B₄(F_∞, F₀, F₁, F_{(a,b)})| with a = p₀ + i p₁, b = p₂ + i p₃.
Objective B4So4Objective();
Sampler B4So4Sampler();
/// |Bₙ| of four flags with entries given by 8n² real parameters.
Objective BnObjective(int n);
Sampler BnSampler(int n);

struct OperatorNorm {
  std::int64_t numerator = 2;
  std::int64_t denominator = 5;
  double exact = 0.4;
  double sampled = 0.0;  // sampled sup of |B₄∘ρ^{×4}| over ‖b₄‖
  SupEstimate estimate;
};

/// Operator norm of res₂: H³_b(SL₄) → H³_b(SO₄), exactly 2/5, with a
/// sampled corroboration.
OperatorNorm OperatorNormRes2(std::uint64_t trials, std::uint64_t seed,
                              int threads = 0);

}  // namespace fsl

#endif  // FSL_NORMS_HPP
