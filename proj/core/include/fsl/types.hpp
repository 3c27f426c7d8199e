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

#ifndef FSL_TYPES_HPP
#define FSL_TYPES_HPP

#include <complex>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace fsl {

using Complex = std::complex<double>;
using Vector = Eigen::VectorXcd;
using Matrix = Eigen::MatrixXcd;

/// Numerical thresholds shared by every module. All are relative to the
/// magnitudes of the inputs they are applied to.
struct Tolerances {
  double group = 1e-9;     // ‖mᵀJm − J‖_max for group membership
  double generic = 1e-8;   // genericity predicates (vanishing pairings, Δ)
  double value = 1e-7;     // dilogarithm-dependent identities
  double reduce = 1e-8;    // projective residual of a reduction
  double ill_conditioned = 1e8;
};

inline constexpr Tolerances kDefaultTolerances{};

/// Base class of all errors thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Bad arguments: inadmissible (ε, d), size mismatches, out-of-range ranks.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// Input lies outside the generic locus an operation requires. `predicate`
/// names the failing condition, e.g. "omega(v0,v3)" or "Delta".
class GenericityError : public Error {
 public:
  GenericityError(std::string predicate, const std::string& what)
      : Error(what), predicate_(std::move(predicate)) {}
  const std::string& predicate() const { return predicate_; }

 private:
  std::string predicate_;
};

/// A parameter lies outside the domain of a closed-form expression.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// An invariant that cannot fail on admissible input did fail.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace fsl

#endif  // FSL_TYPES_HPP
