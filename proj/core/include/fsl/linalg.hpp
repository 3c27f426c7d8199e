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

#ifndef FSL_LINALG_HPP
#define FSL_LINALG_HPP

#include "fsl/types.hpp"

namespace fsl {

/// Relative singular-value threshold used for every rank decision.
inline constexpr double kRankTolerance = 1e-8;

/// Number of singular values above `rel_tol` times the largest one.
int NumericalRank(const Matrix& m, double rel_tol = kRankTolerance);

/// Orthonormal (Hermitian) basis of the column span of `m`, as columns.
Matrix OrthonormalColumnBasis(const Matrix& m,
                              double rel_tol = kRankTolerance);

/// Orthonormal basis of {x ∈ ℂ^cols : m x = 0}. With zero rows this is the
/// identity.
Matrix OrthonormalNullspace(const Matrix& m, double rel_tol = kRankTolerance);

/// Ratio of extreme singular values; infinity when singular.
/// Same decision as NumericalRank(m) == m.cols() for m.rows() >= m.cols(),
/// usually without an SVD: singular values of m are bracketed through a QR
/// factorization and the SVD only settles inputs near the threshold.
bool HasFullColumnRank(const Matrix& m, double rel_tol = kRankTolerance);

double ConditionNumber(const Matrix& m);

}  // namespace fsl

#endif  // FSL_LINALG_HPP
