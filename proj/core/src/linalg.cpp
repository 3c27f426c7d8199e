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

#include "fsl/linalg.hpp"

#include <cmath>
#include <limits>

namespace fsl {
namespace {

int RankFromSingularValues(const Eigen::VectorXd& s, double rel_tol) {
  if (s.size() == 0 || s(0) == 0.0) return 0;
  int rank = 0;
  for (Eigen::Index i = 0; i < s.size(); ++i)
    if (s(i) > rel_tol * s(0)) ++rank;
  return rank;
}

}  // namespace

int NumericalRank(const Matrix& m, double rel_tol) {
  if (m.rows() == 0 || m.cols() == 0) return 0;
  Eigen::JacobiSVD<Matrix> svd(m);
  return RankFromSingularValues(svd.singularValues(), rel_tol);
}

Matrix OrthonormalColumnBasis(const Matrix& m, double rel_tol) {
  if (m.rows() == 0 || m.cols() == 0) return Matrix(m.rows(), 0);
  Eigen::JacobiSVD<Matrix> svd(m, Eigen::ComputeThinU);
  const int rank = RankFromSingularValues(svd.singularValues(), rel_tol);
  return svd.matrixU().leftCols(rank);
}

Matrix OrthonormalNullspace(const Matrix& m, double rel_tol) {
  const auto cols = m.cols();
  if (m.rows() == 0) return Matrix::Identity(cols, cols);
  Eigen::JacobiSVD<Matrix> svd(m, Eigen::ComputeFullV);
  const int rank = RankFromSingularValues(svd.singularValues(), rel_tol);
  return svd.matrixV().rightCols(cols - rank);
}

bool HasFullColumnRank(const Matrix& m, double rel_tol) {
  const auto k = m.cols();
  if (k == 0) return true;
  if (m.rows() < k) return false;
  const double fro = m.norm();
  if (fro == 0.0) return false;
  const Matrix r =
      Eigen::HouseholderQR<Matrix>(m).matrixQR().topRows(k).triangularView<
          Eigen::Upper>();
  bool singular = false;
  for (Eigen::Index i = 0; i < k; ++i) singular = singular || r(i, i) == 0.0;
  if (!singular) {
    const Matrix inv = r.triangularView<Eigen::Upper>().solve(
        Matrix::Identity(k, k));
    const double inv_fro = inv.norm();
    // σ_max ∈ [‖m‖_F/√k, ‖m‖_F], σ_min ∈ [1/‖R⁻¹‖_F, √k/‖R⁻¹‖_F].
    const double lower = 1.0 / (inv_fro * fro);
    const double upper = k / (inv_fro * fro);
    if (std::isfinite(inv_fro)) {
      if (lower > rel_tol) return true;
      if (upper <= rel_tol) return false;
    }
  }
  return NumericalRank(m, rel_tol) == k;
}

double ConditionNumber(const Matrix& m) {
  Eigen::JacobiSVD<Matrix> svd(m);
  const auto& s = svd.singularValues();
  if (s.size() == 0) return 1.0;
  const double smallest = s(s.size() - 1);
  if (smallest == 0.0) return std::numeric_limits<double>::infinity();
  return s(0) / smallest;
}

}  // namespace fsl
