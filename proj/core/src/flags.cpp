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

#include "fsl/flags.hpp"

#include <algorithm>
#include <cmath>

#include "fsl/dilogarithm.hpp"
#include "fsl/linalg.hpp"

namespace fsl {

AffineFlag AffineFlag::Make(Matrix vecs) {
  if (vecs.rows() != vecs.cols() || vecs.rows() == 0) {
    throw InvalidArgument("a flag in C^n needs n spanning vectors");
  }
  if (NumericalRank(vecs) < vecs.cols()) {
    throw InvalidArgument("flag vectors are linearly dependent");
  }
  return AffineFlag(std::move(vecs));
}

AffineFlag AffineFlag::Transformed(const Matrix& g) const {
  if (g.rows() != n() || g.cols() != n()) {
    throw InvalidArgument("matrix size does not match the flag");
  }
  return AffineFlag(g * vecs_);
}

AffineFlag AffineFlag::Rescaled(const Vector& s) const {
  if (s.size() != n()) throw InvalidArgument("scalar count mismatch");
  return AffineFlag(vecs_ * s.asDiagonal());
}

namespace {

int CheckFlags(std::span<const AffineFlag> flags, std::size_t count) {
  if (flags.size() != count) {
    throw InvalidArgument("expected " + std::to_string(count) + " flags");
  }
  const int n = flags[0].n();
  for (const auto& f : flags) {
    if (f.n() != n) throw InvalidArgument("flags of different dimensions");
  }
  return n;
}

// Columns v_i^1..v_i^{j_i} of every flag.
Matrix Span(std::span<const AffineFlag> flags, const IndexTuple& j) {
  const int n = flags[0].n();
  int cols = 0;
  for (int k = 0; k < 4; ++k) cols += j[k];
  Matrix m(n, cols);
  int at = 0;
  for (int k = 0; k < 4; ++k) {
    m.middleCols(at, j[k]) = flags[k].vecs().leftCols(j[k]);
    at += j[k];
  }
  return m;
}

// Calls fn(J) for every J ∈ {0..hi}⁴ with Σ J = sum.
template <typename Fn>
void ForEachWithSum(int hi, int sum, Fn&& fn) {
  for (int a = 0; a <= std::min(hi, sum); ++a) {
    for (int b = 0; b <= std::min(hi, sum - a); ++b) {
      for (int c = 0; c <= std::min(hi, sum - a - b); ++c) {
        const int d = sum - a - b - c;
        if (d <= hi) fn(IndexTuple{a, b, c, d});
      }
    }
  }
}

}  // namespace

bool GeneralPosition(std::span<const AffineFlag> flags) {
  const int n = CheckFlags(flags, 4);
  // Independence of the Σ J = n spans implies it for every smaller sum.
  bool ok = true;
  ForEachWithSum(n, n, [&](const IndexTuple& j) {
    if (ok && !HasFullColumnRank(Span(flags, j))) ok = false;
  });
  return ok;
}

Sigma3Class TJ(std::span<const AffineFlag> flags, const IndexTuple& j) {
  const int n = CheckFlags(flags, 4);
  for (int k = 0; k < 4; ++k) {
    if (j[k] < 0 || j[k] >= n) throw InvalidArgument("J entry out of range");
  }
  const Matrix ud = OrthonormalColumnBasis(Span(flags, j));
  Matrix top(n, 4);
  for (int k = 0; k < 4; ++k) top.col(k) = flags[k].vecs().col(j[k]);
  const Matrix projected = top - ud * (ud.adjoint() * top);
  const Matrix w = OrthonormalColumnBasis(projected);

  Sigma3Class c;
  c.m = static_cast<int>(w.cols());
  const Matrix coords = w.adjoint() * projected;
  for (int k = 0; k < 4; ++k) {
    c.images[k] = coords.col(k);
    c.source_norms[k] = top.col(k).norm();
  }
  return c;
}

double VolSigma3(const Sigma3Class& c) {
  if (c.m != 2) return 0.0;
  std::array<Eigen::Vector2cd, 4> p;
  for (int k = 0; k < 4; ++k) {
    if (c.images[k].norm() <= kRankTolerance * c.source_norms[k]) return 0.0;
    p[k] = c.images[k];
  }
  return VolP1(p);
}

double BnJ(std::span<const AffineFlag> flags, const IndexTuple& j) {
  return VolSigma3(TJ(flags, j));
}

double BnFull(std::span<const AffineFlag> flags) {
  const int n = CheckFlags(flags, 4);
  double s = 0.0;
  IndexTuple j{};
  for (j[0] = 0; j[0] < n; ++j[0]) {
    for (j[1] = 0; j[1] < n; ++j[1]) {
      for (j[2] = 0; j[2] < n; ++j[2]) {
        for (j[3] = 0; j[3] < n; ++j[3]) {
          // Quotients of dimension below 2 cannot contribute.
          if (j[0] + j[1] + j[2] + j[3] >= n - 1 &&
              NumericalRank(Span(flags, j)) >= n - 1) {
            continue;
          }
          s += BnJ(flags, j);
        }
      }
    }
  }
  return s;
}

double Bn(std::span<const AffineFlag> flags) {
  const int n = CheckFlags(flags, 4);
  if (!GeneralPosition(flags)) return BnFull(flags);
  double s = 0.0;
  ForEachWithSum(n - 1, n - 2, [&](const IndexTuple& j) { s += BnJ(flags, j); });
  return s;
}

std::vector<IndexTuple> ContributingIndices(std::span<const AffineFlag> flags) {
  const int n = CheckFlags(flags, 4);
  std::vector<IndexTuple> out;
  IndexTuple j{};
  for (j[0] = 0; j[0] < n; ++j[0]) {
    for (j[1] = 0; j[1] < n; ++j[1]) {
      for (j[2] = 0; j[2] < n; ++j[2]) {
        for (j[3] = 0; j[3] < n; ++j[3]) {
          const Sigma3Class c = TJ(flags, j);
          if (c.m != 2) continue;
          bool nonzero = true;
          for (int k = 0; k < 4; ++k) {
            nonzero = nonzero &&
                      c.images[k].norm() > kRankTolerance * c.source_norms[k];
          }
          if (nonzero) out.push_back(j);
        }
      }
    }
  }
  return out;
}

CocycleCheck CocycleResidual(std::span<const AffineFlag> flags) {
  CheckFlags(flags, 5);
  CocycleCheck out;
  out.general_position = true;
  for (int i = 0; i < 5; ++i) {
    std::vector<AffineFlag> face;
    for (int k = 0; k < 5; ++k) {
      if (k != i) face.push_back(flags[k]);
    }
    out.general_position = out.general_position && GeneralPosition(face);
    out.residual += (i % 2 == 0 ? 1.0 : -1.0) * Bn(face);
  }
  return out;
}

AffineFlag RandomFlag(int n, Rng& rng) {
  for (;;) {
    Matrix m = rng.ComplexGaussianMatrix(n, n);
    if (NumericalRank(m) == n) return AffineFlag::Make(std::move(m));
  }
}

Matrix LinePlus(Complex a, bool infinite) {
  Matrix l = Matrix::Zero(4, 2);
  if (infinite) {
    l(2, 0) = 1.0;  // f₂
    l(3, 1) = 1.0;  // f₁
  } else {
    l(0, 0) = 1.0;
    l(2, 0) = -a;
    l(1, 1) = 1.0;
    l(3, 1) = a;
  }
  return l;
}

Matrix LineMinus(Complex b, bool infinite) {
  Matrix l = Matrix::Zero(4, 2);
  if (infinite) {
    l(1, 0) = 1.0;  // e₂
    l(3, 1) = 1.0;  // f₁
  } else {
    l(0, 0) = 1.0;
    l(1, 0) = b;
    l(3, 1) = b;
    l(2, 1) = -1.0;
  }
  return l;
}

Vector PhiAB(Complex a, Complex b) {
  Vector v(4);
  v << 1.0, b, -a, a * b;
  return v;
}

namespace {

// The column of `line` farthest from span(basis), orthonormal `basis`.
Vector FarthestColumn(const Matrix& line, const Matrix& basis) {
  Vector best;
  double best_d = -1.0;
  for (Eigen::Index k = 0; k < line.cols(); ++k) {
    const Vector v = line.col(k);
    const double d =
        (v - basis * (basis.adjoint() * v)).norm() / std::max(v.norm(), 1e-300);
    if (d > best_d) {
      best_d = d;
      best = v;
    }
  }
  return best;
}

}  // namespace

AffineFlag RhoFromLines(const Matrix& l_plus, const Matrix& l_minus,
                        RhoVariant variant) {
  if (l_plus.rows() != 4 || l_plus.cols() != 2 || l_minus.rows() != 4 ||
      l_minus.cols() != 2) {
    throw InvalidArgument("boundary lines are 4x2 matrices");
  }
  Matrix stacked(4, 4);
  stacked << l_plus, -l_minus;
  const Matrix ker = OrthonormalNullspace(stacked);
  if (ker.cols() != 1) {
    throw InvalidArgument("boundary planes must meet in exactly a line");
  }
  const Vector phi = l_plus * ker.col(0).head(2);

  const Matrix& first = variant == RhoVariant::kPlusFirst ? l_plus : l_minus;
  const Matrix& second = variant == RhoVariant::kPlusFirst ? l_minus : l_plus;
  Matrix vecs(4, 4);
  vecs.col(0) = phi;
  vecs.col(1) = FarthestColumn(first, OrthonormalColumnBasis(vecs.leftCols(1)));
  vecs.col(2) =
      FarthestColumn(second, OrthonormalColumnBasis(vecs.leftCols(2)));
  const Matrix rest = OrthonormalNullspace(vecs.leftCols(3).adjoint());
  vecs.col(3) = rest.col(0);
  return AffineFlag::Make(std::move(vecs));
}

AffineFlag Rho(const BoundaryPoint& p, RhoVariant variant) {
  return RhoFromLines(LinePlus(p.a, p.a_infinite), LineMinus(p.b, p.b_infinite),
                      variant);
}

AffineFlag StandardFlagSO4(Complex a, Complex b) {
  return Rho(BoundaryPoint::Finite(a, b));
}

double B4Standard(Complex a, Complex b) {
  static const std::array<AffineFlag, 3> fixed{Rho(BoundaryPoint::Infinity()),
                                               StandardFlagSO4(0.0, 0.0),
                                               StandardFlagSO4(1.0, 1.0)};
  const std::array<AffineFlag, 4> f{fixed[0], fixed[1], fixed[2],
                                    StandardFlagSO4(a, b)};
  return Bn(f);
}

}  // namespace fsl
