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

#include "fsl/forms.hpp"

#include <algorithm>
#include <cmath>
#include <optional>

#include "fsl/linalg.hpp"

namespace fsl {

std::string Slot::Name() const {
  switch (kind) {
    case Kind::kE:
      return "e_" + std::to_string(index);
    case Kind::kF:
      return "f_" + std::to_string(index);
    case Kind::kH:
      break;
  }
  return "h";
}

FormParams FormParams::Make(int epsilon, int d, int r) {
  if (epsilon != 1 && epsilon != -1) {
    throw InvalidArgument("epsilon must be +1 or -1, got " +
                          std::to_string(epsilon));
  }
  if (d != 0 && d != 1) {
    throw InvalidArgument("d must be 0 or 1, got " + std::to_string(d));
  }
  if (epsilon == -1 && d == 1) {
    throw InvalidArgument("(epsilon, d) = (-1, 1) is not admissible");
  }
  if (r < 0) throw InvalidArgument("rank must be non-negative");
  return FormParams(epsilon, d, r);
}

std::string FormParams::Label() const {
  return std::string("(") + (epsilon_ == 1 ? "+1," : "-1,") +
         std::to_string(d_) + ")";
}

FormedSpace::FormedSpace(FormParams params)
    : params_(params), gram_(Matrix::Zero(params.n(), params.n())) {
  const int n = params_.n();
  const int r = params_.r();
  for (int i = 0; i < r; ++i) {
    gram_(i, n - 1 - i) = 1.0;
    gram_(n - 1 - i, i) = static_cast<double>(params_.epsilon());
  }
  if (params_.d() == 1) gram_(r, r) = 1.0;
}

int FormedSpace::IndexOf(Slot slot) const {
  const int r = params_.r();
  switch (slot.kind) {
    case Slot::Kind::kE:
    case Slot::Kind::kF:
      if (slot.index < 1 || slot.index > r) {
        throw InvalidArgument("slot " + slot.Name() + " out of range for r=" +
                              std::to_string(r));
      }
      return slot.kind == Slot::Kind::kE ? r - slot.index
                                         : r + params_.d() + slot.index - 1;
    case Slot::Kind::kH:
      if (params_.d() == 0) throw InvalidArgument("no h slot when d = 0");
      return r;
  }
  throw InvalidArgument("bad slot");
}

Slot FormedSpace::SlotAt(int index) const {
  const int r = params_.r();
  if (index < 0 || index >= n()) throw InvalidArgument("index out of range");
  if (index < r) return Slot::E(r - index);
  if (params_.d() == 1 && index == r) return Slot::H();
  return Slot::F(index - r - params_.d() + 1);
}

Vector FormedSpace::Basis(Slot slot) const {
  Vector v = Vector::Zero(n());
  v(IndexOf(slot)) = 1.0;
  return v;
}

void FormedSpace::CheckDimension(const Vector& v) const {
  if (v.size() != n()) {
    throw InvalidArgument("vector of length " + std::to_string(v.size()) +
                          " in a space of dimension " + std::to_string(n()));
  }
}

Complex FormedSpace::Omega(const Vector& v, const Vector& w) const {
  CheckDimension(v);
  CheckDimension(w);
  // The Gram matrix is a signed antidiagonal.
  const int n = params_.n();
  Complex s = 0.0;
  for (int i = 0; i < n; ++i) {
    s += v(i) * gram_(i, n - 1 - i) * w(n - 1 - i);
  }
  return s;
}

double FormedSpace::GroupResidual(const Matrix& m) const {
  if (m.rows() != n() || m.cols() != n()) {
    throw InvalidArgument("matrix size does not match the space");
  }
  if (n() == 0) return 0.0;
  const double scale = std::max(1.0, m.cwiseAbs2().maxCoeff());
  return (m.transpose() * gram_ * m - gram_).cwiseAbs().maxCoeff() / scale;
}

bool FormedSpace::IsInGroup(const Matrix& m, double tol) const {
  return GroupResidual(m) <= tol;
}

std::string FormedSpace::GroupName() const {
  const std::string k = std::to_string(n());
  return (epsilon() == -1 ? "Sp_" : "O_") + k + "(C)";
}

GroupElement GroupElement::Make(const FormedSpace& space, Matrix m,
                                double tol) {
  const double res = space.GroupResidual(m);
  if (!(res <= tol)) {
    throw InvalidArgument("matrix is not in " + space.GroupName() +
                          " (residual " + std::to_string(res) + ")");
  }
  const Complex det = space.n() == 0 ? Complex(1.0) : m.determinant();
  return GroupElement(std::move(m), det);
}

GroupElement GroupElement::Identity(const FormedSpace& space) {
  return GroupElement(Matrix::Identity(space.n(), space.n()), 1.0);
}

bool GroupElement::IsSpecial(double tol) const {
  return std::abs(det_ - 1.0) <= tol;
}

GroupElement GroupElement::operator*(const GroupElement& other) const {
  return GroupElement(m_ * other.m_, det_ * other.det_);
}

GroupElement GroupElement::Inverse(const FormedSpace& space) const {
  // Gram⁻¹ = Gramᵀ.
  const Matrix& j = space.gram();
  return GroupElement(j.transpose() * m_.transpose() * j, 1.0 / det_);
}

Vector ProjHyperbolic(const FormedSpace& space, const Vector& v0,
                      const Vector& v1, const Vector& v, double tol) {
  const Complex w01 = space.Omega(v0, v1);
  if (std::abs(w01) <= tol * v0.norm() * v1.norm()) {
    throw GenericityError("omega(v0,v1)",
                          "hyperbolic plane is degenerate: omega(v0,v1) ~ 0");
  }
  const Complex w10 = static_cast<double>(space.epsilon()) * w01;
  return space.Omega(v1, v) / w10 * v0 + space.Omega(v0, v) / w01 * v1;
}

Vector ComplementHat(const FormedSpace& space, const Vector& v0,
                     const Vector& v1, const Vector& v, double tol) {
  return v - ProjHyperbolic(space, v0, v1, v, tol);
}

namespace {

// Isotropic vector in span(y1, y2) for ε = +1, via the stable root of
// q2 t² + 2 m t + q1 = 0.
Vector IsotropicInPlane(const FormedSpace& space, const Vector& y1,
                        const Vector& y2) {
  const Complex q1 = space.Q(y1);
  const Complex q2 = space.Q(y2);
  const Complex m = space.Omega(y1, y2);
  const double scale = y1.squaredNorm() + y2.squaredNorm();
  if (std::abs(q1) <= 1e-14 * scale) return y1;
  if (std::abs(q2) <= 1e-14 * scale) return y2;
  const Complex disc = std::sqrt(m * m - q1 * q2);
  const Complex a = -m - disc;
  const Complex b = -m + disc;
  const Complex den = std::abs(a) >= std::abs(b) ? a : b;
  if (std::abs(den) == 0.0) {
    throw InternalError("no isotropic vector in a 2-dimensional complement");
  }
  return y1 + (q1 / den) * y2;
}

// Fills every empty slot of `basis`. `comp` holds an orthonormal basis of the
// ω-complement of the filled slots. Pairs are taken in basis order; with an
// rng, the choices inside the complement are random.
void FillFromComplement(const FormedSpace& space, std::vector<Vector>& basis,
                        std::vector<bool>& filled, Matrix comp, Rng* rng) {
  const int r = space.r();
  const double eps = static_cast<double>(space.epsilon());
  for (int i = r; i >= 1; --i) {
    const int ie = space.IndexOf(Slot::E(i));
    const int jf = space.IndexOf(Slot::F(i));
    if (filled[ie]) continue;
    const int m = static_cast<int>(comp.cols());
    if (m < 2) throw InternalError("complement too small to host a pair");

    Vector u;
    if (rng != nullptr) {
      const Vector y1 = comp * rng->ComplexGaussianVector(m);
      u = eps < 0 ? y1
                  : IsotropicInPlane(space, y1,
                                     comp * rng->ComplexGaussianVector(m));
    } else {
      u = eps < 0 ? Vector(comp.col(0))
                  : IsotropicInPlane(space, comp.col(0), comp.col(1));
      u /= u.norm();
    }

    Vector w;
    if (rng != nullptr) {
      w = comp * rng->ComplexGaussianVector(m);
    } else {
      int best = 0;
      double best_abs = -1.0;
      for (int k = 0; k < m; ++k) {
        const double a = std::abs(space.Omega(u, comp.col(k)));
        if (a > best_abs) {
          best_abs = a;
          best = k;
        }
      }
      w = comp.col(best);
    }
    const Complex uw = space.Omega(u, w);
    if (std::abs(uw) <= 1e-14 * u.norm() * w.norm()) {
      throw InternalError("complement vector orthogonal to the chosen u");
    }
    w /= uw;
    if (eps > 0) w -= space.Q(w) / 2.0 * u;

    basis[ie] = u;
    basis[jf] = w;
    filled[ie] = filled[jf] = true;

    Matrix a(2, space.n());
    a.row(0) = u.transpose() * space.gram();
    a.row(1) = w.transpose() * space.gram();
    comp = comp * OrthonormalNullspace(a * comp);
  }
  if (space.d() == 1) {
    const int ih = space.IndexOf(Slot::H());
    if (!filled[ih]) {
      if (comp.cols() != 1) throw InternalError("complement of h not a line");
      Vector y = comp.col(0);
      if (rng != nullptr) y *= rng->ComplexGaussian();
      basis[ih] = y / std::sqrt(space.Q(y));
      filled[ih] = true;
    }
  }
}

Matrix Assemble(const FormedSpace& space, const std::vector<Vector>& basis) {
  Matrix t(space.n(), space.n());
  for (int k = 0; k < space.n(); ++k) t.col(k) = basis[k];
  return t;
}

}  // namespace

Matrix WittComplete(const FormedSpace& space,
                    std::span<const AdaptedVector> partial, double tol) {
  const int n = space.n();
  std::vector<Vector> basis(n);
  std::vector<bool> filled(n, false);
  for (const auto& av : partial) {
    const int k = space.IndexOf(av.slot);
    if (av.v.size() != n) throw InvalidArgument("partial vector has wrong size");
    if (filled[k]) {
      throw InvalidArgument("slot " + av.slot.Name() + " given twice");
    }
    basis[k] = av.v;
    filled[k] = true;
  }
  for (int i = 1; i <= space.r(); ++i) {
    if (filled[space.IndexOf(Slot::E(i))] !=
        filled[space.IndexOf(Slot::F(i))]) {
      throw InvalidArgument("partial basis must contain full pairs; e_" +
                            std::to_string(i) + "/f_" + std::to_string(i) +
                            " is incomplete");
    }
  }

  // Gram relations among the given vectors.
  std::vector<int> given;
  for (int k = 0; k < n; ++k) {
    if (filled[k]) given.push_back(k);
  }
  double scale = 1.0;
  for (int k : given) scale = std::max(scale, basis[k].squaredNorm());
  for (int a : given) {
    for (int b : given) {
      const Complex expect = space.gram()(a, b);
      if (std::abs(space.Omega(basis[a], basis[b]) - expect) > tol * scale) {
        throw InvalidArgument("partial basis violates the Gram relation for (" +
                              space.SlotAt(a).Name() + ", " +
                              space.SlotAt(b).Name() + ")");
      }
    }
  }

  Matrix a(static_cast<Eigen::Index>(given.size()), n);
  for (std::size_t k = 0; k < given.size(); ++k) {
    a.row(static_cast<Eigen::Index>(k)) =
        basis[given[k]].transpose() * space.gram();
  }
  FillFromComplement(space, basis, filled, OrthonormalNullspace(a), nullptr);

  Matrix t = Assemble(space, basis);
  const double res = space.GroupResidual(t);
  if (!(res <= tol)) {
    throw InternalError("Witt completion residual " + std::to_string(res));
  }
  return t;
}

Matrix EmbedIota(const FormedSpace& small, const FormedSpace& big,
                 const Matrix& m) {
  if (small.epsilon() != big.epsilon() || small.d() != big.d() ||
      small.r() > big.r()) {
    throw InvalidArgument("embedding needs the same (epsilon,d) and r <= r'");
  }
  if (m.rows() != small.n() || m.cols() != small.n()) {
    throw InvalidArgument("matrix size does not match the small space");
  }
  const int k = big.r() - small.r();
  Matrix out = Matrix::Identity(big.n(), big.n());
  out.block(k, k, small.n(), small.n()) = m;
  return out;
}

Vector NormalizeProjective(const Vector& v) {
  const double nv = v.norm();
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (std::abs(v(i)) > 1e-12 * nv) return v / v(i);
  }
  return v;
}

double ProjectiveDistance(const Vector& a, const Vector& b) {
  const double na = a.norm();
  const double nb = b.norm();
  if (na == 0.0 || nb == 0.0) return 1.0;
  const Vector x = a / na;
  const Vector y = b / nb;
  return (x - y * y.dot(x)).norm();
}

Vector RandomIsotropic(const FormedSpace& space, Rng& rng) {
  const int n = space.n();
  if (space.r() == 0) {
    throw InvalidArgument("no isotropic lines when r = 0");
  }
  for (;;) {
    Vector v = rng.ComplexGaussianVector(n);
    if (space.epsilon() == -1) return v;
    if (std::abs(v(0)) < 0.05) continue;
    v(n - 1) = 0.0;
    v(n - 1) = -space.Q(v) / (2.0 * v(0));
    return v;
  }
}

GroupElement RandomGroupElement(const FormedSpace& space, Rng& rng) {
  const int n = space.n();
  for (;;) {
    std::vector<Vector> basis(n);
    std::vector<bool> filled(n, false);
    FillFromComplement(space, basis, filled, Matrix::Identity(n, n), &rng);
    Matrix t = Assemble(space, basis);
    // Badly conditioned draws are legal but useless for testing.
    if (n > 0 && ConditionNumber(t) > 1e3) continue;
    return GroupElement::Make(space, std::move(t));
  }
}

}  // namespace fsl
