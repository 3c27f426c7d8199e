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

#include "fsl/reduction.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "fsl/linalg.hpp"

namespace fsl {
namespace {

double Eps(const FormedSpace& space) {
  return static_cast<double>(space.epsilon());
}

void RequireRank(const FormedSpace& space, int min_r, const char* what) {
  if (space.r() < min_r) {
    throw InvalidArgument(std::string(what) + " needs r >= " +
                          std::to_string(min_r) + " for " +
                          space.params().Label() + ", got r = " +
                          std::to_string(space.r()));
  }
}

// g = T⁻¹ for T ∈ G_r.
Matrix InverseOfAdapted(const FormedSpace& space, const Matrix& t) {
  const Matrix& j = space.gram();
  return j.transpose() * t.transpose() * j;
}

// Adapted pair (E, F) in span(comp) with y = E + c·F. Requires
// q(y) = c·(1+ε).
std::pair<Vector, Vector> PairThrough(const FormedSpace& space,
                                      const Matrix& comp, const Vector& y,
                                      Complex c) {
  const Complex qy = space.Q(y);
  int best = -1;
  double best_abs = 0.0;
  for (Eigen::Index k = 0; k < comp.cols(); ++k) {
    const Vector col = comp.col(k);
    const Complex w = space.Omega(y, col);
    const double a = std::abs(w * w - space.Q(col) * qy);
    if (a > best_abs) {
      best_abs = a;
      best = static_cast<int>(k);
    }
  }
  if (best < 0) throw InternalError("no partner for x0 in its complement");
  const Vector k = comp.col(best);
  const Complex w = space.Omega(y, k);
  const Complex s = std::sqrt(w * w - space.Q(k) * qy);
  const Complex den = std::abs(-w - s) >= std::abs(-w + s) ? -w - s : -w + s;
  Vector f = k + (space.Q(k) / den) * y;
  f /= space.Omega(y, f);
  Vector e = y - c * f;
  return {std::move(e), std::move(f)};
}

bool NonzeroRelative(Complex x, double scale, double tol) {
  return std::abs(x) > tol * std::max(1.0, scale);
}

void CheckOmega3(int eps, const Pair& a, double tol) {
  const double s = std::abs(a[0]) + std::abs(a[1]);
  if (!NonzeroRelative(a[0], 0.0, tol) || !NonzeroRelative(a[1], 0.0, tol)) {
    throw DomainError("a1*a2 = 0: outside Omega3");
  }
  if (!NonzeroRelative(Delta(eps, a[0], a[1]), (1.0 + s) * (1.0 + s), tol)) {
    throw DomainError("Delta(a) = 0: outside Omega3");
  }
}

ReductionResult Finish(const ConfigTuple& t,
                       GroupElement g, ConfigTuple canonical,
                       double condition) {
  const ConfigTuple moved = t.Transformed(g.matrix());
  const double res = moved.ProjectiveResidual(canonical);
  return ReductionResult{std::move(g), std::move(canonical), res, condition,
                         condition > kDefaultTolerances.ill_conditioned};
}

}  // namespace

Vector Phi2Vector(const FormedSpace& space) {
  RequireRank(space, space.params().r1(), "phi2");
  const int r = space.r();
  Vector v = space.Basis(Slot::E(r)) + space.Basis(Slot::F(r));
  if (r >= 2) {
    v += space.Basis(Slot::E(r - 1)) - space.Basis(Slot::F(r - 1));
  } else if (space.d() == 1) {
    v += std::sqrt(Complex(-2.0)) * space.Basis(Slot::H());
  }
  return v;
}

ConfigTuple Phi2(const FormedSpace& space) {
  const int r = space.r();
  RequireRank(space, space.params().r1(), "phi2");
  return ConfigTuple::Make(space, {space.Basis(Slot::E(r)),
                                   space.Basis(Slot::F(r)), Phi2Vector(space)});
}

Vector Phi3Vector(const FormedSpace& space, const Pair& a) {
  RequireRank(space, 2, "phi3");
  const int r = space.r();
  const int eps = space.epsilon();
  Vector v = Vector::Zero(space.n());
  v(space.IndexOf(Slot::E(r))) = a[0];
  v(space.IndexOf(Slot::E(r - 1))) = Varphi(eps, -1, a[0], a[1]);
  v(space.IndexOf(Slot::F(r - 1))) = Eps(space) * Varphi(eps, 1, a[0], a[1]);
  v(space.IndexOf(Slot::F(r))) = Eps(space) * a[1];
  return v;
}

ConfigTuple Phi3(const FormedSpace& space, const Pair& a, double tol) {
  RequireRank(space, 2, "phi3");
  CheckOmega3(space.epsilon(), a, tol);
  const int r = space.r();
  return ConfigTuple::Make(space,
                           {space.Basis(Slot::E(r)), space.Basis(Slot::F(r)),
                            Phi2Vector(space), Phi3Vector(space, a)});
}

Vector Phi4TildeVector(const FormedSpace& space,
                       const std::array<Complex, 5>& x) {
  RequireRank(space, 2, "phi4");
  const int r = space.r();
  const int eps = space.epsilon();
  const Pair a{x[0], x[1]};
  const Pair b{x[2], x[3]};
  const Pair c{x[4], DerivedC2(eps, a, b, x[4])};
  const Complex s = SqrtDelta(eps, a[0], a[1]);
  if (s == 0.0) throw DomainError("Delta^(1/2)(a) = 0");
  Vector v = Vector::Zero(space.n());
  v(space.IndexOf(Slot::E(r))) = b[0];
  v(space.IndexOf(Slot::E(r - 1))) = Psi(eps, -1, a, b, c) / s;
  v(space.IndexOf(Slot::F(r - 1))) = Eps(space) * Psi(eps, 1, a, b, c) / s;
  v(space.IndexOf(Slot::F(r))) = Eps(space) * b[1];
  return v;
}

bool SupportsQuintuples(const FormedSpace& space) {
  return space.r() >= space.params().r1() + 1;
}

Vector Phi4Vector(const FormedSpace& space, const std::array<Complex, 5>& x) {
  RequireRank(space, space.params().r1() + 1, "phi4");
  Vector v = Phi4TildeVector(space, x);
  const Complex q = space.Q(v);
  const int r = space.r();
  if (r >= 3) {
    v += space.Basis(Slot::E(r - 2)) - q / 2.0 * space.Basis(Slot::F(r - 2));
  } else if (space.d() == 1) {
    v += std::sqrt(-q) * space.Basis(Slot::H());
  }
  return v;
}

ConfigTuple Phi4(const FormedSpace& space, const std::array<Complex, 5>& x,
                 double tol) {
  RequireRank(space, space.params().r1() + 1, "phi4");
  const Pair a{x[0], x[1]};
  CheckOmega3(space.epsilon(), a, tol);
  for (int k = 2; k < 5; ++k) {
    if (!NonzeroRelative(x[k], 0.0, tol)) {
      throw DomainError("b1, b2 and c1 must be nonzero: outside Omega4");
    }
  }
  const int r = space.r();
  return ConfigTuple::Make(
      space, {space.Basis(Slot::E(r)), space.Basis(Slot::F(r)),
              Phi2Vector(space), Phi3Vector(space, a), Phi4Vector(space, x)});
}

ReductionResult ReduceTriple(const ConfigTuple& t) {
  const FormedSpace& space = t.space();
  if (t.size() != 3) throw InvalidArgument("reduce_triple needs 3 points");
  RequireRank(space, space.params().r1(), "reduce_triple");
  RequireGeneric(t);
  const int r = space.r();
  const double eps = Eps(space);

  const Vector& v0 = t.point(0);
  const Vector& v2 = t.point(2);
  const Vector f1 = t.point(1) / t.pairing(0, 1);
  const Complex beta = space.Omega(v0, v2);
  const Complex alpha = eps * space.Omega(f1, v2);
  const Vector x = v2 - alpha * v0 - beta * f1;
  const Complex s = std::sqrt(alpha / beta);
  const Complex c = alpha / s;
  const Vector e_r = s * v0;
  const Vector f_r = f1 / s;
  const Vector y = x / c;

  std::vector<AdaptedVector> partial{{Slot::E(r), e_r}, {Slot::F(r), f_r}};
  if (r >= 2) {
    Matrix a(2, space.n());
    a.row(0) = e_r.transpose() * space.gram();
    a.row(1) = f_r.transpose() * space.gram();
    auto [e, f] = PairThrough(space, OrthonormalNullspace(a), y, -1.0);
    partial.push_back({Slot::E(r - 1), std::move(e)});
    partial.push_back({Slot::F(r - 1), std::move(f)});
  } else if (space.d() == 1) {
    partial.push_back({Slot::H(), y / std::sqrt(Complex(-2.0))});
  }
  const Matrix tm = WittComplete(space, partial);
  GroupElement g = GroupElement::Make(space, InverseOfAdapted(space, tm));
  return Finish(t, std::move(g), Phi2(space), 1.0);
}

QuadrupleFrame ComputeQuadrupleFrame(const ConfigTuple& t, SqrtBranch branch) {
  const FormedSpace& space = t.space();
  if (t.size() != 4) throw InvalidArgument("quadruple frame needs 4 points");
  RequireRank(space, 2, "reduce_quadruple");
  const int eps = space.epsilon();
  const auto w = [&](int i, int j) { return t.pairing(i, j); };

  QuadrupleFrame fr;
  fr.z = Pi3(t);
  fr.pi = w(0, 1) * w(1, 2) * w(2, 0);
  Complex sp = std::sqrt(fr.pi);
  if (branch == SqrtBranch::kNegated) sp = -sp;
  fr.lambda = sp / w(1, 0);
  fr.mu = w(3, 2) / fr.lambda;

  const Vector& v0 = t.point(0);
  const Vector& v1 = t.point(1);
  const Vector& v2 = t.point(2);
  const Vector& v3 = t.point(3);
  const Vector h2 = ComplementHat(space, v0, v1, v2);
  const Vector h3 = ComplementHat(space, v0, v1, v3);
  Eigen::Matrix2cd m;
  m << space.Omega(h2, v2), space.Omega(h3, v2), space.Omega(h2, v3),
      space.Omega(h3, v3);
  fr.condition = ConditionNumber(m);
  const auto lu = m.fullPivLu();
  const Eigen::Vector2cd xe = lu.solve(Eigen::Vector2cd(
      fr.lambda, fr.mu * Varphi(eps, -1, fr.z[0], fr.z[1])));
  const Eigen::Vector2cd xf = lu.solve(Eigen::Vector2cd(
      -fr.lambda,
      static_cast<double>(eps) * fr.mu * Varphi(eps, 1, fr.z[0], fr.z[1])));
  fr.e_r1 = xe(0) * h2 + xe(1) * h3;
  fr.f_r1 = xf(0) * h2 + xf(1) * h3;
  fr.e_r = fr.lambda * v1 / w(1, 2);
  fr.f_r = w(1, 2) * v0 / sp;
  return fr;
}

ReductionResult ReduceQuadruple(const ConfigTuple& t, SqrtBranch branch) {
  const FormedSpace& space = t.space();
  if (t.size() != 4) throw InvalidArgument("reduce_quadruple needs 4 points");
  RequireRank(space, 2, "reduce_quadruple");
  RequireGeneric(t);
  const int r = space.r();
  const QuadrupleFrame fr = ComputeQuadrupleFrame(t, branch);
  const std::vector<AdaptedVector> partial{{Slot::E(r), fr.e_r},
                                           {Slot::E(r - 1), fr.e_r1},
                                           {Slot::F(r - 1), fr.f_r1},
                                           {Slot::F(r), fr.f_r}};
  // Loosened so that ill-conditioned frames are reported, not rejected.
  const double tol = kDefaultTolerances.group * std::max(1.0, fr.condition);
  const Matrix tm = WittComplete(space, partial, tol);
  GroupElement g =
      GroupElement::Make(space, tm.transpose() * space.gram(), tol);
  return Finish(t, std::move(g), Phi3(space, fr.z, 0.0), fr.condition);
}

ReductionResult ReduceQuintuple(const ConfigTuple& t, SqrtBranch branch) {
  const FormedSpace& space = t.space();
  if (t.size() != 5) throw InvalidArgument("reduce_quintuple needs 5 points");
  RequireRank(space, space.params().r1() + 1, "reduce_quintuple");
  RequireGeneric(t);
  const int r = space.r();
  const int n = space.n();

  const ReductionResult first = ReduceQuadruple(t.Face(4), branch);
  const std::array<Complex, 5> x = Pi4(t);
  const Vector target = Phi4TildeVector(space, x);

  const Vector u = first.g.Apply(t.point(4));
  const std::array<int, 4> outer{0, 1, n - 2, n - 1};
  Complex num = 0.0;
  double den = 0.0;
  for (int k : outer) {
    num += std::conj(u(k)) * target(k);
    den += std::norm(u(k));
  }
  if (den == 0.0) throw GenericityError("phi4", "v4 has no outer component");
  Vector x0 = (num / den) * u;
  for (int k : outer) x0(k) = 0.0;

  Matrix gp = Matrix::Identity(n, n);
  if (r >= 3) {
    if (x0.norm() <= kDefaultTolerances.generic * (num / den * u).norm()) {
      throw GenericityError("x0", "x0 vanishes for r > 2");
    }
    const Complex c = -space.Q(target) / 2.0;
    const Matrix comp = Matrix::Identity(n, n).middleCols(2, n - 4);
    auto [e, f] = PairThrough(space, comp, x0, c);
    const std::vector<AdaptedVector> partial{
        {Slot::E(r), space.Basis(Slot::E(r))},
        {Slot::E(r - 1), space.Basis(Slot::E(r - 1))},
        {Slot::F(r - 1), space.Basis(Slot::F(r - 1))},
        {Slot::F(r), space.Basis(Slot::F(r))},
        {Slot::E(r - 2), std::move(e)},
        {Slot::F(r - 2), std::move(f)}};
    const double tol =
        kDefaultTolerances.group * std::max(1.0, first.condition);
    gp = InverseOfAdapted(space, WittComplete(space, partial, tol));
  } else if (space.d() == 1) {
    // x0 = t·h; flip h when t sits on the other square root.
    const int ih = space.IndexOf(Slot::H());
    const Complex s = std::sqrt(-space.Q(target));
    if (std::abs(x0(ih) - s) > std::abs(x0(ih) + s)) gp(ih, ih) = -1.0;
  }
  const double tol = kDefaultTolerances.group * std::max(1.0, first.condition);
  GroupElement g = GroupElement::Make(space, gp, tol) * first.g;
  return Finish(t, std::move(g), Phi4(space, x, 0.0), first.condition);
}

std::array<double, 2> PairingLemmaResiduals(const ConfigTuple& t) {
  if (t.size() != 5) throw InvalidArgument("pairing lemma needs 5 points");
  const FormedSpace& space = t.space();
  const int eps = space.epsilon();
  const QuadrupleFrame fr = ComputeQuadrupleFrame(t.Face(4));
  const CrossRatios5 c = ComputeCrossRatios5(t);
  const Pair a{c.alpha[1], c.alpha[2]};
  const Pair b{c.beta[1], c.beta[2]};
  const Pair g{c.gamma[1], c.gamma[2]};
  const Complex s = SqrtDelta(eps, a[0], a[1]);
  const Complex k = t.pairing(2, 4) / fr.lambda;
  const Complex rhs_e = static_cast<double>(eps) * k * Psi(eps, -1, a, b, g) / s;
  const Complex rhs_f = k * Psi(eps, 1, a, b, g) / s;
  return {RelativeResidual(space.Omega(fr.e_r1, t.point(4)), rhs_e),
          RelativeResidual(space.Omega(fr.f_r1, t.point(4)), rhs_f)};
}

std::vector<NamedResidual> HatLemmaResiduals(const ConfigTuple& t) {
  if (t.size() != 4) throw InvalidArgument("hat lemma needs 4 points");
  const FormedSpace& space = t.space();
  const double eps = Eps(space);
  const Vector& v0 = t.point(0);
  const Vector& v1 = t.point(1);
  const Vector& v2 = t.point(2);
  const Vector& v3 = t.point(3);
  const Vector h2 = ComplementHat(space, v0, v1, v2);
  const Vector h3 = ComplementHat(space, v0, v1, v3);
  const Complex w23 = space.Omega(h2, h3);
  const auto qhat = [&](const Vector& u) {
    return -(1.0 + eps) * space.Omega(v1, u) * space.Omega(u, v0) /
           space.Omega(v0, v1);
  };
  // Scale for quantities that vanish identically when ε = −1.
  const auto rel0 = [](Complex x, Complex y, double scale) {
    return std::abs(x - y) / std::max({std::abs(x), std::abs(y), scale});
  };
  const double scale = v2.norm() * v2.norm() * v0.norm() * v1.norm() /
                       std::abs(space.Omega(v0, v1));
  const Pair z = Pi3(t);
  const Complex o23 = space.Omega(v2, v3);
  return {
      {"omega(h2,h3) = omega(h2,v3)",
       RelativeResidual(w23, space.Omega(h2, v3))},
      {"omega(h2,h3) = omega(v2,h3)",
       RelativeResidual(w23, space.Omega(v2, h3))},
      {"q(h2) = -(1+eps) w12 w20 / w01", rel0(space.Q(h2), qhat(v2), scale)},
      {"omega(h2,h3) = omega(v2,v3) Gamma",
       RelativeResidual(w23, o23 * Gamma(z[0], z[1]))},
      {"omega(h2,h3)^2 - q(h2)q(h3) = omega(v2,v3)^2 Delta",
       RelativeResidual(w23 * w23 - space.Q(h2) * space.Q(h3),
                        o23 * o23 * Delta(space.epsilon(), z[0], z[1]))},
  };
}

}  // namespace fsl
