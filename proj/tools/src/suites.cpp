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


#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <mutex>
#include <numbers>
#include <string>
#include <vector>

#include "fsl/cross_ratios.hpp"
#include "fsl/dilogarithm.hpp"
#include "fsl/flags.hpp"
#include "fsl/forms.hpp"
#include "fsl/norms.hpp"
#include "fsl/random.hpp"
#include "fsl/reduction.hpp"
#include "fsl_cli/commands.hpp"
#include "fsl_cli/trials.hpp"

namespace fsl::cli {
namespace {

std::string Tag(const FormedSpace& s) {
  return s.params().Label() + " r=" + std::to_string(s.r());
}

/// Selected (eps, d, r) cases; r defaults to {2, 3, 4}, or to the smallest
/// rank accepted by `min_r` when `minimal` is set.
std::vector<FormedSpace> Cases(const RunConfig& c,
                               const std::function<int(const FormParams&)>& min_r,
                               bool minimal = false) {
  std::vector<std::pair<int, int>> kinds = {{1, 0}, {1, 1}, {-1, 0}};
  if (c.epsilon && c.d) kinds = {{*c.epsilon, *c.d}};
  std::vector<FormedSpace> out;
  for (auto [eps, d] : kinds) {
    const int lo = min_r(FormParams::Make(eps, d, 2));
    std::vector<int> ranks = {2, 3, 4};
    if (c.r) {
      ranks = {*c.r};
    } else if (minimal) {
      ranks = {std::max(lo, 2)};
    }
    for (int r : ranks) {
      if (r >= lo) out.push_back(FormedSpace::Make(eps, d, r));
    }
  }
  return out;
}

int AnyRank(const FormParams&) { return 1; }
int QuintupleRank(const FormParams& p) { return p.r1() + 1; }

/// Resamples until the tuple is certified generic.
ConfigTuple GenericTuple(const FormedSpace& space, int k, Rng& rng) {
  for (int attempt = 0; attempt < 64; ++attempt) {
    ConfigTuple t = RandomTuple(space, k, rng);
    if (Certify(t).ok()) return t;
  }
  throw InternalError("could not sample a generic tuple");
}

std::vector<Complex> RandomScalars(int k, Rng& rng) {
  std::vector<Complex> s;
  for (int i = 0; i < k; ++i) {
    Complex z = rng.ComplexGaussian();
    while (std::abs(z) < 0.1) z = rng.ComplexGaussian();
    s.push_back(z);
  }
  return s;
}

double CrossRatioDistance(const CrossRatios5& a, const CrossRatios5& b) {
  double m = 0.0;
  for (int k = 0; k < 3; ++k) {
    m = std::max({m, RelativeResidual(a.alpha[k], b.alpha[k]),
                  RelativeResidual(a.beta[k], b.beta[k]),
                  RelativeResidual(a.gamma[k], b.gamma[k])});
  }
  return m;
}

/// max over i != j of |v_i| |v_j| / |omega(v_i, v_j)|.
double PairingCondition(const ConfigTuple& t) {
  double k = 1.0;
  for (int i = 0; i < t.size(); ++i) {
    for (int j = i + 1; j < t.size(); ++j) {
      k = std::max(k, t.point(i).norm() * t.point(j).norm() / std::abs(t.pairing(i, j)));
    }
  }
  return k;
}

double MaxOf(const std::vector<NamedResidual>& v) {
  double m = 0.0;
  for (const auto& r : v) m = std::max(m, r.residual);
  return m;
}

/// Adds one record per check name from an accumulator.
void Emit(Report& rep, const std::string& prefix,
          const std::vector<std::pair<std::string, double>>& checks,
          const Accumulator& acc) {
  for (std::size_t k = 0; k < checks.size(); ++k) {
    const Stat& s = acc.stats()[k];
    if (s.samples == 0) continue;
    rep.Add(prefix + checks[k].first, s.samples, s.max, checks[k].second);
  }
}

// ---------------------------------------------------------------------------

void CrossRatiosSuite(const RunConfig& c, Report& rep) {
  const std::uint64_t trials = c.TrialsOr(1000);
  const double tol = c.Tol("identity");
  const std::vector<std::pair<std::string, double>> checks = {
      {"4-tuple lemma", tol},
      {"5-tuple lemma", tol},
      {"group invariance / pairing condition", tol},
      {"rescaling invariance", tol},
      {"certificate invariance", 0.0},
  };
  for (const FormedSpace& space : Cases(c, AnyRank)) {
    const std::string label = "cross-ratios " + Tag(space);
    const Accumulator acc =
        RunTrials(checks.size(), trials, c.threads, [&](std::uint64_t i, Accumulator& a) {
          Rng rng(StreamSeed(c.seed, label, i));
          const ConfigTuple t = GenericTuple(space, 5, rng);
          a.Add(0, MaxOf(FourTupleIdentityResiduals(t.Face(4))));
          a.Add(1, MaxOf(FiveTupleIdentityResiduals(t)));
          const CrossRatios5 base = ComputeCrossRatios5(t);
          const ConfigTuple moved = t.Transformed(RandomGroupElement(space, rng).matrix());
          a.Add(2, CrossRatioDistance(base, ComputeCrossRatios5(moved)) /
                       PairingCondition(moved));
          const auto s = RandomScalars(5, rng);
          a.Add(3, CrossRatioDistance(base, ComputeCrossRatios5(t.Rescaled(s))));
          a.Add(4, Certify(moved).ok() == Certify(t).ok() ? 0.0 : 1.0);
        });
    Emit(rep, label + ": ", checks, acc);
  }
}

void HatsSuite(const RunConfig& c, Report& rep) {
  const std::uint64_t trials = c.TrialsOr(1000);
  const double tol = c.Tol("identity");
  const std::vector<std::pair<std::string, double>> checks = {
      {"hat lemma", tol},
      {"pairing lemma", tol},
  };
  for (const FormedSpace& space : Cases(c, [](const FormParams&) { return 2; })) {
    const std::string label = "hats " + Tag(space);
    const Accumulator acc =
        RunTrials(checks.size(), trials, c.threads, [&](std::uint64_t i, Accumulator& a) {
          Rng rng(StreamSeed(c.seed, label, i));
          const ConfigTuple t = GenericTuple(space, 5, rng);
          a.Add(0, MaxOf(HatLemmaResiduals(t.Face(4))));
          const auto p = PairingLemmaResiduals(t);
          a.Add(1, std::max(p[0], p[1]));
        });
    Emit(rep, label + ": ", checks, acc);
  }
}

Pair RandomPi3Point(const FormedSpace& space, Rng& rng) {
  for (;;) {
    const Pair a{rng.ComplexGaussian(), rng.ComplexGaussian()};
    try {
      Phi3(space, a);
      return a;
    } catch (const DomainError&) {
    } catch (const GenericityError&) {
    }
  }
}

std::array<Complex, 5> RandomPi4Point(const FormedSpace& space, Rng& rng) {
  for (;;) {
    std::array<Complex, 5> x;
    for (Complex& z : x) z = rng.ComplexGaussian();
    try {
      Phi4(space, x);
      return x;
    } catch (const DomainError&) {
    } catch (const GenericityError&) {
    }
  }
}

void ReductionSuite(const RunConfig& c, Report& rep) {
  const std::uint64_t trials = c.TrialsOr(1000);
  const double rt = c.Tol("roundtrip");
  const double red = c.Tol("reduce");
  const std::vector<std::pair<std::string, double>> checks = {
      {"pi3 o Phi3 = id", rt},
      {"pi4 o Phi4 = id", rt},
      {"reduce_triple = Phi2", red},
      {"reduce_quadruple = Phi3(pi3)", red},
      {"reduce_quintuple = Phi4(pi4)", red},
      {"sqrt branch consistency", red},
      {"g in G_r", c.Tol("group")},
  };
  for (const FormedSpace& space : Cases(c, [](const FormParams&) { return 2; })) {
    const std::string label = "reduction " + Tag(space);
    const bool triples = space.r() >= space.params().r1();
    const bool quintuples = SupportsQuintuples(space);
    const Accumulator acc =
        RunTrials(checks.size(), trials, c.threads, [&](std::uint64_t i, Accumulator& a) {
          Rng rng(StreamSeed(c.seed, label, i));
          const Pair p = RandomPi3Point(space, rng);
          const Pair back = Pi3(Phi3(space, p));
          a.Add(0, std::max(RelativeResidual(back[0], p[0]),
                            RelativeResidual(back[1], p[1])));
          if (quintuples) {
            const auto x = RandomPi4Point(space, rng);
            const auto y = Pi4(Phi4(space, x));
            double m = 0.0;
            for (int k = 0; k < 5; ++k) m = std::max(m, RelativeResidual(y[k], x[k]));
            a.Add(1, m);
          }
          double group = 0.0;
          if (triples) {
            const ConfigTuple t3 = GenericTuple(space, 3, rng);
            const ReductionResult r3 = ReduceTriple(t3);
            a.Add(2, std::max(r3.residual, r3.canonical.ProjectiveResidual(Phi2(space))));
            group = std::max(group, space.GroupResidual(r3.g.matrix()));
          }
          const ConfigTuple t4 = GenericTuple(space, 4, rng);
          const ReductionResult r4 = ReduceQuadruple(t4);
          a.Add(3, std::max(r4.residual,
                            r4.canonical.ProjectiveResidual(Phi3(space, Pi3(t4)))));
          const ReductionResult r4n = ReduceQuadruple(t4, SqrtBranch::kNegated);
          double branch = std::max(r4n.residual,
                                   r4n.canonical.ProjectiveResidual(r4.canonical));
          group = std::max({group, space.GroupResidual(r4.g.matrix()),
                            space.GroupResidual(r4n.g.matrix())});
          if (quintuples) {
            const ConfigTuple t5 = GenericTuple(space, 5, rng);
            const ReductionResult r5 = ReduceQuintuple(t5);
            a.Add(4, std::max(r5.residual,
                              r5.canonical.ProjectiveResidual(Phi4(space, Pi4(t5)))));
            const ReductionResult r5n = ReduceQuintuple(t5, SqrtBranch::kNegated);
            branch = std::max({branch, r5n.residual,
                               r5n.canonical.ProjectiveResidual(r5.canonical)});
            group = std::max(group, space.GroupResidual(r5.g.matrix()));
          }
          a.Add(5, branch);
          a.Add(6, group);
        });
    Emit(rep, label + ": ", checks, acc);
  }
}

void InvarianceSuite(const RunConfig& c, Report& rep) {
  const std::uint64_t trials = c.TrialsOr(1000);
  const double red = c.Tol("reduce");
  const double grp = c.Tol("group");
  const std::vector<std::pair<std::string, double>> checks = {
      {"orbit soundness: triples", red},
      {"orbit soundness: quadruples", red},
      {"orbit soundness: quintuples", red},
      {"pi3 invariance / pairing condition", c.Tol("invariance")},
      {"group closure", grp},
      {"Witt completion", grp},
      {"embedding iota", grp},
  };
  for (const FormedSpace& space : Cases(c, [](const FormParams&) { return 2; })) {
    const std::string label = "invariance " + Tag(space);
    const bool triples = space.r() >= space.params().r1();
    const bool quintuples = SupportsQuintuples(space);
    const Accumulator acc =
        RunTrials(checks.size(), trials, c.threads, [&](std::uint64_t i, Accumulator& a) {
          Rng rng(StreamSeed(c.seed, label, i));
          const GroupElement g = RandomGroupElement(space, rng);
          const Matrix& m = g.matrix();
          if (triples) {
            const ConfigTuple t = GenericTuple(space, 3, rng);
            a.Add(0, ReduceTriple(t.Transformed(m))
                         .canonical.ProjectiveResidual(ReduceTriple(t).canonical));
          }
          const ConfigTuple t4 = GenericTuple(space, 4, rng);
          const ConfigTuple m4 = t4.Transformed(m);
          a.Add(1, ReduceQuadruple(m4).canonical.ProjectiveResidual(
                       ReduceQuadruple(t4).canonical));
          if (quintuples) {
            const ConfigTuple t5 = GenericTuple(space, 5, rng);
            a.Add(2, ReduceQuintuple(t5.Transformed(m))
                         .canonical.ProjectiveResidual(ReduceQuintuple(t5).canonical));
          }
          const Pair p = Pi3(t4);
          const Pair q = Pi3(m4);
          a.Add(3, std::max(RelativeResidual(p[0], q[0]), RelativeResidual(p[1], q[1])) /
                       PairingCondition(m4));

          const GroupElement h = RandomGroupElement(space, rng);
          const GroupElement gh = g * h;
          const Matrix id = (g * g.Inverse(space)).matrix();
          a.Add(4, std::max({space.GroupResidual(gh.matrix()),
                             space.GroupResidual(g.Inverse(space).matrix()),
                             (id - Matrix::Identity(space.n(), space.n()))
                                 .cwiseAbs()
                                 .maxCoeff()}));

          // Complete the frame of a reduction and compare with the Gram relations.
          const QuadrupleFrame fr = ComputeQuadrupleFrame(t4);
          const int r = space.r();
          const std::array<AdaptedVector, 4> partial = {
              AdaptedVector{Slot::E(r), fr.e_r}, AdaptedVector{Slot::E(r - 1), fr.e_r1},
              AdaptedVector{Slot::F(r - 1), fr.f_r1}, AdaptedVector{Slot::F(r), fr.f_r}};
          const double scale = std::max(1.0, fr.condition);
          const Matrix w = WittComplete(space, partial, grp * scale);
          a.Add(5, space.GroupResidual(w) / scale);

          if (r >= 2) {
            const FormedSpace small = FormedSpace::Make(space.epsilon(), space.d(), r - 1);
            const GroupElement s1 = RandomGroupElement(small, rng);
            const GroupElement s2 = RandomGroupElement(small, rng);
            const Matrix e1 = EmbedIota(small, space, s1.matrix());
            const Matrix e2 = EmbedIota(small, space, s2.matrix());
            const Matrix e12 = EmbedIota(small, space, (s1 * s2).matrix());
            const double hom = (e12 - e1 * e2).cwiseAbs().maxCoeff() /
                               std::max(1.0, e12.cwiseAbs().maxCoeff());
            a.Add(6, std::max(space.GroupResidual(e1), hom));
          }
        });
    Emit(rep, label + ": ", checks, acc);
  }
}

// ---------------------------------------------------------------------------

Complex WideSample(Rng& rng) {
  return rng.ComplexGaussian() * std::exp(rng.Uniform(-2.0, 2.0));
}

void DilogarithmSuite(const RunConfig& c, Report& rep) {
  const std::uint64_t trials = c.TrialsOr(10000);
  const double tol = c.Tol("dilog");
  const double v = MaxBlochWigner();
  const std::vector<std::pair<std::string, double>> checks = {
      {"six symmetries", tol},
      {"Spence-Abel", tol},
      {"vanishing on the real axis", tol},
      {"conjugation", tol},
      {"bounded by v", tol},
      {"vol-p1 GL_2 invariance", c.Tol("invariance")},
  };
  const std::string label = "dilogarithm";
  const Accumulator acc =
      RunTrials(checks.size(), trials, c.threads, [&](std::uint64_t i, Accumulator& a) {
        Rng rng(StreamSeed(c.seed, label, i));
        const Complex z = WideSample(rng);
        const auto sym = SixSymmetryResiduals(z);
        a.Add(0, *std::max_element(sym.begin(), sym.end()));
        for (;;) {
          try {
            a.Add(1, SpenceAbelResidual(BlochWigner, WideSample(rng), WideSample(rng)));
            break;
          } catch (const DomainError&) {
          }
        }
        a.Add(2, std::abs(BlochWigner(rng.Uniform(-4.0, 4.0))));
        a.Add(3, std::abs(BlochWigner(std::conj(z)) + BlochWigner(z)));
        a.Add(4, std::max(0.0, std::abs(BlochWigner(z)) - v));
        std::array<Eigen::Vector2cd, 4> p;
        for (auto& x : p) x = Eigen::Vector2cd(rng.ComplexGaussian(), rng.ComplexGaussian());
        Eigen::Matrix2cd g;
        g << rng.ComplexGaussian(), rng.ComplexGaussian(), rng.ComplexGaussian(),
            rng.ComplexGaussian();
        std::array<Eigen::Vector2cd, 4> gp;
        for (int k = 0; k < 4; ++k) gp[k] = g * p[k];
        a.Add(5, std::abs(VolP1(gp) - VolP1(p)));
      });
  Emit(rep, label + ": ", checks, acc);

  const double kPublished = 1.0149;
  rep.Add("dilogarithm: max D = 1.0149", 1, std::abs(v - kPublished), c.Tol("max-d"))
      .value = v;
  const Complex peak = std::polar(1.0, std::numbers::pi / 3.0);
  rep.Add("dilogarithm: argmax at exp(i pi/3)", 1, std::abs(ArgMaxBlochWigner() - peak),
          1e-6);
}

/// Bounded test function: sin and cos of linear forms in z/(1+|z|).
Function2 TestFunction(std::uint64_t seed, int k) {
  Rng rng(StreamSeed(seed, "d3-functions", static_cast<std::uint64_t>(k)));
  std::array<double, 8> p;
  for (double& x : p) x = 2.0 * rng.Gaussian();
  return [p](Complex z1, Complex z2) {
    const Complex w1 = z1 / (1.0 + std::abs(z1));
    const Complex w2 = z2 / (1.0 + std::abs(z2));
    const double l1 = p[0] * w1.real() + p[1] * w1.imag() + p[2] * w2.real() +
                      p[3] * w2.imag();
    const double l2 = p[4] * w1.real() + p[5] * w1.imag() + p[6] * w2.real() +
                      p[7] * w2.imag();
    return std::sin(l1) * std::cos(l2);
  };
}

double FaceSum(const Function2& f, const std::array<Pair, 5>& faces) {
  double s = 0.0;
  for (int i = 0; i < 5; ++i) {
    const double term = f(faces[i][0], faces[i][1]);
    s += (i % 2 == 0) ? term : -term;
  }
  return s;
}

void D3Suite(const RunConfig& c, Report& rep) {
  const std::uint64_t trials = c.TrialsOr(1000);
  constexpr int kFunctions = 10;
  std::vector<Function2> fs;
  for (int k = 0; k < kFunctions; ++k) fs.push_back(TestFunction(c.seed, k));
  const Function2 classical = [](Complex z1, Complex) { return BlochWigner(z1); };
  const std::vector<std::pair<std::string, double>> checks = {
      {"face sum = D3 closed form", c.Tol("d3")},
      {"classical D o pr1 face sum = D3", c.Tol("d3")},
  };
  for (const FormedSpace& space : Cases(c, QuintupleRank, true)) {
    const std::string label = "d3 " + Tag(space);
    double nonzero = 0.0;
    std::mutex mu;
    const Accumulator acc =
        RunTrials(checks.size(), trials, c.threads, [&](std::uint64_t i, Accumulator& a) {
          Rng rng(StreamSeed(c.seed, label, i));
          const ConfigTuple t = GenericTuple(space, 5, rng);
          std::array<Pair, 5> faces;
          for (int k = 0; k < 5; ++k) faces[k] = Pi3(t.Face(k));
          const auto x = Pi4(t);
          for (const Function2& f : fs) {
            a.Add(0, std::abs(FaceSum(f, faces) - D3InfinityResidual(f, x, space.epsilon())));
          }
          const double d3 = D3InfinityResidual(classical, x, space.epsilon());
          a.Add(1, std::abs(FaceSum(classical, faces) - d3));
          std::lock_guard<std::mutex> lock(mu);
          nonzero = std::max(nonzero, std::abs(d3));
        });
    Emit(rep, label + ": ", checks, acc);
    // Expected nonzero somewhere.
    rep.Add(label + ": D3 of D o pr1 is nonzero", trials, nonzero > 1e-3 ? 0.0 : 1.0, 0.0)
        .value = nonzero;
  }
}

// ---------------------------------------------------------------------------

std::vector<AffineFlag> GeneralFlags(int n, int k, Rng& rng) {
  for (int attempt = 0; attempt < 64; ++attempt) {
    std::vector<AffineFlag> f;
    for (int i = 0; i < k; ++i) f.push_back(RandomFlag(n, rng));
    if (k == 5) {
      if (CocycleResidual(f).general_position) return f;
    } else if (GeneralPosition(f)) {
      return f;
    }
  }
  throw InternalError("could not sample flags in general position");
}

void CocycleSuite(const RunConfig& c, Report& rep) {
  const std::uint64_t trials = c.TrialsOr(1000);
  const double v = MaxBlochWigner();
  const std::vector<std::pair<std::string, double>> checks = {
      {"cocycle identity", c.Tol("cocycle")},
      {"alternation", c.Tol("invariance")},
      {"GL_n invariance", c.Tol("invariance")},
      {"lift independence", c.Tol("lift")},
      {"pruned sum = full sum", c.Tol("lift")},
      {"contributing J count", 0.0},
      {"bounded by n(n^2-1)/6 v", c.Tol("lift")},
  };
  constexpr std::uint64_t kOracleSamples = 50;
  std::vector<int> degrees = {2, 3, 4};
  if (c.n) degrees = {*c.n};
  for (int n : degrees) {
    const std::string label = "cocycle n=" + std::to_string(n);
    const double bound = static_cast<double>(BnCoefficient(n)) * v;
    const Accumulator acc =
        RunTrials(checks.size(), trials, c.threads, [&](std::uint64_t i, Accumulator& a) {
          Rng rng(StreamSeed(c.seed, label, i));
          const std::vector<AffineFlag> five = GeneralFlags(n, 5, rng);
          a.Add(0, CocycleResidual(five).residual);
          const std::vector<AffineFlag> f(five.begin(), five.end() - 1);
          const double b = Bn(f);
          const int k = static_cast<int>(i % 3);
          std::vector<AffineFlag> swapped = f;
          std::swap(swapped[k], swapped[k + 1]);
          a.Add(1, std::abs(Bn(swapped) + b));
          const Matrix g = rng.ComplexGaussianMatrix(n, n);
          std::vector<AffineFlag> moved;
          std::vector<AffineFlag> lifted;
          for (const AffineFlag& x : f) {
            moved.push_back(x.Transformed(g));
            Vector s(n);
            for (int j = 0; j < n; ++j) s(j) = RandomScalars(1, rng)[0];
            lifted.push_back(x.Rescaled(s));
          }
          a.Add(2, std::abs(Bn(moved) - b));
          a.Add(3, std::abs(Bn(lifted) - b));
          if (i < kOracleSamples) {
            a.Add(4, std::abs(BnFull(f) - b));
            const double count = static_cast<double>(ContributingIndices(f).size());
            a.Add(5, std::abs(count - static_cast<double>(BnCoefficient(n))));
          }
          a.Add(6, std::max(0.0, std::abs(b) - bound));
        });
    Emit(rep, label + ": ", checks, acc);
  }

  if (std::find(degrees.begin(), degrees.end(), 4) == degrees.end()) return;
  const std::vector<std::pair<std::string, double>> so4 = {
      {"SO_4 invariance of B4 o rho", c.Tol("cocycle")},
      {"bounded by 4v", c.Tol("lift")},
  };
  const FormedSpace space = FormedSpace::Make(1, 0, 2);
  const std::string label = "cocycle SO_4";
  const Accumulator acc =
      RunTrials(so4.size(), trials, c.threads, [&](std::uint64_t i, Accumulator& a) {
        Rng rng(StreamSeed(c.seed, label, i));
        Matrix g = RandomGroupElement(space, rng).matrix();
        if (std::abs(g.determinant() - 1.0) > 1e-6) g.col(0).swap(g.col(3));
        std::vector<AffineFlag> f, gf;
        for (int k = 0; k < 4; ++k) {
          const Complex a0 = rng.ComplexGaussian();
          const Complex b0 = rng.ComplexGaussian();
          f.push_back(Rho(BoundaryPoint::Finite(a0, b0)));
          gf.push_back(RhoFromLines(g * LinePlus(a0), g * LineMinus(b0)));
        }
        const double b = Bn(f);
        a.Add(0, std::abs(Bn(gf) - b));
        a.Add(1, std::max(0.0, std::abs(b) - 4.0 * v));
      });
  Emit(rep, label + ": ", so4, acc);
}

/// Nonvanishing summands of B4 at (F_inf, F_0, F_1, F_(a,b)).
double TableValue(const IndexTuple& j, Complex a, Complex b) {
  const auto is = [&](int j0, int j1, int j2, int j3) {
    return j == IndexTuple{j0, j1, j2, j3};
  };
  if (is(2, 0, 0, 0) || is(0, 2, 0, 0) || is(0, 0, 2, 0) || is(0, 0, 0, 2)) {
    return BlochWigner(b);
  }
  if (is(1, 1, 0, 0) || is(0, 0, 1, 1)) return -BlochWigner(b / a);
  if (is(1, 0, 1, 0) || is(0, 1, 0, 1)) return BlochWigner((1.0 - b) / (1.0 - a));
  if (is(1, 0, 0, 1) || is(0, 1, 1, 0)) {
    return -BlochWigner(a * (1.0 - b) / (b * (1.0 - a)));
  }
  return 0.0;
}

void BbiValueSuite(const RunConfig& c, Report& rep) {
  const std::uint64_t trials = c.TrialsOr(100);
  const std::vector<std::pair<std::string, double>> checks = {
      {"B4 = 2(D(a) + D(b))", c.Tol("closed-form")},
      {"per-J table", c.Tol("per-j")},
      {"contributing J are the table's ten", 0.0},
  };
  const std::string label = "bbi-value";
  const Accumulator acc =
      RunTrials(checks.size(), trials, c.threads, [&](std::uint64_t i, Accumulator& a) {
        Rng rng(StreamSeed(c.seed, label, i));
        Complex x, y;
        do {
          x = rng.ComplexGaussian();
          y = rng.ComplexGaussian();
        } while (std::abs(x) < 0.05 || std::abs(y) < 0.05 || std::abs(1.0 - x) < 0.05 ||
                 std::abs(1.0 - y) < 0.05);
        a.Add(0, std::abs(B4Standard(x, y) - 2.0 * (BlochWigner(x) + BlochWigner(y))));
        const std::array<AffineFlag, 4> f{Rho(BoundaryPoint::Infinity()),
                                          StandardFlagSO4(0.0, 0.0),
                                          StandardFlagSO4(1.0, 1.0),
                                          StandardFlagSO4(x, y)};
        double worst = 0.0;
        int nonzero_table = 0;
        for (int j0 = 0; j0 <= 2; ++j0) {
          for (int j1 = 0; j0 + j1 <= 2; ++j1) {
            for (int j2 = 0; j0 + j1 + j2 <= 2; ++j2) {
              const IndexTuple j{j0, j1, j2, 2 - j0 - j1 - j2};
              const double t = TableValue(j, x, y);
              worst = std::max(worst, std::abs(BnJ(f, j) - t));
              if (t != 0.0) ++nonzero_table;
            }
          }
        }
        a.Add(1, worst);
        a.Add(2, std::abs(static_cast<double>(ContributingIndices(f).size()) - 10.0) +
                     std::abs(nonzero_table - 10.0));
      });
  Emit(rep, label + ": ", checks, acc);
}

// ---------------------------------------------------------------------------

/// Index of the principal sl_2 in a classical family, from the branching
/// of the defining representation into irreducibles of dimension m, each
/// contributing m(m^2-1)/6, divided by the index of the defining
/// representation (2 for orthogonal groups).
std::int64_t BranchingIndex(Family family, std::int64_t r) {
  const auto irr = [](std::int64_t m) { return m * (m * m - 1) / 6; };
  switch (family) {
    case Family::kA:
      return irr(r + 1);
    case Family::kB:
      return irr(2 * r + 1) / 2;
    case Family::kC:
      return irr(2 * r);
    case Family::kD:
      return (irr(2 * r - 1) + irr(1)) / 2;
  }
  return -1;
}

void ConstantsSuite(const RunConfig& c, Report& rep) {
  const double v = MaxBlochWigner();
  for (Family fam : {Family::kA, Family::kB, Family::kC, Family::kD}) {
    double worst = 0.0;
    double norm_worst = 0.0;
    std::string name;
    for (int r = 1; r <= 10; ++r) {
      const FamilyTag tag = FamilyTag::Make(fam, r);
      name = tag.Name().substr(0, 1);
      const std::int64_t idx = DynkinIndex(tag);
      worst = std::max(worst, static_cast<double>(std::llabs(idx - BranchingIndex(fam, r))));
      const FamilyNorm fn = FamilyGromovNorm(tag);
      norm_worst = std::max(norm_worst,
                            std::abs(fn.value - static_cast<double>(idx) * v) / v);
    }
    rep.Add("constants: Dynkin index " + name + "_r, r=1..10", 10, worst, 0.0);
    rep.Add("constants: family norm " + name + "_r = I v, r=1..10", 10, norm_worst, 1e-12);
  }
  {
    // D_r closed form r(r-1)(2r-1)/3.
    double worst = 0.0;
    for (std::int64_t r = 1; r <= 10; ++r) {
      const std::int64_t closed = r * (r - 1) * (2 * r - 1) / 3;
      worst = std::max(worst, static_cast<double>(std::llabs(
                                  DynkinIndex(FamilyTag::Make(Family::kD, r)) - closed)));
    }
    rep.Add("constants: D_r formula r(r-1)(2r-1)/3", 10, worst, 0.0);
  }
  {
    // ‖b_n‖ against a count of contributing index tuples for generic flags.
    double worst = 0.0;
    double coeff = 0.0;
    Rng rng(StreamSeed(c.seed, "constants", 0));
    for (int n = 2; n <= 8; ++n) {
      const std::vector<AffineFlag> f = GeneralFlags(n, 4, rng);
      const double count = static_cast<double>(ContributingIndices(f).size());
      const double expected = n * (n * n - 1) / 6.0;
      coeff = std::max(coeff, std::abs(count - expected));
      worst = std::max(worst, std::abs(GromovNormBn(n) - expected * v) / v);
    }
    rep.Add("constants: |b_n| = n(n^2-1)/6 v, n=2..8", 7, worst, 1e-12);
    rep.Add("constants: contributing J count n=2..8", 7, coeff, 0.0);
  }
  if (!c.family.empty()) {
    const FamilyTag tag = FamilyTag::Parse(c.family);
    const FamilyNorm fn = FamilyGromovNorm(tag);
    Json j = Json::object();
    j["family"] = tag.Name();
    j["dynkin_index"] = DynkinIndex(tag);
    j["gromov_norm"] = fn.value;
    j["ambient_n"] = fn.ambient_n;
    j["factor"] = fn.factor;
    j["status"] = fn.status;
    j["exceptional"] = tag.Exceptional();
    rep.results["family"] = j;
  }
}

struct SuiteEntry {
  const char* name;
  void (*run)(const RunConfig&, Report&);
};

constexpr std::array<SuiteEntry, 9> kSuites = {{
    {"cross-ratios", CrossRatiosSuite},
    {"hats", HatsSuite},
    {"reduction", ReductionSuite},
    {"invariance", InvarianceSuite},
    {"dilogarithm", DilogarithmSuite},
    {"d3", D3Suite},
    {"cocycle", CocycleSuite},
    {"bbi-value", BbiValueSuite},
    {"constants", ConstantsSuite},
}};

}  // namespace

const std::vector<std::string>& SuiteNames() {
  static const std::vector<std::string> kNames = [] {
    std::vector<std::string> v;
    for (const auto& s : kSuites) v.emplace_back(s.name);
    return v;
  }();
  return kNames;
}

void RunSuite(const std::string& name, const RunConfig& config, Report& report) {
  for (const auto& s : kSuites) {
    if (name == s.name) {
      s.run(config, report);
      return;
    }
  }
  throw UsageError("unknown suite '" + name + "'");
}

}  // namespace fsl::cli
