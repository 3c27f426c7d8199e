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

#include "fsl/norms.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <thread>

#include "fsl/dilogarithm.hpp"
#include "fsl/flags.hpp"

namespace fsl {

FamilyTag FamilyTag::Make(Family family, int r) {
  if (r < 1) throw InvalidArgument("family rank must be >= 1");
  return FamilyTag{family, r};
}

FamilyTag FamilyTag::Parse(std::string_view s) {
  if (s.size() < 2) throw InvalidArgument("bad family tag '" + std::string(s) + "'");
  Family f;
  switch (std::toupper(static_cast<unsigned char>(s[0]))) {
    case 'A': f = Family::kA; break;
    case 'B': f = Family::kB; break;
    case 'C': f = Family::kC; break;
    case 'D': f = Family::kD; break;
    default:
      throw InvalidArgument("unknown family in '" + std::string(s) + "'");
  }
  int r = 0;
  const char* end = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(s.data() + 1, end, r);
  if (ec != std::errc() || ptr != end) {
    throw InvalidArgument("bad rank in '" + std::string(s) + "'");
  }
  return Make(f, r);
}

std::string FamilyTag::Name() const {
  static constexpr char kLetters[] = {'A', 'B', 'C', 'D'};
  return kLetters[static_cast<int>(family)] + std::to_string(r);
}

std::int64_t DynkinIndex(const FamilyTag& tag) {
  const std::int64_t r = tag.r;
  if (r < 1) throw InvalidArgument("family rank must be >= 1");
  switch (tag.family) {
    case Family::kA:
      return r * (r + 1) * (r + 2) / 6;
    case Family::kB:
      return r * (r + 1) * (2 * r + 1) / 3;
    case Family::kC:
      return r * (4 * r * r - 1) / 3;
    case Family::kD:
      return r * (r - 1) * (2 * r - 1) / 3;
  }
  throw InvalidArgument("bad family");
}

std::int64_t BnCoefficient(int n) {
  if (n < 2) throw InvalidArgument("b_n needs n >= 2");
  const std::int64_t m = n;
  return m * (m * m - 1) / 6;
}

double GromovNormBn(int n) {
  return static_cast<double>(BnCoefficient(n)) * MaxBlochWigner();
}

FamilyNorm FamilyGromovNorm(const FamilyTag& tag) {
  FamilyNorm out;
  out.status = "theorem";
  const int r = tag.r;
  switch (tag.family) {
    case Family::kA:
      out.ambient_n = r + 1;
      out.factor = 1.0;
      break;
    case Family::kB:
      out.ambient_n = 2 * r + 1;
      out.factor = 0.5;
      break;
    case Family::kC:
      out.ambient_n = 2 * r;
      out.factor = 1.0;
      break;
    case Family::kD:
      out.ambient_n = 2 * r;
      out.factor = 0.5;
      // res_r is not isometric here; only r = 2 is known.
      out.value = static_cast<double>(DynkinIndex(tag)) * MaxBlochWigner();
      out.conjecture = r != 2;
      out.status = out.conjecture ? "CONJECTURE" : "theorem";
      return out;
  }
  out.value = out.factor * GromovNormBn(out.ambient_n);
  return out;
}

int ThreadCount() {
  if (const char* env = std::getenv("FSL_THREADS")) {
    int t = 0;
    const std::string_view s(env);
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), t);
    if (ec == std::errc() && ptr == s.data() + s.size() && t >= 1) return t;
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

Params Refine(const Objective& f, Params start, const RefineOptions& refine,
              double* value) {
  double best = std::abs(f(start));
  double step = refine.initial_step;
  for (int it = 0; it < refine.iterations; ++it) {
    bool moved = false;
    for (std::size_t k = 0; k < start.size(); ++k) {
      for (double dir : {1.0, -1.0}) {
        Params trial = start;
        trial[k] += dir * step;
        const double v = std::abs(f(trial));
        if (v > best) {
          best = v;
          start = std::move(trial);
          moved = true;
          break;
        }
      }
    }
    if (!moved) step /= 2.0;
  }
  if (value != nullptr) *value = best;
  return start;
}

namespace {

struct Best {
  double value = -1.0;
  std::uint64_t index = 0;
  Params params;

  void Offer(double v, std::uint64_t i, Params p) {
    if (v > value || (v == value && i < index)) {
      value = v;
      index = i;
      params = std::move(p);
    }
  }
};

}  // namespace

SupEstimate EstimateSup(const Objective& f, const Sampler& sampler,
                        std::uint64_t trials, std::uint64_t seed,
                        std::string_view label, const RefineOptions& refine,
                        int threads) {
  if (trials < 1) throw InvalidArgument("trials must be >= 1");
  if (threads <= 0) threads = ThreadCount();
  const auto workers = static_cast<std::uint64_t>(
      std::min<std::uint64_t>(static_cast<std::uint64_t>(threads), trials));

  std::vector<Best> partial(workers);
  std::vector<std::exception_ptr> errors(workers);
  const auto run = [&](std::uint64_t w) {
    const std::uint64_t lo = trials * w / workers;
    const std::uint64_t hi = trials * (w + 1) / workers;
    std::uint64_t i = lo;
    try {
      for (; i < hi; ++i) {
        Rng rng(StreamSeed(seed, label, i));
        Params p = sampler(rng);
        const double value = std::abs(f(p));
        partial[w].Offer(value, i, std::move(p));
      }
    } catch (const std::exception& e) {
      errors[w] = std::make_exception_ptr(
          Error("trial " + std::to_string(i) + ": " + e.what()));
    }
  };
  if (workers == 1) {
    run(0);
  } else {
    std::vector<std::thread> pool;
    for (std::uint64_t w = 0; w < workers; ++w) pool.emplace_back(run, w);
    for (auto& t : pool) t.join();
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }

  Best best;
  for (auto& b : partial) best.Offer(b.value, b.index, std::move(b.params));

  SupEstimate out;
  out.trials = trials;
  out.sampled_value = best.value;
  out.best_trial = best.index;
  out.argmax = Refine(f, best.params, refine, &out.value);
  return out;
}

Objective VolP1Objective() {
  return [](std::span<const double> p) {
    return std::abs(BlochWigner(Complex(p[0], p[1])));
  };
}

Sampler VolP1Sampler() {
  return [](Rng& rng) {
    return Params{rng.Uniform(-1.0, 2.0), rng.Uniform(-2.0, 2.0)};
  };
}

Objective B4So4Objective() {
  return [](std::span<const double> p) {
    return std::abs(B4Standard(Complex(p[0], p[1]), Complex(p[2], p[3])));
  };
}

Sampler B4So4Sampler() {
  return [](Rng& rng) {
    return Params{rng.Uniform(-1.0, 2.0), rng.Uniform(-2.0, 2.0),
                  rng.Uniform(-1.0, 2.0), rng.Uniform(-2.0, 2.0)};
  };
}

Objective BnObjective(int n) {
  if (n < 2) throw InvalidArgument("b_n needs n >= 2");
  return [n](std::span<const double> p) {
    std::vector<AffineFlag> flags;
    std::size_t at = 0;
    for (int k = 0; k < 4; ++k) {
      Matrix m(n, n);
      for (int j = 0; j < n; ++j) {
        for (int i = 0; i < n; ++i, at += 2) m(i, j) = Complex(p[at], p[at + 1]);
      }
      flags.push_back(AffineFlag::Make(std::move(m)));
    }
    return std::abs(Bn(flags));
  };
}

Sampler BnSampler(int n) {
  if (n < 2) throw InvalidArgument("b_n needs n >= 2");
  return [n](Rng& rng) {
    Params p(static_cast<std::size_t>(8 * n * n));
    for (auto& x : p) x = rng.Gaussian();
    return p;
  };
}

OperatorNorm OperatorNormRes2(std::uint64_t trials, std::uint64_t seed,
                              int threads) {
  OperatorNorm out;
  out.estimate = EstimateSup(B4So4Objective(), B4So4Sampler(), trials, seed,
                             "b4-so4", {}, threads);
  out.sampled = out.estimate.value / GromovNormBn(4);
  return out;
}

}  // namespace fsl
