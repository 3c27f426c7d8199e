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


#ifndef FSL_CLI_TRIALS_HPP
#define FSL_CLI_TRIALS_HPP

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <exception>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

namespace fsl::cli {

struct Stat {
  std::uint64_t samples = 0;
  double max = 0.0;

  void Add(double r) {
    ++samples;
    if (std::isnan(r) || std::isnan(max)) {
      max = std::nan("");
    } else {
      max = std::max(max, r);
    }
  }
  void Merge(const Stat& o) {
    samples += o.samples;
    if (std::isnan(o.max) || std::isnan(max)) {
      max = std::nan("");
    } else {
      max = std::max(max, o.max);
    }
  }
};

class Accumulator {
 public:
  explicit Accumulator(std::size_t checks) : stats_(checks) {}
  void Add(std::size_t check, double r) { stats_.at(check).Add(r); }
  void Merge(const Accumulator& o) {
    for (std::size_t i = 0; i < stats_.size(); ++i) stats_[i].Merge(o.stats_[i]);
  }
  const std::vector<Stat>& stats() const { return stats_; }

 private:
  std::vector<Stat> stats_;
};

/// Runs fn(i, acc) for i in [0, trials) over contiguous blocks. Merging is
/// max/sum only, so the result does not depend on `threads`. The exception
/// of the lowest failing trial is rethrown.
template <class F>
Accumulator RunTrials(std::size_t checks, std::uint64_t trials, int threads,
                      F&& fn) {
  const std::uint64_t workers =
      std::max<std::uint64_t>(1, std::min<std::uint64_t>(threads, trials));
  std::vector<Accumulator> parts(workers, Accumulator(checks));
  std::mutex mu;
  std::uint64_t failed_at = trials;
  std::exception_ptr failure;

  const auto body = [&](std::uint64_t w) {
    const std::uint64_t lo = trials * w / workers;
    const std::uint64_t hi = trials * (w + 1) / workers;
    for (std::uint64_t i = lo; i < hi; ++i) {
      try {
        fn(i, parts[w]);
      } catch (...) {
        std::lock_guard<std::mutex> lock(mu);
        if (i < failed_at) {
          failed_at = i;
          failure = std::current_exception();
        }
        return;
      }
    }
  };

  if (workers == 1) {
    body(0);
  } else {
    std::vector<std::thread> pool;
    for (std::uint64_t w = 0; w < workers; ++w) pool.emplace_back(body, w);
    for (auto& t : pool) t.join();
  }
  if (failure) std::rethrow_exception(failure);

  Accumulator out(checks);
  for (const auto& p : parts) out.Merge(p);
  return out;
}

}  // namespace fsl::cli

#endif  // FSL_CLI_TRIALS_HPP
