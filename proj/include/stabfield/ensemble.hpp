// Copyright 2026 The stabfield Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <functional>
#include <mutex>
#include <thread>
#include <vector>

#include "stabfield/evolution.hpp"
#include "stabfield/noise.hpp"

namespace stabfield {

inline std::size_t default_jobs() {
  return std::max<std::size_t>(1, std::thread::hardware_concurrency());
}

/// Runs fn(i) for i in [0, n) on up to `jobs` threads. Work is claimed from a
/// shared counter; callers write results into slot i, so output order never
/// depends on scheduling. The exception from the lowest failing index is
/// rethrown after all workers finish.
template <class Fn>
void parallel_for(std::size_t n, std::size_t jobs, Fn&& fn) {
  jobs = std::clamp<std::size_t>(jobs, 1, std::max<std::size_t>(n, 1));
  std::atomic<std::size_t> next{0};
  std::mutex err_mu;
  std::size_t err_index = n;
  std::exception_ptr err;
  auto worker = [&] {
    for (std::size_t i = next++; i < n; i = next++) {
      try {
        fn(i);
      } catch (...) {
        std::lock_guard lock(err_mu);
        if (i < err_index) {
          err_index = i;
          err = std::current_exception();
        }
      }
    }
  };
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(jobs);
    for (std::size_t j = 0; j < jobs; ++j) pool.emplace_back(worker);
  }
  if (err) std::rethrow_exception(err);
}

using MaskForSample = std::function<DefectMask(std::size_t sample_index)>;

/// params.n_samples traces, sample i driven by sample_fields(params, mask(i), i).
inline std::vector<FidelityTrace> run_ensemble(const StabilizerModel& model, const NoiseParams& params,
                                               const EvolutionConfig& config, std::size_t jobs = 1,
                                               const MaskForSample& mask = {}) {
  params.validate();
  config.validate();
  const TraceRunner runner(model);
  std::vector<FidelityTrace> traces(params.n_samples);
  parallel_for(params.n_samples, jobs, [&](std::size_t i) {
    const DefectMask m = mask ? mask(i) : DefectMask::all(model.n_qubits());
    traces[i] = runner.run(sample_fields(params, m, i), config, i);
  });
  return traces;
}

}  // namespace stabfield
