// Copyright 2026 The scaledim Authors.
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "scaledim/parallel.h"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace scaledim {
namespace {

std::atomic<std::size_t> g_max_jobs{1};

}  // namespace

void SetMaxJobs(std::size_t jobs) { g_max_jobs = std::max<std::size_t>(1, jobs); }

std::size_t MaxJobs() { return g_max_jobs; }

void ParallelFor(std::size_t n, const std::function<void(std::size_t)>& fn) {
  const std::size_t jobs = std::min(MaxJobs(), n);
  if (jobs <= 1) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::exception_ptr error;
  std::mutex mu;
  std::vector<std::thread> workers;
  const std::size_t chunk = (n + jobs - 1) / jobs;
  for (std::size_t j = 0; j < jobs; ++j) {
    const std::size_t lo = j * chunk;
    const std::size_t hi = std::min(n, lo + chunk);
    workers.emplace_back([&, lo, hi] {
      try {
        for (std::size_t i = lo; i < hi; ++i) fn(i);
      } catch (...) {
        std::lock_guard<std::mutex> lock(mu);
        if (!error) error = std::current_exception();
      }
    });
  }
  for (auto& w : workers) w.join();
  if (error) std::rethrow_exception(error);
}

}  // namespace scaledim
