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

#ifndef SCALEDIM_PARALLEL_H_
#define SCALEDIM_PARALLEL_H_

#include <cstddef>
#include <functional>

namespace scaledim {

// Upper bound on worker threads used by ParallelFor; defaults to 1.
void SetMaxJobs(std::size_t jobs);
std::size_t MaxJobs();

// Calls fn(i) for i in [0, n), split into contiguous chunks over at most
// MaxJobs() threads. fn must only write to per-index state; callers then
// combine results in index order, so output never depends on the job count.
// The first exception thrown by any call is rethrown.
void ParallelFor(std::size_t n, const std::function<void(std::size_t)>& fn);

}  // namespace scaledim

#endif  // SCALEDIM_PARALLEL_H_
