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

#include "scaledim/rng.h"

#include <limits>

#include "scaledim/error.h"

namespace scaledim {

// splitmix64 finalizer.
std::uint64_t Rng::Mix(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

Rng Rng::ForTrial(std::uint64_t root_seed, std::uint64_t stream,
                  std::uint64_t trial) {
  std::uint64_t key = Mix(root_seed);
  key = Mix(key ^ (stream * 0xd1b54a32d192ed03ULL));
  key = Mix(key ^ (trial * 0x8cb92ba72f3d8dd7ULL));
  return Rng(key);
}

std::uint64_t Rng::Below(std::uint64_t bound) {
  if (bound == 0) Fail(ErrorCode::kInvalidArgument, "empty sampling range");
  const std::uint64_t limit =
      std::numeric_limits<std::uint64_t>::max() -
      std::numeric_limits<std::uint64_t>::max() % bound;
  std::uint64_t x;
  do {
    x = engine_();
  } while (x >= limit);
  return x % bound;
}

double Rng::Uniform01() {
  return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

}  // namespace scaledim
