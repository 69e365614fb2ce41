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

#ifndef SCALEDIM_RNG_H_
#define SCALEDIM_RNG_H_

#include <cstdint>
#include <random>

namespace scaledim {

// Seeded generator for all randomized operations. Each trial gets its own
// substream derived from (root seed, stream, trial) by a counter-mode mix, so
// trials can run in any order or in parallel and replay bit-identically.
//
// Bounded integers are drawn by rejection on the raw 64-bit engine output
// rather than through std::uniform_int_distribution, whose algorithm is left
// to the standard library implementation.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(Mix(seed)) {}

  static Rng ForTrial(std::uint64_t root_seed, std::uint64_t stream,
                      std::uint64_t trial);

  std::uint64_t Next() { return engine_(); }

  // Uniform on {0, ..., bound - 1}; bound must be positive.
  std::uint64_t Below(std::uint64_t bound);

  // Uniform on [0, 1) with 53 random bits.
  double Uniform01();

  std::mt19937_64& engine() { return engine_; }

  static std::uint64_t Mix(std::uint64_t x);

 private:
  std::mt19937_64 engine_;
};

}  // namespace scaledim

#endif  // SCALEDIM_RNG_H_
