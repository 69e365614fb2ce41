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

#ifndef SCALEDIM_GUARD_H_
#define SCALEDIM_GUARD_H_

#include <cstddef>
#include <cstdint>
#include <string>

namespace scaledim {

// Size limits for the exponential-time operations. Inputs above a limit are
// refused with ErrorCode::kGuardLimit rather than left to run for hours.
// Setting the environment variable SCALEDIM_GUARD_OVERRIDE to a non-empty
// value other than "0" lifts every limit; the affected operations may then
// fail to terminate in practice.
namespace guard {

inline constexpr std::size_t kDimsMaxPoints = 16;
inline constexpr std::size_t kDimsMaxRows = 4096;
inline constexpr std::size_t kPackingExactMaxRows = 64;
inline constexpr std::size_t kPackingGreedyMaxRows = 2000;
inline constexpr std::size_t kGeneratorMaxExponent = 16;
inline constexpr std::size_t kMaxMaterializedRows = 1u << 16;
inline constexpr std::uint64_t kExhaustiveMaxSequences = 1000000;
inline constexpr std::uint64_t kExhaustiveMaxPermutations = 40320;

bool OverrideEnabled();

// Raises kGuardLimit with `what` unless value <= limit or the override is on.
void Check(std::uint64_t value, std::uint64_t limit, const std::string& what);

// Saturating n^k, used to test |domain|^m against a limit.
std::uint64_t SaturatingPow(std::uint64_t base, std::uint64_t exponent);
std::uint64_t SaturatingFactorial(std::uint64_t n);

}  // namespace guard
}  // namespace scaledim

#endif  // SCALEDIM_GUARD_H_
