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

#include "scaledim/guard.h"

#include <cstdlib>
#include <limits>
#include <string_view>

#include "scaledim/error.h"

namespace scaledim::guard {

bool OverrideEnabled() {
  const char* value = std::getenv("SCALEDIM_GUARD_OVERRIDE");
  if (value == nullptr) return false;
  std::string_view v(value);
  return !v.empty() && v != "0";
}

void Check(std::uint64_t value, std::uint64_t limit, const std::string& what) {
  if (value <= limit || OverrideEnabled()) return;
  Fail(ErrorCode::kGuardLimit,
       what + " (" + std::to_string(value) + ") exceeds guard limit " +
           std::to_string(limit) + "; set SCALEDIM_GUARD_OVERRIDE=1 to lift");
}

std::uint64_t SaturatingPow(std::uint64_t base, std::uint64_t exponent) {
  constexpr std::uint64_t kMax = std::numeric_limits<std::uint64_t>::max();
  std::uint64_t result = 1;
  for (std::uint64_t i = 0; i < exponent; ++i) {
    if (base != 0 && result > kMax / base) return kMax;
    result *= base;
  }
  return result;
}

std::uint64_t SaturatingFactorial(std::uint64_t n) {
  constexpr std::uint64_t kMax = std::numeric_limits<std::uint64_t>::max();
  std::uint64_t result = 1;
  for (std::uint64_t i = 2; i <= n; ++i) {
    if (result > kMax / i) return kMax;
    result *= i;
  }
  return result;
}

}  // namespace scaledim::guard
