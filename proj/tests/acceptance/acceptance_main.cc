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

// Runs the acceptance criteria and prints one PASS/FAIL line per criterion.
// Usage: acceptance [--seed N] [id ...]. Exits nonzero if any check fails.

#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <string>
#include <vector>

#include "scaledim/verify.h"

int main(int argc, char** argv) {
  std::uint64_t seed = 7;
  std::vector<int> ids;
  for (int i = 1; i < argc; ++i) {
    const std::string arg = argv[i];
    if (arg == "--seed" && i + 1 < argc) {
      seed = std::strtoull(argv[++i], nullptr, 10);
    } else {
      ids.push_back(std::atoi(arg.c_str()));
    }
  }
  bool all = true;
  const auto results = scaledim::RunAcceptance(seed, ids);
  for (const auto& r : results) {
    std::printf("criterion %2d %-34s %s  %.2fs/%.0fs  %s\n", r.id,
                r.name.c_str(), r.pass ? "PASS" : "FAIL", r.seconds,
                r.time_limit, r.detail.c_str());
    all = all && r.pass;
  }
  return all ? 0 : 1;
}
