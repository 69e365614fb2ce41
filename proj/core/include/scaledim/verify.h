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

// The acceptance suite: sixteen self-contained checks, each seeded from one
// root seed. Results serialize without timings so that two runs with the
// same seed produce identical files.

#ifndef SCALEDIM_VERIFY_H_
#define SCALEDIM_VERIFY_H_

#include <cstdint>
#include <string>
#include <vector>

namespace scaledim {

inline constexpr int kNumCriteria = 16;

struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  std::string detail;
  double seconds = 0.0;
  double time_limit = 0.0;
};

// Runs criterion `id` (1..16). Timing counts toward pass: a check that
// exceeds its time limit fails.
CriterionResult RunCriterion(int id, std::uint64_t seed);

// Runs the listed criteria, all when empty.
std::vector<CriterionResult> RunAcceptance(std::uint64_t seed,
                                           const std::vector<int>& ids = {});

// id,name,pass,detail
std::string ResultsCsv(const std::vector<CriterionResult>& results);
std::string ResultsJson(const std::vector<CriterionResult>& results,
                        std::uint64_t seed);
// Human-readable table including timings.
std::string ResultsTable(const std::vector<CriterionResult>& results);

}  // namespace scaledim

#endif  // SCALEDIM_VERIFY_H_
