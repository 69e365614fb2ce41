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

// JSON file formats:
//   class         {"denominator": 4, "domain": ["1", ...], "functions": [[0, 3], ...]}
//   distribution  {"weights": [[1, 2], [1, 2]]}
//   prefix        {"points": [0, 2], "labels": ["1/2", "0"]}
//   joint sample  {"support": [[0, "1/2"], ...], "weights": [[1, 3], ...]}
// Rationals may be given as "p/q" strings or [num, den] pairs. Malformed
// input raises kParse and unreadable files raise kIo.

#ifndef SCALEDIM_CLASS_IO_H_
#define SCALEDIM_CLASS_IO_H_

#include <string>
#include <string_view>

#include "scaledim/function_class.h"
#include "scaledim/simulate.h"

namespace scaledim {

std::string ReadFile(const std::string& path);
void WriteFile(const std::string& path, std::string_view contents);

FunctionClass ParseClass(std::string_view json);
std::string ClassToJson(const FunctionClass& f);
FunctionClass LoadClass(const std::string& path);

// A class file read as a bare matrix; "domain" may be omitted.
ValueMatrix ParseMatrix(std::string_view json);
ValueMatrix LoadMatrix(const std::string& path);

DiscreteDistribution ParseDistribution(std::string_view json);
std::string DistributionToJson(const DiscreteDistribution& d);
DiscreteDistribution LoadDistribution(const std::string& path);

LabeledSample ParsePrefix(std::string_view json);
LabeledSample LoadPrefix(const std::string& path);

JointSample ParseJointSample(std::string_view json);
std::string JointSampleToJson(const JointSample& p);
JointSample LoadJointSample(const std::string& path);

}  // namespace scaledim

#endif  // SCALEDIM_CLASS_IO_H_
