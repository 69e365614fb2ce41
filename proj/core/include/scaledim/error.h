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

#ifndef SCALEDIM_ERROR_H_
#define SCALEDIM_ERROR_H_

#include <stdexcept>
#include <string>

namespace scaledim {

// Every failure raised by the library carries one of these codes. The CLI
// maps them one-to-one onto process exit codes.
enum class ErrorCode {
  kInvalidArgument = 10,
  kGuardLimit = 11,
  kParse = 12,
  kInconsistentPrefix = 13,
  kOverflow = 14,
  kInsufficientSample = 15,
  kIo = 16,
};

const char* ErrorCodeName(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] void Fail(ErrorCode code, const std::string& message);

inline void Require(bool condition, const std::string& message) {
  if (!condition) Fail(ErrorCode::kInvalidArgument, message);
}

}  // namespace scaledim

#endif  // SCALEDIM_ERROR_H_
