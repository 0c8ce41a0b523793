// Copyright 2026 The MirrorForge Authors
//
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

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace mirrorforge {

/// Failure categories. Each maps to a stable machine-readable tag and a
/// process exit code used by the command-line tool.
enum class ErrorCode {
  kDomain,    // argument outside an operation's precondition
  kGeometry,  // degenerate geometry (zero normal, coincident points)
  kSolver,    // ill-conditioned or non-convergent linear solve
  kIo,        // file could not be opened, read or written
  kFormat,    // file content failed to parse
};

std::string_view error_tag(ErrorCode code);
int exit_code(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }
  std::string_view tag() const { return error_tag(code_); }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) {
  throw Error(code, what);
}

}  // namespace mirrorforge
