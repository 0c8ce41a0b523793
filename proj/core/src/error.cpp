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

#include "mirrorforge/error.hpp"

namespace mirrorforge {

std::string_view error_tag(ErrorCode code) {
  switch (code) {
    case ErrorCode::kDomain: return "E_DOMAIN";
    case ErrorCode::kGeometry: return "E_GEOMETRY";
    case ErrorCode::kSolver: return "E_SOLVER";
    case ErrorCode::kIo: return "E_IO";
    case ErrorCode::kFormat: return "E_FORMAT";
  }
  return "E_UNKNOWN";
}

int exit_code(ErrorCode code) {
  switch (code) {
    case ErrorCode::kDomain: return 2;
    case ErrorCode::kGeometry:
    case ErrorCode::kSolver: return 3;
    case ErrorCode::kIo:
    case ErrorCode::kFormat: return 4;
  }
  return 1;
}

}  // namespace mirrorforge
