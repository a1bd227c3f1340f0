// Copyright 2026 The batterybell Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "batterybell/error.hpp"

namespace batterybell {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kInvalidParameter:
      return "invalid-parameter";
    case ErrorKind::kSizeLimit:
      return "size-limit";
    case ErrorKind::kInconsistentMarginal:
      return "inconsistent-marginal";
    case ErrorKind::kMissingParameter:
      return "missing-parameter";
    case ErrorKind::kDegenerateCalibration:
      return "degenerate-calibration";
    case ErrorKind::kParse:
      return "parse-error";
    case ErrorKind::kIo:
      return "io-error";
  }
  return "error";
}

}  // namespace batterybell
