// Copyright 2026 The sdnpolicy authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "sdnpolicy/errors.h"

namespace sdnpolicy {

std::string_view ErrorKindName(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kSyntax:
      return "SyntaxError";
    case ErrorKind::kInvariantViolation:
      return "InvariantViolation";
    case ErrorKind::kDisconnectedTopology:
      return "DisconnectedTopology";
    case ErrorKind::kUnknownSwitch:
      return "UnknownSwitch";
    case ErrorKind::kUnknownTerminal:
      return "UnknownTerminal";
    case ErrorKind::kUnderlyingLeak:
      return "UnderlyingLeak";
    case ErrorKind::kUnknownSymbol:
      return "UnknownSymbol";
    case ErrorKind::kDanglingTerminal:
      return "DanglingTerminal";
    case ErrorKind::kUnknownAttachment:
      return "UnknownAttachment";
    case ErrorKind::kStaleDelta:
      return "StaleDelta";
    case ErrorKind::kDuplicateRule:
      return "DuplicateRule";
    case ErrorKind::kStateBudgetExceeded:
      return "StateBudgetExceeded";
    case ErrorKind::kUniverseTooLarge:
      return "UniverseTooLarge";
    case ErrorKind::kIo:
      return "IoError";
    case ErrorKind::kInvalidArgument:
      return "InvalidArgument";
    case ErrorKind::kInternal:
      return "InternalError";
  }
  return "Error";
}

}  // namespace sdnpolicy
