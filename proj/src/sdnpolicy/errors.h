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

#ifndef SDNPOLICY_ERRORS_H_
#define SDNPOLICY_ERRORS_H_

#include <stdexcept>
#include <string>
#include <string_view>

namespace sdnpolicy {

// Every failure the library reports is one of these kinds. The numeric values
// are mirrored by `sdnp_status` in the C API and must stay in sync.
enum class ErrorKind {
  kSyntax = 1,
  kInvariantViolation = 2,
  kDisconnectedTopology = 3,
  kUnknownSwitch = 4,
  kUnknownTerminal = 5,
  kUnderlyingLeak = 6,
  kUnknownSymbol = 7,
  kDanglingTerminal = 8,
  kUnknownAttachment = 9,
  kStaleDelta = 10,
  kDuplicateRule = 11,
  kStateBudgetExceeded = 12,
  kUniverseTooLarge = 13,
  kIo = 14,
  kInvalidArgument = 15,
  kInternal = 16,
};

std::string_view ErrorKindName(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace sdnpolicy

#endif  // SDNPOLICY_ERRORS_H_
