// Copyright 2026 The UECP Authors
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

#ifndef UECP_ERROR_H_
#define UECP_ERROR_H_

#include <stdexcept>
#include <string>

namespace uecp {

enum class ErrorKind {
  kInvalidArgument,
  kDimensionMismatch,
  kInvalidColumn,
  kInfeasible,
  kSizeLimit,
  kNumerical,
};

const char* ErrorKindName(ErrorKind kind);

// Every failure raised by the library carries one of the kinds above so
// that callers (the CLI in particular) can map it to an exit code.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace uecp

#endif  // UECP_ERROR_H_
