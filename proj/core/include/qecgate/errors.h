// Copyright 2026 The qecgate Authors
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

#ifndef QECGATE_ERRORS_H
#define QECGATE_ERRORS_H

#include <stdexcept>
#include <string>

namespace qecgate {

/// Raised when an argument lies outside the domain an operation is defined on
/// (angle ranges, gate parameters, unnormalized states, dimension mismatches).
class DomainError : public std::invalid_argument {
   public:
    explicit DomainError(const std::string &what) : std::invalid_argument(what) {
    }
};

}  // namespace qecgate

#endif
