// Copyright 2026 The dea-facets Authors
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

namespace dea {

/** Malformed or unusable input data (bad CSV, invalid DMU values, bad flags). */
class InputError : public std::runtime_error {
 public:
  explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

/** Two criteria that must agree did not; indicates a bug or a violated assumption. */
class InternalConsistencyError : public std::logic_error {
 public:
  explicit InternalConsistencyError(const std::string& what) : std::logic_error(what) {}
};

/** A problem is too large for an enumeration-based verifier. */
class GuardExceeded : public std::runtime_error {
 public:
  explicit GuardExceeded(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace dea
