// Copyright 2026 The symmhg Authors
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

namespace symmhg {

/// Base class of all errors thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed state text, hypergraph JSON, or other unreadable input.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// A precondition on mathematically valid input was violated.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Input parsed and was well shaped, but is not consistent with any state
/// the operation is defined on (e.g. a reduced first column that no
/// admissible sign vector reproduces).
class InvalidInputError : public Error {
 public:
  using Error::Error;
};

/// Matrix or vector sizes do not match.
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// Request exceeds a configured dense/enumeration cap.
class ResourceLimitError : public Error {
 public:
  using Error::Error;
};

/// An internal cross-check between two independent computations failed.
/// This is the most serious error the library can raise: it means a
/// structural identity that must hold did not.
class ConsistencyError : public Error {
 public:
  using Error::Error;
};

}  // namespace symmhg
