// Copyright 2026 The qipsim Authors
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

namespace qipsim {

/// Base class of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A qubit index, count, or gate arity violates an operation's contract.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// A matrix handed to UnitaryMatrix failed the U^dagger U = I check.
class NotUnitary : public Error {
 public:
  using Error::Error;
};

/// A state does not have the structure a decoder expects.
class MalformedState : public Error {
 public:
  using Error::Error;
};

/// Input data (files, text formats) could not be parsed or validated.
class DataError : public Error {
 public:
  using Error::Error;
};

}  // namespace qipsim
