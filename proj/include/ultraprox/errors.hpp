// Copyright 2026 The Ultraprox Authors
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

#pragma once

#include <stdexcept>
#include <string>

namespace ultraprox {

/// Base of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A value outside an operation's domain (zero denominator, empty set, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Malformed input description (space, subset, map or point spec).
class SpecError : public Error {
 public:
  using Error::Error;
};

/// The request is well formed but not supported for this kind of space.
class UnsupportedError : public Error {
 public:
  using Error::Error;
};

/// A point or map was used with a space other than the one that produced it.
class CrossSpaceError : public Error {
 public:
  using Error::Error;
};

/// Lazy evaluation ran out of its work budget.
class BudgetError : public Error {
 public:
  using Error::Error;
};

/// Two lazily represented points agree up to the comparison depth but no
/// certificate of equality exists.
class IndistinguishableError : public Error {
 public:
  using Error::Error;
};

/// An operation's mathematical precondition was refuted; carries the witness.
class PreconditionError : public Error {
 public:
  PreconditionError(const std::string& what, std::string witness)
      : Error(what), witness_(std::move(witness)) {}

  const std::string& witness() const noexcept { return witness_; }

 private:
  std::string witness_;
};

}  // namespace ultraprox
