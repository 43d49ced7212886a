// Copyright 2026 The cayley-nav Authors
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

#ifndef CAYLEY_NAV_ERRORS_HPP
#define CAYLEY_NAV_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace cayley {

// Every failure raised by the library derives from Error. The CLI maps the
// subclasses onto exit codes: ParseError -> 2, domain-type errors -> 3,
// BudgetError -> 4.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed text or JSON input.
class ParseError : public Error {
 public:
  using Error::Error;
};

// Argument outside the domain of an operation (zero tuple, non-prime p, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

// An elementary letter with i == j or an index outside 1..N.
class InvalidGeneratorError : public DomainError {
 public:
  using DomainError::DomainError;
};

// Matrix with determinant other than 1.
class NotInGroupError : public DomainError {
 public:
  using DomainError::DomainError;
};

// Dimension for which the construction does not exist (N < 3 for compression).
class UnsupportedDimensionError : public DomainError {
 public:
  using DomainError::DomainError;
};

// A phase of a reduction was entered with its precondition violated.
class InternalStateError : public Error {
 public:
  using Error::Error;
};

// Exhaustive computation refused because it exceeds the configured budget.
class BudgetError : public Error {
 public:
  using Error::Error;
};

}  // namespace cayley

#endif  // CAYLEY_NAV_ERRORS_HPP
