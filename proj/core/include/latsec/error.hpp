// Copyright 2026 The latsec Authors
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

#ifndef LATSEC_ERROR_HPP_
#define LATSEC_ERROR_HPP_

#include <stdexcept>
#include <string>

namespace latsec {

// Base of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An argument lies outside the domain of the operation (y <= 0, zero
// determinant, degree-0 polynomial, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

// Two routes that must agree did not; signals a bug rather than bad input.
class ConsistencyError : public Error {
 public:
  using Error::Error;
};

// A value that must be positive for a genuine lattice was not.
class EvaluationError : public Error {
 public:
  using Error::Error;
};

class DegenerateError : public Error {
 public:
  using Error::Error;
};

// A nonzero lattice vector has a zero coordinate.
class DiversityError : public Error {
 public:
  using Error::Error;
};

// A lattice construction failed one of its acceptance invariants.
class ConstructionError : public Error {
 public:
  using Error::Error;
};

}  // namespace latsec

#endif  // LATSEC_ERROR_HPP_
