// Copyright 2026 The Coarse Utility Authors
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

#ifndef CUE_ERRORS_H_
#define CUE_ERRORS_H_

#include <stdexcept>
#include <string>

namespace cue {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A profile or strategy outside the player's strategy set.
class DomainError : public Error {
 public:
  using Error::Error;
};

// A payoff expression produced a non-finite value or divided by zero.
class EvaluationError : public Error {
 public:
  using Error::Error;
};

// Malformed input that parsed but violates an invariant (bounds, overlaps,
// dimensions).
class ValidationError : public Error {
 public:
  using Error::Error;
};

// Text that could not be parsed. Carries a 1-based line/column position.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, int line, int column)
      : Error(std::to_string(line) + ":" + std::to_string(column) + ": " +
              message),
        line_(line),
        column_(column) {}

  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

// The operation is not defined for this kind of game.
class UnsupportedError : public Error {
 public:
  using Error::Error;
};

// A checker's structural precondition does not hold for the given input.
class ApplicabilityError : public Error {
 public:
  using Error::Error;
};

// An iterative procedure hit its iteration cap.
class ConvergenceError : public Error {
 public:
  using Error::Error;
};

}  // namespace cue

#endif  // CUE_ERRORS_H_
