// Copyright 2026 The qa Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef QA_ERROR_HPP
#define QA_ERROR_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace qa {

/// Base class of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed user input: signature files, model files, formulas.
class InputError : public Error {
 public:
  using Error::Error;
};

/// Syntax error in a formula, with a 1-based line/column position.
class ParseError : public InputError {
 public:
  ParseError(const std::string& msg, std::size_t line, std::size_t column)
      : InputError(std::to_string(line) + ":" + std::to_string(column) + ": " + msg),
        line_(line),
        column_(column) {}

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

/// A finite enumeration would exceed its configured cap.
class EnumerationOverflow : public Error {
 public:
  using Error::Error;
};

/// An internal consistency check failed. Always a bug, never an input problem.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace qa

#endif  // QA_ERROR_HPP
