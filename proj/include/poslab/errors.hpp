// Copyright 2023 The Authors.
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

#ifndef POSLAB_ERRORS_HPP_
#define POSLAB_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace poslab {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed value (non-monotone shape, cell outside shape).
class StructuralError : public Error {
 public:
  using Error::Error;
};

// An operation was called on an input outside its contract.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

// Bad argument: element out of range, wrong subset size.
class ArgumentError : public Error {
 public:
  using Error::Error;
};

// Numeric domain violation, e.g. a non-positive edge weight.
class DomainError : public Error {
 public:
  using Error::Error;
};

// A value could not be built, e.g. a set system without a transversal.
class ConstructionError : public Error {
 public:
  using Error::Error;
};

class UnsupportedInputError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, int line, int column)
      : Error(line > 0 ? what + " at line " + std::to_string(line) +
                             ", column " + std::to_string(column)
                       : what),
        line_(line),
        column_(column) {}
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

}  // namespace poslab

#endif  // POSLAB_ERRORS_HPP_
