// Copyright 2026 The equidim Authors
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

#ifndef EQUIDIM_ERRORS_HPP_
#define EQUIDIM_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace equidim {

// Base class for every error raised by the library. The CLI maps all of them
// to exit status 1.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An operation was called outside its domain (disconnected graph, u == v,
// X ∪ Y != V, non-bipartite input to a bipartite formula, ...).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

// An exact search would exceed the configured instance cap.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

// Malformed graph text. `line()` is 1-based, 0 when no line applies.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, int line)
      : Error(line > 0 ? "line " + std::to_string(line) + ": " + what : what),
        line_(line) {}

  int line() const { return line_; }

 private:
  int line_;
};

}  // namespace equidim

#endif  // EQUIDIM_ERRORS_HPP_
