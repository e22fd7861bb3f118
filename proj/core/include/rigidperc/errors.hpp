// Copyright 2026 The rigidperc Authors
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

#ifndef RIGIDPERC_ERRORS_HPP_
#define RIGIDPERC_ERRORS_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace rigidperc {

// Base of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A precondition on numeric or structural arguments was violated.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

class SelfLoopError : public InvalidArgument {
 public:
  using InvalidArgument::InvalidArgument;
};

class VertexRangeError : public InvalidArgument {
 public:
  using InvalidArgument::InvalidArgument;
};

class DuplicateEdgeError : public InvalidArgument {
 public:
  using InvalidArgument::InvalidArgument;
};

// A closed-form bound was evaluated outside the hypotheses it was derived
// under (a <= 1, c <= a, delta < 0, ...).
class HypothesisError : public InvalidArgument {
 public:
  using InvalidArgument::InvalidArgument;
};

// The exhaustive oracles refuse instances above their enumeration caps.
class OracleLimitError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace rigidperc

#endif  // RIGIDPERC_ERRORS_HPP_
