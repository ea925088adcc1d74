// Copyright 2026 The Betti-ES Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <stdexcept>
#include <string>

namespace betti {

// Violated operation precondition (bad modulus, non-prime, out-of-range
// parameter). The CLI maps these to exit code 2.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Mixed-modulus or mixed-conductor arithmetic without explicit coercion.
class MismatchError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// p | a_p: the unit-root stabilization does not exist.
class NonOrdinaryError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Result cannot be certified at the requested p-adic precision.
class PrecisionError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Malformed input file; carries the 1-based line number.
class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what),
        line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

}  // namespace betti
