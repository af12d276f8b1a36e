// Copyright 2026 The locdisc authors
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

namespace locdisc {

// A caller handed us something that violates a documented precondition.
class precondition_error : public std::invalid_argument {
 public:
  explicit precondition_error(const std::string& what)
      : std::invalid_argument(what) {}
};

// A value object failed one of its structural invariants on construction.
class invariant_error : public std::invalid_argument {
 public:
  explicit invariant_error(const std::string& what)
      : std::invalid_argument(what) {}
};

// Text input could not be parsed; carries a 1-based line number.
class parse_error : public std::runtime_error {
 public:
  parse_error(const std::string& what, long line)
      : std::runtime_error(what + " (line " + std::to_string(line) + ")"),
        line_(line) {}
  long line() const { return line_; }

 private:
  long line_;
};

// Two internally consistent tolerances disagreed about the same object.
// Reported rather than silently absorbed.
class inconsistency_error : public std::logic_error {
 public:
  explicit inconsistency_error(const std::string& what)
      : std::logic_error(what) {}
};

}  // namespace locdisc
