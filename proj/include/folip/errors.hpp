// Copyright (2026) the Folip Project
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

#ifndef FOLIP_ERRORS_HPP_
#define FOLIP_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace folip {

/// Base class for all errors raised by the solver library.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Raised by term evaluation: unbound variables, division by zero, overflow.
class EvalError : public Error {
 public:
  explicit EvalError(const std::string& what) : Error(what) {}
};

/// Raised by guard evaluation when an input position is not ground.
class GuardError : public Error {
 public:
  explicit GuardError(const std::string& what) : Error(what) {}
};

/// Raised by cost evaluation (negative cost, arithmetic fault).
class CostError : public Error {
 public:
  explicit CostError(const std::string& what) : Error(what) {}
};

/// Raised by the LP engine (numerical failure, unknown column).
class LpError : public Error {
 public:
  explicit LpError(const std::string& what) : Error(what) {}
};

}  // namespace folip

#endif  // FOLIP_ERRORS_HPP_
