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

#ifndef FOLIP_PARSER_HPP_
#define FOLIP_PARSER_HPP_

#include <optional>
#include <string>
#include <vector>

#include "folip/problem.hpp"

namespace folip {

struct Diagnostic {
  int line = 0;
  int col = 0;
  std::string message;
  std::string str() const;
};

struct ParseResult {
  std::optional<Problem> problem;
  std::vector<Diagnostic> diagnostics;
  bool ok() const { return problem.has_value(); }
};

/// Parses a .fol problem file (sections: type, guard, cost, clause).
/// Grammar in docs/format.md. On failure, `problem` is empty and
/// `diagnostics` carries line/column messages.
ParseResult parse_problem(const std::string& text);

/// Pretty-prints a Problem in .fol syntax; re-parsing yields a structurally
/// equal Problem.
std::string print_problem(const Problem& p);

/// Parses a single term (variables and arithmetic permitted).
Term parse_term_text(const std::string& text);

/// Parses a single atom pattern, e.g. "parent(X,jim)".
Atom parse_atom_text(const std::string& text);

/// Parses a model file: one canonical ground atom per line, '%' comments and
/// blank lines ignored. Throws Error with a line reference on bad input.
std::vector<Atom> parse_model_file(const std::string& text);

}  // namespace folip

#endif  // FOLIP_PARSER_HPP_
