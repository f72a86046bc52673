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

#ifndef FOLIP_TERM_HPP_
#define FOLIP_TERM_HPP_

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

namespace folip {

enum class ArithOp { kAdd, kSub, kMul, kDiv, kMod };

/// Element of the Herbrand universe, or a pattern over it.
///
/// A term is an integer constant, a constructor application, a variable
/// (patterns only), or an arithmetic expression (patterns only; folded to an
/// integer by apply_eval). Lists are sugar for the binary constructor "[|]"
/// with nil "[]".
class Term {
 public:
  enum class Kind { kInt, kVar, kApp, kArith };

  static Term integer(std::int64_t value);
  static Term var(std::string name);
  static Term app(std::string symbol, std::vector<Term> args = {});
  static Term arith(ArithOp op, Term lhs, Term rhs);
  static Term nil();
  static Term cons(Term head, Term tail);
  static Term list(std::vector<Term> items);

  Kind kind() const { return kind_; }
  std::int64_t int_value() const { return int_; }
  /// Variable name (kVar) or constructor symbol (kApp).
  const std::string& name() const { return sym_; }
  const std::vector<Term>& args() const { return args_; }
  ArithOp op() const { return op_; }
  const Term& lhs() const { return args_[0]; }
  const Term& rhs() const { return args_[1]; }

  bool is_ground() const;
  bool contains_arith() const;
  /// Collects variable names in first-occurrence order.
  void collect_vars(std::vector<std::string>& out) const;

  bool operator==(const Term& other) const;
  bool operator!=(const Term& other) const { return !(*this == other); }
  /// Total structural order; used for deterministic containers.
  bool operator<(const Term& other) const;

  /// Canonical textual form: "f(3,[2,4])", list sugar, no spaces.
  std::string str() const;

  std::size_t hash() const;

 private:
  Term() = default;

  Kind kind_ = Kind::kInt;
  std::int64_t int_ = 0;
  std::string sym_;
  std::vector<Term> args_;  // kApp arguments; kArith stores {lhs, rhs}
  ArithOp op_ = ArithOp::kAdd;
};

/// Names of the internal list constructors. Not expressible as identifiers,
/// so user symbols cannot collide with them.
inline constexpr const char* kConsSymbol = "[|]";
inline constexpr const char* kNilSymbol = "[]";

/// A predicate applied to terms. Ground atoms are elements of the Herbrand
/// base; atoms with variables act as patterns in clauses and cost rules.
struct Atom {
  std::string pred;
  std::vector<Term> args;

  bool is_ground() const;
  bool contains_arith() const;
  void collect_vars(std::vector<std::string>& out) const;
  std::string str() const;

  bool operator==(const Atom& other) const {
    return pred == other.pred && args == other.args;
  }
  bool operator!=(const Atom& other) const { return !(*this == other); }
  bool operator<(const Atom& other) const;
  std::size_t hash() const;
};

/// Finite map from variable name to ground term.
class Substitution {
 public:
  /// Binds name to a ground term. Returns false if name is already bound to
  /// a different term (repeated-variable disagreement).
  bool bind(const std::string& name, const Term& value);
  const Term* lookup(const std::string& name) const;
  bool contains(const std::string& name) const { return lookup(name) != nullptr; }
  std::size_t size() const { return map_.size(); }

  const std::map<std::string, Term>& entries() const { return map_; }

  /// "{X/bob,Y/alice}" with entries in name order.
  std::string str() const;

  bool operator==(const Substitution& other) const { return map_ == other.map_; }

 private:
  std::map<std::string, Term> map_;
};

/// One-sided matching of a pattern against a ground atom. Returns the
/// witness substitution, or nullopt on predicate/arity/structure mismatch or
/// repeated-variable disagreement. Throws EvalError("non-matchable pattern")
/// if the pattern contains arithmetic.
std::optional<Substitution> match(const Atom& pattern, const Atom& ground);

/// Extends `onto` with the bindings of pattern-matching `pattern` against
/// `ground`; variables already bound in `onto` must agree.
std::optional<Substitution> match_extend(const Atom& pattern, const Atom& ground,
                                         const Substitution& onto);

/// Applies a substitution and folds all arithmetic to integers. Throws
/// EvalError on unbound variables, division/mod by zero ("arithmetic fault")
/// and integer overflow.
Term apply_eval(const Term& t, const Substitution& s);
Atom apply_eval(const Atom& a, const Substitution& s);

/// Evaluates a ground arithmetic term to an integer.
std::int64_t eval_int(const Term& t, const Substitution& s);

using AtomId = std::int32_t;

/// Injective ground-atom <-> dense-id table. Ids are assigned in creation
/// order and stable for the lifetime of a solve.
class AtomInterner {
 public:
  /// Throws EvalError("non-ground atom") if the atom has variables.
  AtomId intern(const Atom& atom);
  std::optional<AtomId> find(const Atom& atom) const;
  const Atom& atom(AtomId id) const { return atoms_[static_cast<std::size_t>(id)]; }
  std::int32_t size() const { return static_cast<std::int32_t>(atoms_.size()); }

 private:
  struct AtomHash {
    std::size_t operator()(const Atom& a) const { return a.hash(); }
  };
  std::vector<Atom> atoms_;
  std::unordered_map<Atom, AtomId, AtomHash> index_;
};

}  // namespace folip

#endif  // FOLIP_TERM_HPP_
