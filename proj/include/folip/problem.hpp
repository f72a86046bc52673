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

#ifndef FOLIP_PROBLEM_HPP_
#define FOLIP_PROBLEM_HPP_

#include <functional>
#include <map>
#include <memory>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "folip/term.hpp"

namespace folip {

enum class CmpOp { kEq, kNe, kLt, kGt, kLe, kGe };

const char* cmp_op_text(CmpOp op);

/// One conjunct of a guard: a builtin comparison over arithmetic terms, or a
/// call to a context predicate.
struct GuardItem {
  enum class Kind { kBuiltin, kCall };
  Kind kind = Kind::kBuiltin;

  CmpOp op = CmpOp::kEq;  // kBuiltin
  Term lhs = Term::integer(0);
  Term rhs = Term::integer(0);

  std::string callee;       // kCall
  std::vector<Term> args;   // kCall

  static GuardItem builtin(CmpOp op, Term lhs, Term rhs);
  static GuardItem call(std::string callee, std::vector<Term> args);
  bool operator==(const GuardItem& other) const;
  std::string str() const;
};

using GuardConj = std::vector<GuardItem>;

/// A context-predicate rule: head argument patterns (variables, possibly
/// repeated, or ground terms) plus a conjunctive body.
struct GuardRule {
  std::vector<Term> head;
  GuardConj body;
  bool operator==(const GuardRule& other) const = default;
};

/// Context predicate: a finite fact table and/or non-recursive rules. Truth
/// values are fixed before solving; such atoms never become IP variables.
struct GuardDef {
  std::string name;
  int arity = 0;
  std::vector<std::vector<Term>> facts;  // ground tuples, file order
  std::vector<GuardRule> rules;          // file order
  bool operator==(const GuardDef& other) const = default;
};

/// Element of a first-order clause body, in written order.
struct ClauseItem {
  enum class Kind { kNegLit, kPosLit, kGuard };
  Kind kind = Kind::kNegLit;
  Atom atom;         // kNegLit / kPosLit pattern
  bool generator = false;  // kNegLit: binds new variables from LP support
  GuardConj guard;   // kGuard conjunction

  bool operator==(const ClauseItem& other) const;
};

/// First-order clause: every negative literal precedes every positive
/// literal, and every positive-literal variable is bound by an earlier
/// negative literal or guard call. Both are enforced at parse time.
struct FoClause {
  std::string name;
  std::vector<ClauseItem> body;

  int count(ClauseItem::Kind kind) const;
  bool operator==(const FoClause& other) const = default;
};

/// Real-valued cost expression over a cost rule's pattern variables.
class CostExpr {
 public:
  enum class Kind { kConst, kVar, kBin };
  enum class Op { kAdd, kSub, kMul, kDiv };

  static std::shared_ptr<const CostExpr> constant(double v);
  static std::shared_ptr<const CostExpr> var(std::string name);
  static std::shared_ptr<const CostExpr> bin(Op op,
                                             std::shared_ptr<const CostExpr> lhs,
                                             std::shared_ptr<const CostExpr> rhs);

  Kind kind() const { return kind_; }
  double value() const { return value_; }
  const std::string& name() const { return name_; }
  Op op() const { return op_; }
  const CostExpr& lhs() const { return *lhs_; }
  const CostExpr& rhs() const { return *rhs_; }

  /// Evaluates under a substitution binding all variables to integer terms.
  double eval(const Substitution& s) const;

  bool equals(const CostExpr& other) const;
  std::string str() const;

 private:
  CostExpr() = default;
  Kind kind_ = Kind::kConst;
  double value_ = 0.0;
  std::string name_;
  Op op_ = Op::kAdd;
  std::shared_ptr<const CostExpr> lhs_, rhs_;
};

struct CostRule {
  Atom pattern;
  std::shared_ptr<const CostExpr> expr;
  bool operator==(const CostRule& other) const {
    return pattern == other.pattern && expr->equals(*other.expr);
  }
};

/// A problem instance: a first-order language (predicate signatures), a set
/// of clauses, and a nonnegative cost function over ground atoms.
struct Problem {
  std::map<std::string, std::set<int>> signatures;  // atom predicates
  std::map<std::pair<std::string, int>, GuardDef> guards;
  std::vector<CostRule> cost_rules;  // first match wins
  std::vector<FoClause> clauses;
  /// True iff every clause is already ground (set by the MLN frontend);
  /// the solver then loads all rows and columns eagerly.
  bool ground_mode = false;

  const GuardDef* find_guard(const std::string& name, int arity) const;
  bool operator==(const Problem& other) const = default;
};

/// Value of the first matching cost rule in file order; 0 if none matches.
/// Throws CostError on negative or non-finite results.
double cost_of(const Problem& p, const Atom& ground_atom);

/// Enumerates every extension of `s` that satisfies the conjunction. Yields
/// each solution once, in a deterministic order. Throws GuardError when a
/// builtin or rule input is insufficiently instantiated.
void eval_guard(const Problem& p, const GuardConj& conj, const Substitution& s,
                const std::function<void(const Substitution&)>& yield);

/// Collecting variant of eval_guard; duplicate-free, deterministic order.
std::vector<Substitution> eval_guard_all(const Problem& p, const GuardConj& conj,
                                         const Substitution& s);

}  // namespace folip

#endif  // FOLIP_PROBLEM_HPP_
