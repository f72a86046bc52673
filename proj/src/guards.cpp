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

#include <set>

#include "folip/errors.hpp"
#include "folip/problem.hpp"

namespace folip {

namespace {

// Replaces bound variables and folds arithmetic whose operands became
// integers; unbound variables survive. Ground non-integer operands under an
// arithmetic node are a fault.
Term subst_partial(const Term& t, const Substitution& s) {
  switch (t.kind()) {
    case Term::Kind::kInt:
      return t;
    case Term::Kind::kVar: {
      const Term* bound = s.lookup(t.name());
      return bound == nullptr ? t : *bound;
    }
    case Term::Kind::kApp: {
      std::vector<Term> args;
      args.reserve(t.args().size());
      for (const Term& a : t.args()) args.push_back(subst_partial(a, s));
      return Term::app(t.name(), std::move(args));
    }
    case Term::Kind::kArith: {
      Term lhs = subst_partial(t.lhs(), s);
      Term rhs = subst_partial(t.rhs(), s);
      if (lhs.is_ground() && rhs.is_ground()) {
        Substitution empty;
        return apply_eval(Term::arith(t.op(), lhs, rhs), empty);
      }
      return Term::arith(t.op(), std::move(lhs), std::move(rhs));
    }
  }
  return t;
}

using Yield = std::function<void(const Substitution&)>;

void eval_conj(const Problem& p, const GuardConj& conj, std::size_t at,
               const Substitution& s, const Yield& yield);

void eval_builtin(const GuardItem& g, const Substitution& s, const Yield& yield) {
  Term lhs = subst_partial(g.lhs, s);
  Term rhs = subst_partial(g.rhs, s);
  if (lhs.is_ground() && rhs.is_ground()) {
    bool holds = false;
    if (g.op == CmpOp::kEq || g.op == CmpOp::kNe) {
      holds = (lhs == rhs) == (g.op == CmpOp::kEq);
    } else {
      if (lhs.kind() != Term::Kind::kInt || rhs.kind() != Term::Kind::kInt)
        throw GuardError("non-integer comparison: " + g.str());
      std::int64_t a = lhs.int_value();
      std::int64_t b = rhs.int_value();
      switch (g.op) {
        case CmpOp::kLt:
          holds = a < b;
          break;
        case CmpOp::kGt:
          holds = a > b;
          break;
        case CmpOp::kLe:
          holds = a <= b;
          break;
        case CmpOp::kGe:
          holds = a >= b;
          break;
        default:
          break;
      }
    }
    if (holds) yield(s);
    return;
  }
  // assignment form: one side a lone unbound variable, the other ground
  if (g.op == CmpOp::kEq) {
    if (lhs.kind() == Term::Kind::kVar && rhs.is_ground()) {
      Substitution ext = s;
      ext.bind(lhs.name(), rhs);
      yield(ext);
      return;
    }
    if (rhs.kind() == Term::Kind::kVar && lhs.is_ground()) {
      Substitution ext = s;
      ext.bind(rhs.name(), lhs);
      yield(ext);
      return;
    }
  }
  throw GuardError("insufficiently instantiated guard: " + g.str());
}

void eval_call(const Problem& p, const GuardItem& g, const Substitution& s,
               const Yield& yield) {
  const GuardDef* def = p.find_guard(g.callee, static_cast<int>(g.args.size()));
  if (def == nullptr)
    throw GuardError("undefined guard: " + g.callee + "/" +
                     std::to_string(g.args.size()));

  std::vector<Term> args;
  args.reserve(g.args.size());
  for (const Term& a : g.args) {
    Term t = subst_partial(a, s);
    if (t.contains_arith())
      throw GuardError("insufficiently instantiated guard: " + g.str());
    args.push_back(std::move(t));
  }

  // fact table: match call arguments against each stored tuple
  Atom call_pattern{def->name, args};
  for (const std::vector<Term>& fact : def->facts) {
    std::optional<Substitution> ext =
        match_extend(call_pattern, Atom{def->name, fact}, s);
    if (ext) yield(*ext);
  }

  for (const GuardRule& rule : def->rules) {
    Substitution local;
    std::vector<std::pair<std::string, std::size_t>> outputs;
    bool feasible = true;
    for (std::size_t i = 0; i < args.size() && feasible; ++i) {
      const Term& head = rule.head[i];
      const Term& arg = args[i];
      if (arg.is_ground()) {
        if (head.kind() == Term::Kind::kVar) {
          feasible = local.bind(head.name(), arg);
        } else {
          feasible = head == arg;
        }
      } else if (arg.kind() == Term::Kind::kVar) {
        outputs.emplace_back(arg.name(), i);
      } else {
        throw GuardError("insufficiently instantiated guard: " + g.str());
      }
    }
    if (!feasible) continue;
    eval_conj(p, rule.body, 0, local, [&](const Substitution& solved) {
      Substitution out = s;
      for (const auto& [caller_var, pos] : outputs) {
        const Term& head = rule.head[pos];
        Term value = head;
        if (head.kind() == Term::Kind::kVar) {
          const Term* bound = solved.lookup(head.name());
          if (bound == nullptr)
            throw GuardError("insufficiently instantiated guard: unbound output " +
                             head.name() + " in " + g.str());
          value = *bound;
        }
        if (!out.bind(caller_var, value)) return;
      }
      yield(out);
    });
  }
}

void eval_conj(const Problem& p, const GuardConj& conj, std::size_t at,
               const Substitution& s, const Yield& yield) {
  if (at == conj.size()) {
    yield(s);
    return;
  }
  const GuardItem& item = conj[at];
  auto next = [&](const Substitution& ext) { eval_conj(p, conj, at + 1, ext, yield); };
  if (item.kind == GuardItem::Kind::kBuiltin)
    eval_builtin(item, s, next);
  else
    eval_call(p, item, s, next);
}

}  // namespace

void eval_guard(const Problem& p, const GuardConj& conj, const Substitution& s,
                const std::function<void(const Substitution&)>& yield) {
  std::set<std::string> seen;
  eval_conj(p, conj, 0, s, [&](const Substitution& sol) {
    if (seen.insert(sol.str()).second) yield(sol);
  });
}

std::vector<Substitution> eval_guard_all(const Problem& p, const GuardConj& conj,
                                         const Substitution& s) {
  std::vector<Substitution> out;
  eval_guard(p, conj, s, [&](const Substitution& sol) { out.push_back(sol); });
  return out;
}

}  // namespace folip
