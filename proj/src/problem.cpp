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

#include "folip/problem.hpp"

#include <cmath>
#include <sstream>

#include "folip/errors.hpp"

namespace folip {

const char* cmp_op_text(CmpOp op) {
  switch (op) {
    case CmpOp::kEq:
      return "=";
    case CmpOp::kNe:
      return "!=";
    case CmpOp::kLt:
      return "<";
    case CmpOp::kGt:
      return ">";
    case CmpOp::kLe:
      return "=<";
    case CmpOp::kGe:
      return ">=";
  }
  return "?";
}

GuardItem GuardItem::builtin(CmpOp op, Term lhs, Term rhs) {
  GuardItem g;
  g.kind = Kind::kBuiltin;
  g.op = op;
  g.lhs = std::move(lhs);
  g.rhs = std::move(rhs);
  return g;
}

GuardItem GuardItem::call(std::string callee, std::vector<Term> args) {
  GuardItem g;
  g.kind = Kind::kCall;
  g.callee = std::move(callee);
  g.args = std::move(args);
  return g;
}

bool GuardItem::operator==(const GuardItem& other) const {
  if (kind != other.kind) return false;
  if (kind == Kind::kBuiltin)
    return op == other.op && lhs == other.lhs && rhs == other.rhs;
  return callee == other.callee && args == other.args;
}

std::string GuardItem::str() const {
  std::ostringstream os;
  if (kind == Kind::kBuiltin) {
    os << lhs.str() << ' ' << cmp_op_text(op) << ' ' << rhs.str();
  } else {
    Atom a{callee, args};
    os << a.str();
  }
  return os.str();
}

bool ClauseItem::operator==(const ClauseItem& other) const {
  return kind == other.kind && atom == other.atom &&
         generator == other.generator && guard == other.guard;
}

int FoClause::count(ClauseItem::Kind kind) const {
  int n = 0;
  for (const ClauseItem& item : body)
    if (item.kind == kind) ++n;
  return n;
}

std::shared_ptr<const CostExpr> CostExpr::constant(double v) {
  auto e = std::shared_ptr<CostExpr>(new CostExpr());
  e->kind_ = Kind::kConst;
  e->value_ = v;
  return e;
}

std::shared_ptr<const CostExpr> CostExpr::var(std::string name) {
  auto e = std::shared_ptr<CostExpr>(new CostExpr());
  e->kind_ = Kind::kVar;
  e->name_ = std::move(name);
  return e;
}

std::shared_ptr<const CostExpr> CostExpr::bin(Op op,
                                              std::shared_ptr<const CostExpr> lhs,
                                              std::shared_ptr<const CostExpr> rhs) {
  auto e = std::shared_ptr<CostExpr>(new CostExpr());
  e->kind_ = Kind::kBin;
  e->op_ = op;
  e->lhs_ = std::move(lhs);
  e->rhs_ = std::move(rhs);
  return e;
}

double CostExpr::eval(const Substitution& s) const {
  switch (kind_) {
    case Kind::kConst:
      return value_;
    case Kind::kVar: {
      const Term* bound = s.lookup(name_);
      if (bound == nullptr) throw CostError("unbound variable: " + name_);
      if (bound->kind() != Term::Kind::kInt)
        throw CostError("arithmetic fault: non-numeric argument " + bound->str());
      return static_cast<double>(bound->int_value());
    }
    case Kind::kBin: {
      double a = lhs_->eval(s);
      double b = rhs_->eval(s);
      double r = 0.0;
      switch (op_) {
        case Op::kAdd:
          r = a + b;
          break;
        case Op::kSub:
          r = a - b;
          break;
        case Op::kMul:
          r = a * b;
          break;
        case Op::kDiv:
          if (b == 0.0) throw CostError("arithmetic fault: division by zero");
          r = a / b;
          break;
      }
      if (!std::isfinite(r)) throw CostError("arithmetic fault: non-finite cost");
      return r;
    }
  }
  throw CostError("arithmetic fault");
}

bool CostExpr::equals(const CostExpr& other) const {
  if (kind_ != other.kind_) return false;
  switch (kind_) {
    case Kind::kConst:
      return value_ == other.value_;
    case Kind::kVar:
      return name_ == other.name_;
    case Kind::kBin:
      return op_ == other.op_ && lhs_->equals(*other.lhs_) &&
             rhs_->equals(*other.rhs_);
  }
  return false;
}

std::string CostExpr::str() const {
  switch (kind_) {
    case Kind::kConst: {
      std::ostringstream os;
      os.precision(17);
      os << value_;
      std::string text = os.str();
      // keep a decimal marker so the pretty-printed form re-parses as a real
      if (text.find('.') == std::string::npos &&
          text.find('e') == std::string::npos &&
          text.find("inf") == std::string::npos)
        text += ".0";
      return text;
    }
    case Kind::kVar:
      return name_;
    case Kind::kBin: {
      const char* sym = op_ == Op::kAdd   ? " + "
                        : op_ == Op::kSub ? " - "
                        : op_ == Op::kMul ? " * "
                                          : " / ";
      return "(" + lhs_->str() + sym + rhs_->str() + ")";
    }
  }
  return "?";
}

const GuardDef* Problem::find_guard(const std::string& name, int arity) const {
  auto it = guards.find({name, arity});
  return it == guards.end() ? nullptr : &it->second;
}

double cost_of(const Problem& p, const Atom& ground_atom) {
  for (const CostRule& rule : p.cost_rules) {
    std::optional<Substitution> m = match(rule.pattern, ground_atom);
    if (!m) continue;
    double v = rule.expr->eval(*m);
    if (v < 0.0)
      throw CostError("negative cost for " + ground_atom.str());
    return v;
  }
  return 0.0;
}

}  // namespace folip
