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

#include "folip/term.hpp"

#include <algorithm>
#include <sstream>

#include "folip/errors.hpp"

namespace folip {

Term Term::integer(std::int64_t value) {
  Term t;
  t.kind_ = Kind::kInt;
  t.int_ = value;
  return t;
}

Term Term::var(std::string name) {
  Term t;
  t.kind_ = Kind::kVar;
  t.sym_ = std::move(name);
  return t;
}

Term Term::app(std::string symbol, std::vector<Term> args) {
  Term t;
  t.kind_ = Kind::kApp;
  t.sym_ = std::move(symbol);
  t.args_ = std::move(args);
  return t;
}

Term Term::arith(ArithOp op, Term lhs, Term rhs) {
  Term t;
  t.kind_ = Kind::kArith;
  t.op_ = op;
  t.args_.push_back(std::move(lhs));
  t.args_.push_back(std::move(rhs));
  return t;
}

Term Term::nil() { return app(kNilSymbol); }

Term Term::cons(Term head, Term tail) {
  return app(kConsSymbol, {std::move(head), std::move(tail)});
}

Term Term::list(std::vector<Term> items) {
  Term t = nil();
  for (auto it = items.rbegin(); it != items.rend(); ++it)
    t = cons(std::move(*it), std::move(t));
  return t;
}

bool Term::is_ground() const {
  switch (kind_) {
    case Kind::kInt:
      return true;
    case Kind::kVar:
      return false;
    case Kind::kApp:
    case Kind::kArith:
      return std::all_of(args_.begin(), args_.end(),
                         [](const Term& a) { return a.is_ground(); });
  }
  return false;
}

bool Term::contains_arith() const {
  if (kind_ == Kind::kArith) return true;
  return std::any_of(args_.begin(), args_.end(),
                     [](const Term& a) { return a.contains_arith(); });
}

void Term::collect_vars(std::vector<std::string>& out) const {
  if (kind_ == Kind::kVar) {
    if (std::find(out.begin(), out.end(), sym_) == out.end()) out.push_back(sym_);
    return;
  }
  for (const Term& a : args_) a.collect_vars(out);
}

bool Term::operator==(const Term& other) const {
  if (kind_ != other.kind_) return false;
  switch (kind_) {
    case Kind::kInt:
      return int_ == other.int_;
    case Kind::kVar:
      return sym_ == other.sym_;
    case Kind::kApp:
      return sym_ == other.sym_ && args_ == other.args_;
    case Kind::kArith:
      return op_ == other.op_ && args_ == other.args_;
  }
  return false;
}

bool Term::operator<(const Term& other) const {
  if (kind_ != other.kind_) return kind_ < other.kind_;
  switch (kind_) {
    case Kind::kInt:
      return int_ < other.int_;
    case Kind::kVar:
      return sym_ < other.sym_;
    case Kind::kApp:
      if (sym_ != other.sym_) return sym_ < other.sym_;
      break;
    case Kind::kArith:
      if (op_ != other.op_) return op_ < other.op_;
      break;
  }
  return std::lexicographical_compare(args_.begin(), args_.end(),
                                      other.args_.begin(), other.args_.end());
}

namespace {

const char* arith_op_text(ArithOp op) {
  switch (op) {
    case ArithOp::kAdd:
      return " + ";
    case ArithOp::kSub:
      return " - ";
    case ArithOp::kMul:
      return " * ";
    case ArithOp::kDiv:
      return " / ";
    case ArithOp::kMod:
      return " mod ";
  }
  return "?";
}

void print_term(const Term& t, std::ostream& os) {
  switch (t.kind()) {
    case Term::Kind::kInt:
      os << t.int_value();
      return;
    case Term::Kind::kVar:
      os << t.name();
      return;
    case Term::Kind::kArith:
      os << '(';
      print_term(t.lhs(), os);
      os << arith_op_text(t.op());
      print_term(t.rhs(), os);
      os << ')';
      return;
    case Term::Kind::kApp:
      break;
  }
  if (t.name() == kNilSymbol && t.args().empty()) {
    os << "[]";
    return;
  }
  if (t.name() == kConsSymbol && t.args().size() == 2) {
    os << '[';
    const Term* cur = &t;
    bool first = true;
    while (cur->kind() == Term::Kind::kApp && cur->name() == kConsSymbol &&
           cur->args().size() == 2) {
      if (!first) os << ',';
      print_term(cur->args()[0], os);
      first = false;
      cur = &cur->args()[1];
    }
    if (!(cur->kind() == Term::Kind::kApp && cur->name() == kNilSymbol &&
          cur->args().empty())) {
      os << '|';
      print_term(*cur, os);
    }
    os << ']';
    return;
  }
  os << t.name();
  if (!t.args().empty()) {
    os << '(';
    for (std::size_t i = 0; i < t.args().size(); ++i) {
      if (i > 0) os << ',';
      print_term(t.args()[i], os);
    }
    os << ')';
  }
}

std::size_t hash_combine(std::size_t seed, std::size_t v) {
  return seed ^ (v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

}  // namespace

std::string Term::str() const {
  std::ostringstream os;
  print_term(*this, os);
  return os.str();
}

std::size_t Term::hash() const {
  std::size_t h = hash_combine(static_cast<std::size_t>(kind_), 0x51ed);
  switch (kind_) {
    case Kind::kInt:
      h = hash_combine(h, std::hash<std::int64_t>()(int_));
      break;
    case Kind::kVar:
    case Kind::kApp:
      h = hash_combine(h, std::hash<std::string>()(sym_));
      break;
    case Kind::kArith:
      h = hash_combine(h, static_cast<std::size_t>(op_));
      break;
  }
  for (const Term& a : args_) h = hash_combine(h, a.hash());
  return h;
}

bool Atom::is_ground() const {
  return std::all_of(args.begin(), args.end(),
                     [](const Term& t) { return t.is_ground(); });
}

bool Atom::contains_arith() const {
  return std::any_of(args.begin(), args.end(),
                     [](const Term& t) { return t.contains_arith(); });
}

void Atom::collect_vars(std::vector<std::string>& out) const {
  for (const Term& t : args) t.collect_vars(out);
}

std::string Atom::str() const {
  std::ostringstream os;
  os << pred;
  if (!args.empty()) {
    os << '(';
    for (std::size_t i = 0; i < args.size(); ++i) {
      if (i > 0) os << ',';
      print_term(args[i], os);
    }
    os << ')';
  }
  return os.str();
}

bool Atom::operator<(const Atom& other) const {
  if (pred != other.pred) return pred < other.pred;
  return std::lexicographical_compare(args.begin(), args.end(),
                                      other.args.begin(), other.args.end());
}

std::size_t Atom::hash() const {
  std::size_t h = std::hash<std::string>()(pred);
  for (const Term& t : args) h = hash_combine(h, t.hash());
  return h;
}

bool Substitution::bind(const std::string& name, const Term& value) {
  auto [it, inserted] = map_.emplace(name, value);
  return inserted || it->second == value;
}

const Term* Substitution::lookup(const std::string& name) const {
  auto it = map_.find(name);
  return it == map_.end() ? nullptr : &it->second;
}

std::string Substitution::str() const {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (const auto& [name, value] : map_) {
    if (!first) os << ',';
    os << name << '/' << value.str();
    first = false;
  }
  os << '}';
  return os.str();
}

namespace {

bool match_term(const Term& pattern, const Term& ground, Substitution& s) {
  switch (pattern.kind()) {
    case Term::Kind::kArith:
      throw EvalError("non-matchable pattern: arithmetic in match position");
    case Term::Kind::kVar:
      return s.bind(pattern.name(), ground);
    case Term::Kind::kInt:
      return ground.kind() == Term::Kind::kInt &&
             ground.int_value() == pattern.int_value();
    case Term::Kind::kApp: {
      if (ground.kind() != Term::Kind::kApp || ground.name() != pattern.name() ||
          ground.args().size() != pattern.args().size())
        return false;
      for (std::size_t i = 0; i < pattern.args().size(); ++i)
        if (!match_term(pattern.args()[i], ground.args()[i], s)) return false;
      return true;
    }
  }
  return false;
}

}  // namespace

std::optional<Substitution> match_extend(const Atom& pattern, const Atom& ground,
                                         const Substitution& onto) {
  if (pattern.pred != ground.pred || pattern.args.size() != ground.args.size())
    return std::nullopt;
  Substitution s = onto;
  for (std::size_t i = 0; i < pattern.args.size(); ++i)
    if (!match_term(pattern.args[i], ground.args[i], s)) return std::nullopt;
  return s;
}

std::optional<Substitution> match(const Atom& pattern, const Atom& ground) {
  return match_extend(pattern, ground, Substitution());
}

namespace {

std::int64_t checked_arith(ArithOp op, std::int64_t a, std::int64_t b) {
  std::int64_t r = 0;
  switch (op) {
    case ArithOp::kAdd:
      if (__builtin_add_overflow(a, b, &r)) throw EvalError("integer overflow");
      return r;
    case ArithOp::kSub:
      if (__builtin_sub_overflow(a, b, &r)) throw EvalError("integer overflow");
      return r;
    case ArithOp::kMul:
      if (__builtin_mul_overflow(a, b, &r)) throw EvalError("integer overflow");
      return r;
    case ArithOp::kDiv:
      if (b == 0) throw EvalError("arithmetic fault: division by zero");
      if (a == INT64_MIN && b == -1) throw EvalError("integer overflow");
      return a / b;
    case ArithOp::kMod:
      if (b == 0) throw EvalError("arithmetic fault: mod by zero");
      if (a == INT64_MIN && b == -1) throw EvalError("integer overflow");
      return a % b;
  }
  throw EvalError("arithmetic fault");
}

}  // namespace

Term apply_eval(const Term& t, const Substitution& s) {
  switch (t.kind()) {
    case Term::Kind::kInt:
      return t;
    case Term::Kind::kVar: {
      const Term* bound = s.lookup(t.name());
      if (bound == nullptr) throw EvalError("unbound variable: " + t.name());
      return *bound;
    }
    case Term::Kind::kApp: {
      std::vector<Term> args;
      args.reserve(t.args().size());
      for (const Term& a : t.args()) args.push_back(apply_eval(a, s));
      return Term::app(t.name(), std::move(args));
    }
    case Term::Kind::kArith: {
      Term lhs = apply_eval(t.lhs(), s);
      Term rhs = apply_eval(t.rhs(), s);
      if (lhs.kind() != Term::Kind::kInt || rhs.kind() != Term::Kind::kInt)
        throw EvalError("arithmetic fault: non-integer operand");
      return Term::integer(checked_arith(t.op(), lhs.int_value(), rhs.int_value()));
    }
  }
  throw EvalError("arithmetic fault");
}

Atom apply_eval(const Atom& a, const Substitution& s) {
  Atom out;
  out.pred = a.pred;
  out.args.reserve(a.args.size());
  for (const Term& t : a.args) out.args.push_back(apply_eval(t, s));
  return out;
}

std::int64_t eval_int(const Term& t, const Substitution& s) {
  Term v = apply_eval(t, s);
  if (v.kind() != Term::Kind::kInt)
    throw EvalError("arithmetic fault: non-integer operand");
  return v.int_value();
}

AtomId AtomInterner::intern(const Atom& atom) {
  if (!atom.is_ground()) throw EvalError("non-ground atom: " + atom.str());
  auto it = index_.find(atom);
  if (it != index_.end()) return it->second;
  AtomId id = static_cast<AtomId>(atoms_.size());
  atoms_.push_back(atom);
  index_.emplace(atom, id);
  return id;
}

std::optional<AtomId> AtomInterner::find(const Atom& atom) const {
  auto it = index_.find(atom);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

}  // namespace folip
