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

#include "folip/parser.hpp"

#include <cctype>
#include <map>
#include <set>
#include <sstream>

#include "folip/errors.hpp"

namespace folip {

std::string Diagnostic::str() const {
  std::ostringstream os;
  os << "line " << line << ':' << col << ": " << message;
  return os.str();
}

namespace {

enum class Tok {
  kIdent,
  kVar,
  kInt,
  kFloat,
  kString,
  kLParen,
  kRParen,
  kLBracket,
  kRBracket,
  kLBrace,
  kRBrace,
  kComma,
  kBar,
  kDot,
  kColon,
  kColonDash,
  kBang,
  kEq,
  kNe,
  kLt,
  kGt,
  kLe,
  kGe,
  kPlus,
  kMinus,
  kStar,
  kSlash,
  kEnd,
};

struct Token {
  Tok kind = Tok::kEnd;
  std::string text;
  std::int64_t int_value = 0;
  double float_value = 0.0;
  int line = 1;
  int col = 1;
};

class ParseError {
 public:
  ParseError(int line, int col, std::string message)
      : line(line), col(col), message(std::move(message)) {}
  int line;
  int col;
  std::string message;
};

class Lexer {
 public:
  explicit Lexer(const std::string& text) : text_(text) {}

  std::vector<Token> run() {
    std::vector<Token> out;
    for (;;) {
      Token t = next();
      out.push_back(t);
      if (t.kind == Tok::kEnd) break;
    }
    return out;
  }

 private:
  Token next() {
    skip_space();
    Token t;
    t.line = line_;
    t.col = col_;
    if (pos_ >= text_.size()) {
      t.kind = Tok::kEnd;
      return t;
    }
    char c = text_[pos_];
    if (std::islower(static_cast<unsigned char>(c))) {
      t.kind = Tok::kIdent;
      t.text = take_word();
      return t;
    }
    if (std::isupper(static_cast<unsigned char>(c)) || c == '_') {
      t.kind = Tok::kVar;
      t.text = take_word();
      return t;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return take_number(t);
    if (c == '"') return take_string(t);
    advance();
    switch (c) {
      case '(':
        t.kind = Tok::kLParen;
        return t;
      case ')':
        t.kind = Tok::kRParen;
        return t;
      case '[':
        t.kind = Tok::kLBracket;
        return t;
      case ']':
        t.kind = Tok::kRBracket;
        return t;
      case '{':
        t.kind = Tok::kLBrace;
        return t;
      case '}':
        t.kind = Tok::kRBrace;
        return t;
      case ',':
        t.kind = Tok::kComma;
        return t;
      case '|':
        t.kind = Tok::kBar;
        return t;
      case '.':
        t.kind = Tok::kDot;
        return t;
      case ':':
        if (peek() == '-') {
          advance();
          t.kind = Tok::kColonDash;
        } else {
          t.kind = Tok::kColon;
        }
        return t;
      case '!':
        if (peek() == '=') {
          advance();
          t.kind = Tok::kNe;
        } else {
          t.kind = Tok::kBang;
        }
        return t;
      case '=':
        if (peek() == '<') {
          advance();
          t.kind = Tok::kLe;
        } else {
          t.kind = Tok::kEq;
        }
        return t;
      case '<':
        t.kind = Tok::kLt;
        return t;
      case '>':
        if (peek() == '=') {
          advance();
          t.kind = Tok::kGe;
        } else {
          t.kind = Tok::kGt;
        }
        return t;
      case '+':
        t.kind = Tok::kPlus;
        return t;
      case '-':
        t.kind = Tok::kMinus;
        return t;
      case '*':
        t.kind = Tok::kStar;
        return t;
      case '/':
        t.kind = Tok::kSlash;
        return t;
      default:
        throw ParseError(t.line, t.col, std::string("unexpected character '") + c + "'");
    }
  }

  void skip_space() {
    for (;;) {
      while (pos_ < text_.size() &&
             std::isspace(static_cast<unsigned char>(text_[pos_])))
        advance();
      if (pos_ < text_.size() && text_[pos_] == '%') {
        while (pos_ < text_.size() && text_[pos_] != '\n') advance();
        continue;
      }
      return;
    }
  }

  std::string take_word() {
    std::size_t start = pos_;
    while (pos_ < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[pos_])) ||
            text_[pos_] == '_'))
      advance();
    return text_.substr(start, pos_ - start);
  }

  Token take_number(Token t) {
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
      advance();
    bool is_float = false;
    if (pos_ + 1 < text_.size() && text_[pos_] == '.' &&
        std::isdigit(static_cast<unsigned char>(text_[pos_ + 1]))) {
      is_float = true;
      advance();
      while (pos_ < text_.size() &&
             std::isdigit(static_cast<unsigned char>(text_[pos_])))
        advance();
    }
    if (pos_ < text_.size() && (text_[pos_] == 'e' || text_[pos_] == 'E')) {
      std::size_t mark = pos_;
      advance();
      if (pos_ < text_.size() && (text_[pos_] == '+' || text_[pos_] == '-')) advance();
      if (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
        is_float = true;
        while (pos_ < text_.size() &&
               std::isdigit(static_cast<unsigned char>(text_[pos_])))
          advance();
      } else {
        pos_ = mark;  // 'e' begins an identifier, not an exponent
      }
    }
    std::string digits = text_.substr(start, pos_ - start);
    if (is_float) {
      t.kind = Tok::kFloat;
      t.float_value = std::stod(digits);
    } else {
      t.kind = Tok::kInt;
      try {
        t.int_value = std::stoll(digits);
      } catch (const std::out_of_range&) {
        throw ParseError(t.line, t.col, "integer literal out of range");
      }
    }
    t.text = digits;
    return t;
  }

  Token take_string(Token t) {
    advance();  // opening quote
    std::size_t start = pos_;
    while (pos_ < text_.size() && text_[pos_] != '"' && text_[pos_] != '\n') advance();
    if (pos_ >= text_.size() || text_[pos_] != '"')
      throw ParseError(t.line, t.col, "unterminated string");
    t.kind = Tok::kString;
    t.text = text_.substr(start, pos_ - start);
    advance();
    return t;
  }

  char peek() const { return pos_ + 1 <= text_.size() && pos_ < text_.size() ? text_[pos_] : '\0'; }

  void advance() {
    if (pos_ < text_.size()) {
      if (text_[pos_] == '\n') {
        ++line_;
        col_ = 1;
      } else {
        ++col_;
      }
      ++pos_;
    }
  }

  const std::string& text_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int col_ = 1;
};

const std::set<std::string> kReservedWords = {"type", "guard", "cost", "clause", "mod"};

class Parser {
 public:
  explicit Parser(std::vector<Token> tokens) : toks_(std::move(tokens)) {}

  const Token& cur() const { return toks_[at_]; }
  const Token& ahead(std::size_t k = 1) const {
    return toks_[std::min(at_ + k, toks_.size() - 1)];
  }
  Token eat() { return toks_[at_ < toks_.size() - 1 ? at_++ : at_]; }

  Token expect(Tok kind, const std::string& what) {
    if (cur().kind != kind)
      throw ParseError(cur().line, cur().col, "expected " + what);
    return eat();
  }

  bool accept(Tok kind) {
    if (cur().kind != kind) return false;
    eat();
    return true;
  }

  // expr := mulexp { ('+'|'-') mulexp }
  Term parse_expr() {
    Term t = parse_mulexp();
    for (;;) {
      if (accept(Tok::kPlus))
        t = Term::arith(ArithOp::kAdd, std::move(t), parse_mulexp());
      else if (accept(Tok::kMinus))
        t = Term::arith(ArithOp::kSub, std::move(t), parse_mulexp());
      else
        return t;
    }
  }

  Term parse_mulexp() {
    Term t = parse_primary();
    for (;;) {
      if (accept(Tok::kStar)) {
        t = Term::arith(ArithOp::kMul, std::move(t), parse_primary());
      } else if (accept(Tok::kSlash)) {
        t = Term::arith(ArithOp::kDiv, std::move(t), parse_primary());
      } else if (cur().kind == Tok::kIdent && cur().text == "mod") {
        eat();
        t = Term::arith(ArithOp::kMod, std::move(t), parse_primary());
      } else {
        return t;
      }
    }
  }

  Term parse_primary() {
    const Token& t = cur();
    switch (t.kind) {
      case Tok::kInt: {
        Token tok = eat();
        return Term::integer(tok.int_value);
      }
      case Tok::kVar: {
        Token tok = eat();
        return Term::var(tok.text);
      }
      case Tok::kMinus: {
        eat();
        Term inner = parse_primary();
        if (inner.kind() == Term::Kind::kInt) return Term::integer(-inner.int_value());
        return Term::arith(ArithOp::kSub, Term::integer(0), std::move(inner));
      }
      case Tok::kIdent: {
        Token tok = eat();
        if (accept(Tok::kLParen)) {
          std::vector<Term> args;
          args.push_back(parse_expr());
          while (accept(Tok::kComma)) args.push_back(parse_expr());
          expect(Tok::kRParen, "')'");
          return Term::app(tok.text, std::move(args));
        }
        return Term::app(tok.text);
      }
      case Tok::kLBracket: {
        eat();
        if (accept(Tok::kRBracket)) return Term::nil();
        std::vector<Term> items;
        items.push_back(parse_expr());
        while (accept(Tok::kComma)) items.push_back(parse_expr());
        Term tail = Term::nil();
        if (accept(Tok::kBar)) tail = parse_expr();
        expect(Tok::kRBracket, "']'");
        for (auto it = items.rbegin(); it != items.rend(); ++it)
          tail = Term::cons(std::move(*it), std::move(tail));
        return tail;
      }
      case Tok::kLParen: {
        eat();
        Term inner = parse_expr();
        expect(Tok::kRParen, "')'");
        return inner;
      }
      default:
        throw ParseError(t.line, t.col, "expected a term");
    }
  }

  Atom parse_atom() {
    Token head = expect(Tok::kIdent, "a predicate name");
    if (kReservedWords.count(head.text))
      throw ParseError(head.line, head.col, "reserved word: " + head.text);
    Atom a;
    a.pred = head.text;
    if (accept(Tok::kLParen)) {
      a.args.push_back(parse_expr());
      while (accept(Tok::kComma)) a.args.push_back(parse_expr());
      expect(Tok::kRParen, "')'");
    }
    return a;
  }

  std::optional<CmpOp> accept_cmp() {
    switch (cur().kind) {
      case Tok::kEq:
        eat();
        return CmpOp::kEq;
      case Tok::kNe:
        eat();
        return CmpOp::kNe;
      case Tok::kLt:
        eat();
        return CmpOp::kLt;
      case Tok::kGt:
        eat();
        return CmpOp::kGt;
      case Tok::kLe:
        eat();
        return CmpOp::kLe;
      case Tok::kGe:
        eat();
        return CmpOp::kGe;
      default:
        return std::nullopt;
    }
  }

  GuardItem parse_guard_item() {
    Token start = cur();
    Term lhs = parse_expr();
    if (std::optional<CmpOp> op = accept_cmp()) {
      Term rhs = parse_expr();
      return GuardItem::builtin(*op, std::move(lhs), std::move(rhs));
    }
    if (lhs.kind() != Term::Kind::kApp)
      throw ParseError(start.line, start.col, "expected a guard call or comparison");
    return GuardItem::call(lhs.name(), lhs.args());
  }

  GuardConj parse_guard_conj(Tok terminator) {
    GuardConj conj;
    conj.push_back(parse_guard_item());
    while (accept(Tok::kComma)) conj.push_back(parse_guard_item());
    if (cur().kind != terminator)
      throw ParseError(cur().line, cur().col, "unterminated guard conjunction");
    return conj;
  }

  // cost expressions: numeric constants, pattern variables, + - * /
  std::shared_ptr<const CostExpr> parse_cost_expr() { return parse_cost_add(); }

  std::shared_ptr<const CostExpr> parse_cost_add() {
    auto t = parse_cost_mul();
    for (;;) {
      if (accept(Tok::kPlus))
        t = CostExpr::bin(CostExpr::Op::kAdd, t, parse_cost_mul());
      else if (accept(Tok::kMinus))
        t = CostExpr::bin(CostExpr::Op::kSub, t, parse_cost_mul());
      else
        return t;
    }
  }

  std::shared_ptr<const CostExpr> parse_cost_mul() {
    auto t = parse_cost_primary();
    for (;;) {
      if (accept(Tok::kStar))
        t = CostExpr::bin(CostExpr::Op::kMul, t, parse_cost_primary());
      else if (accept(Tok::kSlash))
        t = CostExpr::bin(CostExpr::Op::kDiv, t, parse_cost_primary());
      else
        return t;
    }
  }

  std::shared_ptr<const CostExpr> parse_cost_primary() {
    const Token& t = cur();
    switch (t.kind) {
      case Tok::kInt: {
        Token tok = eat();
        return CostExpr::constant(static_cast<double>(tok.int_value));
      }
      case Tok::kFloat: {
        Token tok = eat();
        return CostExpr::constant(tok.float_value);
      }
      case Tok::kVar: {
        Token tok = eat();
        return CostExpr::var(tok.text);
      }
      case Tok::kMinus: {
        eat();
        return CostExpr::bin(CostExpr::Op::kSub, CostExpr::constant(0.0),
                             parse_cost_primary());
      }
      case Tok::kLParen: {
        eat();
        auto inner = parse_cost_expr();
        expect(Tok::kRParen, "')'");
        return inner;
      }
      default:
        throw ParseError(t.line, t.col, "expected a cost expression");
    }
  }

  std::size_t at_ = 0;
  std::vector<Token> toks_;
};

struct RawGuardStmt {
  Token where;
  std::string name;
  std::vector<Term> head;
  bool has_body = false;
  GuardConj body;
};

class ProblemBuilder {
 public:
  explicit ProblemBuilder(const std::string& text) : text_(text) {}

  ParseResult run() {
    ParseResult result;
    try {
      Lexer lexer(text_);
      Parser parser(lexer.run());
      parse_statements(parser);
    } catch (const ParseError& e) {
      diag(e.line, e.col, e.message);
    }
    validate();
    result.diagnostics = std::move(diags_);
    if (result.diagnostics.empty()) result.problem = std::move(problem_);
    return result;
  }

 private:
  void diag(int line, int col, const std::string& message) {
    diags_.push_back(Diagnostic{line, col, message});
  }

  void parse_statements(Parser& p) {
    while (p.cur().kind != Tok::kEnd) {
      Token head = p.cur();
      if (head.kind != Tok::kIdent)
        throw ParseError(head.line, head.col, "expected a declaration");
      if (head.text == "type")
        parse_type(p);
      else if (head.text == "guard")
        parse_guard(p);
      else if (head.text == "cost")
        parse_cost(p);
      else if (head.text == "clause")
        parse_clause(p);
      else
        throw ParseError(head.line, head.col,
                         "expected 'type', 'guard', 'cost' or 'clause'");
    }
  }

  void parse_type(Parser& p) {
    p.eat();
    Token name = p.expect(Tok::kIdent, "a predicate name");
    if (kReservedWords.count(name.text))
      throw ParseError(name.line, name.col, "reserved word: " + name.text);
    p.expect(Tok::kSlash, "'/'");
    Token arity = p.expect(Tok::kInt, "an arity");
    p.expect(Tok::kDot, "'.'");
    problem_.signatures[name.text].insert(static_cast<int>(arity.int_value));
  }

  void parse_guard(Parser& p) {
    Token kw = p.eat();
    Token name = p.expect(Tok::kIdent, "a guard name");
    if (kReservedWords.count(name.text))
      throw ParseError(name.line, name.col, "reserved word: " + name.text);
    RawGuardStmt stmt;
    stmt.where = kw;
    stmt.name = name.text;
    if (p.accept(Tok::kLParen)) {
      stmt.head.push_back(p.parse_expr());
      while (p.accept(Tok::kComma)) stmt.head.push_back(p.parse_expr());
      p.expect(Tok::kRParen, "')'");
    }
    if (p.accept(Tok::kColonDash)) {
      stmt.has_body = true;
      stmt.body = p.parse_guard_conj(Tok::kDot);
    }
    p.expect(Tok::kDot, "'.'");
    guard_stmts_.push_back(std::move(stmt));
  }

  void parse_cost(Parser& p) {
    Token kw = p.eat();
    Atom pattern = p.parse_atom();
    p.expect(Tok::kEq, "'='");
    auto expr = p.parse_cost_expr();
    p.expect(Tok::kDot, "'.'");
    if (pattern.contains_arith()) {
      diag(kw.line, kw.col, "non-matchable pattern: arithmetic in cost pattern " +
                                pattern.str());
      return;
    }
    problem_.cost_rules.push_back(CostRule{std::move(pattern), std::move(expr)});
    cost_rule_pos_.push_back({kw.line, kw.col});
  }

  void parse_clause(Parser& p) {
    Token kw = p.eat();
    Token name = p.expect(Tok::kString, "a clause name string");
    p.expect(Tok::kColon, "':'");
    FoClause clause;
    clause.name = name.text;
    do {
      ClauseItem item;
      if (p.accept(Tok::kBang)) {
        item.kind = ClauseItem::Kind::kNegLit;
        item.atom = p.parse_atom();
      } else if (p.cur().kind == Tok::kIdent && p.cur().text == "guard") {
        p.eat();
        p.expect(Tok::kLBrace, "'{'");
        item.kind = ClauseItem::Kind::kGuard;
        item.guard = p.parse_guard_conj(Tok::kRBrace);
        p.expect(Tok::kRBrace, "'}'");
      } else {
        item.kind = ClauseItem::Kind::kPosLit;
        item.atom = p.parse_atom();
      }
      clause.body.push_back(std::move(item));
    } while (p.accept(Tok::kComma));
    p.expect(Tok::kDot, "'.'");
    clause_pos_.push_back({kw.line, kw.col});
    problem_.clauses.push_back(std::move(clause));
  }

  void validate() {
    build_guards();
    check_guard_rules();
    check_guard_cycles();
    for (std::size_t i = 0; i < problem_.clauses.size(); ++i)
      check_clause(problem_.clauses[i], clause_pos_[i]);
    check_clause_names();
    check_cost_rules();
  }

  void build_guards() {
    for (RawGuardStmt& stmt : guard_stmts_) {
      int arity = static_cast<int>(stmt.head.size());
      auto key = std::make_pair(stmt.name, arity);
      if (problem_.signatures.count(stmt.name) &&
          problem_.signatures[stmt.name].count(arity)) {
        diag(stmt.where.line, stmt.where.col,
             "predicate declared both as type and guard: " + stmt.name);
        continue;
      }
      GuardDef& def = problem_.guards[key];
      def.name = stmt.name;
      def.arity = arity;
      if (!stmt.has_body) {
        bool ground = true;
        for (const Term& t : stmt.head) ground = ground && t.is_ground();
        if (!ground) {
          diag(stmt.where.line, stmt.where.col,
               "non-ground guard fact: " + stmt.name);
          continue;
        }
        def.facts.push_back(stmt.head);
      } else {
        for (const Term& t : stmt.head) {
          if (t.kind() != Term::Kind::kVar && !t.is_ground()) {
            diag(stmt.where.line, stmt.where.col,
                 "guard rule head arguments must be variables or ground: " +
                     stmt.name);
          }
        }
        def.rules.push_back(GuardRule{stmt.head, stmt.body});
      }
    }
  }

  void check_conj_calls(const GuardConj& conj, int line, int col) {
    for (const GuardItem& item : conj) {
      if (item.kind != GuardItem::Kind::kCall) continue;
      auto key = std::make_pair(item.callee, static_cast<int>(item.args.size()));
      if (!problem_.guards.count(key))
        diag(line, col,
             "undefined guard: " + item.callee + "/" +
                 std::to_string(item.args.size()));
    }
  }

  void check_guard_rules() {
    for (const RawGuardStmt& stmt : guard_stmts_) {
      if (stmt.has_body)
        check_conj_calls(stmt.body, stmt.where.line, stmt.where.col);
    }
  }

  void check_guard_cycles() {
    // DFS over the guard call graph; any back edge is recursion.
    std::map<std::pair<std::string, int>, int> state;  // 0 new, 1 open, 2 done
    std::function<bool(const std::pair<std::string, int>&)> visit =
        [&](const std::pair<std::string, int>& key) -> bool {
      int& st = state[key];
      if (st == 1) return false;
      if (st == 2) return true;
      st = 1;
      auto it = problem_.guards.find(key);
      if (it != problem_.guards.end()) {
        for (const GuardRule& rule : it->second.rules) {
          for (const GuardItem& item : rule.body) {
            if (item.kind != GuardItem::Kind::kCall) continue;
            if (!visit({item.callee, static_cast<int>(item.args.size())})) return false;
          }
        }
      }
      st = 2;
      return true;
    };
    for (const auto& [key, def] : problem_.guards) {
      if (!visit(key)) {
        diag(0, 0, "recursive guard: " + key.first);
        return;
      }
    }
  }

  bool declared(const Atom& a) const {
    auto it = problem_.signatures.find(a.pred);
    return it != problem_.signatures.end() &&
           it->second.count(static_cast<int>(a.args.size()));
  }

  static void collect_conj_vars(const GuardConj& conj, std::set<std::string>& out) {
    std::vector<std::string> vars;
    for (const GuardItem& item : conj) {
      if (item.kind == GuardItem::Kind::kBuiltin) {
        item.lhs.collect_vars(vars);
        item.rhs.collect_vars(vars);
      } else {
        for (const Term& t : item.args) t.collect_vars(vars);
      }
    }
    out.insert(vars.begin(), vars.end());
  }

  void check_clause(FoClause& clause, std::pair<int, int> pos) {
    auto [line, col] = pos;
    if (clause.body.empty()) {
      diag(line, col, "empty clause: " + clause.name);
      return;
    }
    std::set<std::string> bound;
    bool seen_pos = false;
    for (ClauseItem& item : clause.body) {
      switch (item.kind) {
        case ClauseItem::Kind::kNegLit: {
          if (seen_pos)
            diag(line, col,
                 "positive literal before negative literal in clause " +
                     clause.name);
          if (item.atom.contains_arith())
            diag(line, col, "non-matchable pattern: arithmetic in negative literal " +
                                item.atom.str());
          if (!declared(item.atom))
            diag(line, col, "undeclared predicate: " + item.atom.pred + "/" +
                                std::to_string(item.atom.args.size()));
          std::vector<std::string> vars;
          item.atom.collect_vars(vars);
          item.generator = false;
          for (const std::string& v : vars) {
            if (!bound.count(v)) item.generator = true;
            bound.insert(v);
          }
          break;
        }
        case ClauseItem::Kind::kGuard: {
          check_conj_calls(item.guard, line, col);
          collect_conj_vars(item.guard, bound);
          break;
        }
        case ClauseItem::Kind::kPosLit: {
          seen_pos = true;
          if (!declared(item.atom))
            diag(line, col, "undeclared predicate: " + item.atom.pred + "/" +
                                std::to_string(item.atom.args.size()));
          std::vector<std::string> vars;
          item.atom.collect_vars(vars);
          for (const std::string& v : vars) {
            if (!bound.count(v)) {
              diag(line, col, "ungrounded positive literal " + item.atom.str() +
                                  " in clause " + clause.name + " (variable " + v +
                                  ")");
              break;
            }
          }
          break;
        }
      }
    }
  }

  void check_clause_names() {
    std::set<std::string> seen;
    for (std::size_t i = 0; i < problem_.clauses.size(); ++i) {
      if (!seen.insert(problem_.clauses[i].name).second)
        diag(clause_pos_[i].first, clause_pos_[i].second,
             "duplicate clause name: " + problem_.clauses[i].name);
    }
  }

  void check_cost_rules() {
    for (std::size_t i = 0; i < problem_.cost_rules.size(); ++i) {
      const CostRule& rule = problem_.cost_rules[i];
      if (!declared(rule.pattern))
        diag(cost_rule_pos_[i].first, cost_rule_pos_[i].second,
             "undeclared predicate: " + rule.pattern.pred + "/" +
                 std::to_string(rule.pattern.args.size()));
    }
  }

  const std::string& text_;
  Problem problem_;
  std::vector<Diagnostic> diags_;
  std::vector<RawGuardStmt> guard_stmts_;
  std::vector<std::pair<int, int>> clause_pos_;
  std::vector<std::pair<int, int>> cost_rule_pos_;
};

}  // namespace

ParseResult parse_problem(const std::string& text) {
  return ProblemBuilder(text).run();
}

std::string print_problem(const Problem& p) {
  std::ostringstream os;
  for (const auto& [name, arities] : p.signatures)
    for (int arity : arities) os << "type " << name << "/" << arity << ".\n";
  for (const auto& [key, def] : p.guards) {
    for (const std::vector<Term>& fact : def.facts) {
      os << "guard " << Atom{def.name, fact}.str() << ".\n";
    }
    for (const GuardRule& rule : def.rules) {
      os << "guard " << Atom{def.name, rule.head}.str() << " :- ";
      for (std::size_t i = 0; i < rule.body.size(); ++i) {
        if (i > 0) os << ", ";
        os << rule.body[i].str();
      }
      os << ".\n";
    }
  }
  for (const CostRule& rule : p.cost_rules)
    os << "cost " << rule.pattern.str() << " = " << rule.expr->str() << ".\n";
  for (const FoClause& clause : p.clauses) {
    os << "clause \"" << clause.name << "\": ";
    for (std::size_t i = 0; i < clause.body.size(); ++i) {
      const ClauseItem& item = clause.body[i];
      if (i > 0) os << ", ";
      switch (item.kind) {
        case ClauseItem::Kind::kNegLit:
          os << '!' << item.atom.str();
          break;
        case ClauseItem::Kind::kPosLit:
          os << item.atom.str();
          break;
        case ClauseItem::Kind::kGuard:
          os << "guard{";
          for (std::size_t j = 0; j < item.guard.size(); ++j) {
            if (j > 0) os << ", ";
            os << item.guard[j].str();
          }
          os << '}';
          break;
      }
    }
    os << ".\n";
  }
  return os.str();
}

namespace {

Parser make_single_parser(const std::string& text) {
  Lexer lexer(text);
  return Parser(lexer.run());
}

}  // namespace

Term parse_term_text(const std::string& text) {
  try {
    Parser p = make_single_parser(text);
    Term t = p.parse_expr();
    if (p.cur().kind != Tok::kEnd)
      throw ParseError(p.cur().line, p.cur().col, "trailing input after term");
    return t;
  } catch (const ParseError& e) {
    throw Error("parse error at " + std::to_string(e.line) + ":" +
                std::to_string(e.col) + ": " + e.message);
  }
}

Atom parse_atom_text(const std::string& text) {
  try {
    Parser p = make_single_parser(text);
    Atom a = p.parse_atom();
    if (p.cur().kind != Tok::kEnd)
      throw ParseError(p.cur().line, p.cur().col, "trailing input after atom");
    return a;
  } catch (const ParseError& e) {
    throw Error("parse error at " + std::to_string(e.line) + ":" +
                std::to_string(e.col) + ": " + e.message);
  }
}

std::vector<Atom> parse_model_file(const std::string& text) {
  std::vector<Atom> atoms;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::string stripped = line.substr(0, line.find('%'));
    std::size_t begin = stripped.find_first_not_of(" \t\r");
    if (begin == std::string::npos) continue;
    std::size_t end = stripped.find_last_not_of(" \t\r");
    stripped = stripped.substr(begin, end - begin + 1);
    Atom a;
    try {
      a = parse_atom_text(stripped);
    } catch (const Error& e) {
      throw Error("model line " + std::to_string(lineno) + ": " + e.what());
    }
    if (!a.is_ground())
      throw Error("model line " + std::to_string(lineno) + ": non-ground atom");
    atoms.push_back(std::move(a));
  }
  return atoms;
}

}  // namespace folip
