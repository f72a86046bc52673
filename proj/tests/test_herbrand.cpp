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

#include <random>

#include "doctest.h"
#include "folip/errors.hpp"
#include "folip/parser.hpp"
#include "folip/term.hpp"

using namespace folip;

namespace {

Atom atom(const std::string& text) { return parse_atom_text(text); }

Term random_ground_term(std::mt19937& rng, int depth) {
  static const char* symbols[] = {"a", "bob", "f", "g", "cb", "jim_2"};
  std::uniform_int_distribution<int> pick(0, depth <= 0 ? 1 : 3);
  switch (pick(rng)) {
    case 0:
      return Term::integer(std::uniform_int_distribution<std::int64_t>(-50, 50)(rng));
    case 1:
      return Term::app(symbols[std::uniform_int_distribution<int>(0, 5)(rng)]);
    case 2: {
      int arity = std::uniform_int_distribution<int>(1, 3)(rng);
      std::vector<Term> args;
      for (int i = 0; i < arity; ++i) args.push_back(random_ground_term(rng, depth - 1));
      return Term::app(symbols[std::uniform_int_distribution<int>(2, 5)(rng)],
                       std::move(args));
    }
    default: {
      int len = std::uniform_int_distribution<int>(0, 3)(rng);
      std::vector<Term> items;
      for (int i = 0; i < len; ++i) items.push_back(random_ground_term(rng, depth - 1));
      return Term::list(std::move(items));
    }
  }
}

}  // namespace

TEST_CASE("interning is idempotent and injective") {
  AtomInterner table;
  AtomId a = table.intern(atom("male(bob)"));
  AtomId b = table.intern(atom("male(bob)"));
  CHECK(a == b);

  AtomId c = table.intern(atom("parent(bob,jim)"));
  AtomId d = table.intern(atom("parent(jim,bob)"));
  CHECK(c != d);
  CHECK(table.size() == 3);
}

TEST_CASE("interned atoms print canonically on reverse lookup") {
  AtomInterner table;
  AtomId id = table.intern(atom("f(3,[2,4])"));
  CHECK(table.atom(id).str() == "f(3,[2,4])");
}

TEST_CASE("interning a non-ground atom is an error") {
  AtomInterner table;
  CHECK_THROWS_WITH_AS(table.intern(atom("male(X)")),
                       doctest::Contains("non-ground atom"), EvalError);
}

TEST_CASE("ids are dense and monotone in creation order") {
  AtomInterner table;
  CHECK(table.intern(atom("p(1)")) == 0);
  CHECK(table.intern(atom("p(2)")) == 1);
  CHECK(table.intern(atom("p(1)")) == 0);
  CHECK(table.intern(atom("p(3)")) == 2);
}

TEST_CASE("match binds variables left to right") {
  auto s = match(atom("parent(X,Y)"), atom("parent(bob,jim)"));
  REQUIRE(s.has_value());
  CHECK(s->str() == "{X/bob,Y/jim}");
}

TEST_CASE("match fails on repeated-variable disagreement") {
  CHECK_FALSE(match(atom("parent(X,X)"), atom("parent(bob,jim)")).has_value());
  CHECK(match(atom("parent(X,X)"), atom("parent(bob,bob)")).has_value());
}

TEST_CASE("match fails on predicate or arity mismatch") {
  CHECK_FALSE(match(atom("male(X)"), atom("parent(bob,jim)")).has_value());
  CHECK_FALSE(match(atom("parent(X)"), atom("parent(bob,jim)")).has_value());
}

TEST_CASE("match rejects arithmetic in the pattern") {
  CHECK_THROWS_WITH_AS(match(atom("f(N+1,L)"), atom("f(3,[])")),
                       doctest::Contains("non-matchable pattern"), EvalError);
}

TEST_CASE("match on structured arguments descends into lists") {
  auto s = match(atom("f(X,[H|T])"), atom("f(3,[2,4])"));
  REQUIRE(s.has_value());
  CHECK(s->lookup("H")->str() == "2");
  CHECK(s->lookup("T")->str() == "[4]");
}

TEST_CASE("apply_eval folds arithmetic inside term positions") {
  Substitution s;
  s.bind("N", Term::integer(2));
  s.bind("L", parse_term_text("[5]"));
  Atom out = apply_eval(parse_atom_text("f(N+1,[N+1|L])"), s);
  CHECK(out.str() == "f(3,[3,5])");
}

TEST_CASE("apply_eval substitutes plain variables") {
  Substitution s;
  s.bind("N", Term::integer(4));
  s.bind("L", parse_term_text("[7]"));
  CHECK(apply_eval(parse_atom_text("cb(N,L)"), s).str() == "cb(4,[7])");
}

TEST_CASE("apply_eval evaluates mod") {
  Substitution s;
  s.bind("X", Term::integer(9));
  CHECK(apply_eval(parse_atom_text("g(X mod 3)"), s).str() == "g(0)");
}

TEST_CASE("apply_eval errors") {
  Substitution empty;
  CHECK_THROWS_WITH_AS(apply_eval(parse_term_text("f(X)"), empty),
                       doctest::Contains("unbound variable"), EvalError);

  Substitution zero;
  zero.bind("X", Term::integer(0));
  CHECK_THROWS_WITH_AS(apply_eval(parse_term_text("1/X"), zero),
                       doctest::Contains("arithmetic fault"), EvalError);
  CHECK_THROWS_WITH_AS(apply_eval(parse_term_text("1 mod X"), zero),
                       doctest::Contains("arithmetic fault"), EvalError);

  Substitution big;
  big.bind("X", Term::integer(INT64_MAX));
  CHECK_THROWS_WITH_AS(apply_eval(parse_term_text("X+1"), big),
                       doctest::Contains("integer overflow"), EvalError);
}

TEST_CASE("ground terms round-trip through canonical text") {
  std::mt19937 rng(20260810);
  for (int i = 0; i < 500; ++i) {
    Term t = random_ground_term(rng, 4);
    Term back = parse_term_text(t.str());
    CHECK(back == t);
  }
}

TEST_CASE("match then apply_eval reproduces the ground atom") {
  std::mt19937 rng(42);
  for (int i = 0; i < 200; ++i) {
    std::vector<Term> args = {random_ground_term(rng, 3), random_ground_term(rng, 3)};
    Atom ground{"q", args};
    Atom pattern = parse_atom_text("q(X,Y)");
    auto s = match(pattern, ground);
    REQUIRE(s.has_value());
    CHECK(apply_eval(pattern, *s) == ground);
  }
}

TEST_CASE("list sugar prints with tails") {
  Term t = Term::cons(Term::integer(1), Term::cons(Term::integer(2), Term::var("T")));
  CHECK(t.str() == "[1,2|T]");
  CHECK(parse_term_text("[1,2|T]") == t);
  CHECK(parse_term_text("[]").str() == "[]");
}
