#include <catch2/catch_amalgamated.hpp>

#include "f0kit/gen.hpp"
#include "f0kit/term.hpp"

using namespace f0kit;

TEST_CASE("parse basic terms") {
  TermPtr t = parse_term("\\x. x");
  REQUIRE(t->kind == Term::Kind::Abs);
  REQUIRE(t->sub->kind == Term::Kind::Var);
  REQUIRE(t->sub->name == "x");

  TermPtr u = parse_term("\\x. (x) \\y. y");
  REQUIRE(u->kind == Term::Kind::Abs);
  REQUIRE(u->sub->kind == Term::Kind::App);
  REQUIRE(u->sub->sub->name == "x");
  REQUIRE(u->sub->arg->kind == Term::Kind::Abs);

  // Nested application spine with a trailing variable argument.
  TermPtr v = parse_term("\\n.\\x.\\z. (((n) \\y.x) \\x.x) a");
  REQUIRE(v->kind == Term::Kind::Abs);
  auto [head, args] = head_decompose(v->sub->sub->sub);
  REQUIRE(head->name == "n");
  REQUIRE(args.size() == 3);
  REQUIRE(args[2]->name == "a");
}

TEST_CASE("application is left-associative") {
  TermPtr t = parse_term("x y z");
  REQUIRE(t->kind == Term::Kind::App);
  REQUIRE(t->sub->kind == Term::Kind::App);
  REQUIRE(t->sub->sub->name == "x");
  REQUIRE(t->arg->name == "z");
}

TEST_CASE("parse errors carry positions") {
  REQUIRE_THROWS_AS(parse_term("\\x"), ParseError);
  REQUIRE_THROWS_AS(parse_term("(x"), ParseError);
  REQUIRE_THROWS_AS(parse_term("x )"), ParseError);
  REQUIRE_THROWS_AS(parse_term(""), ParseError);
}

TEST_CASE("free variables") {
  REQUIRE(free_term_vars(parse_term("\\x. x")).empty());
  auto fv = free_term_vars(parse_term("\\x. (x) alpha"));
  REQUIRE(fv == std::set<std::string>{"alpha"});
  auto fv2 = free_term_vars(parse_term("(x) y z"));
  REQUIRE(fv2 == std::set<std::string>{"x", "y", "z"});
}

TEST_CASE("substitution") {
  // x[u/x] = u
  REQUIRE(alpha_eq(subst_term(var("x"), "x", parse_term("\\z. z")), parse_term("\\z. z")));
  // capture avoidance: (\y. x)[y/x] renames the binder
  TermPtr r = subst_term(parse_term("\\y. x"), "x", var("y"));
  REQUIRE(r->kind == Term::Kind::Abs);
  REQUIRE(r->name != "y");
  REQUIRE(r->sub->name == "y");
  // (x)x [\z.z/x]
  REQUIRE(alpha_eq(subst_term(parse_term("(x) x"), "x", parse_term("\\z. z")),
                   parse_term("(\\z. z) \\z. z")));
  // simultaneous substitution is not sequential
  TermPtr s = subst_term(parse_term("(x) y"), {{"x", var("y")}, {"y", var("x")}});
  REQUIRE(alpha_eq(s, parse_term("(y) x")));
}

TEST_CASE("free variables after substitution") {
  Gen gen(11);
  for (int i = 0; i < 200; ++i) {
    TermPtr t = gen.normal_term(gen.pick(1, 7), {"x", "y"});
    TermPtr u = gen.normal_term(gen.pick(1, 5), {"z", "w"});
    auto fv_t = free_term_vars(t);
    auto fv_r = free_term_vars(subst_term(t, "x", u));
    if (fv_t.count("x")) {
      auto expect = fv_t;
      expect.erase("x");
      for (auto& n : free_term_vars(u)) expect.insert(n);
      REQUIRE(fv_r == expect);
    } else {
      REQUIRE(fv_r == fv_t);
    }
  }
}

TEST_CASE("alpha equivalence") {
  REQUIRE(alpha_eq(parse_term("\\x. x"), parse_term("\\y. y")));
  REQUIRE_FALSE(alpha_eq(parse_term("\\x. \\y. x"), parse_term("\\a. \\b. b")));
  REQUIRE(alpha_eq(parse_term("\\x. \\y. (x) y"), parse_term("\\u. \\v. (u) v")));
  // free variables must match by name
  REQUIRE_FALSE(alpha_eq(var("x"), var("y")));
  // bound/free confusion
  REQUIRE_FALSE(alpha_eq(parse_term("\\x. x"), parse_term("\\x. y")));
}

TEST_CASE("printer never shadows and round-trips") {
  // \x. \x. x must print with distinct binders
  TermPtr t = abs("x", abs("x", var("x")));
  std::string s = print_term(t);
  REQUIRE(alpha_eq(parse_term(s), t));
  REQUIRE(s.find("x'") != std::string::npos);

  // a binder clashing with a free variable is renamed
  TermPtr u = abs("x", app(abs("y", var("y")), var("y")));
  REQUIRE(alpha_eq(parse_term(print_term(u)), u));
}

TEST_CASE("round trip on random normal terms") {
  Gen gen(23);
  for (int i = 0; i < 300; ++i) {
    TermPtr t = gen.normal_term(gen.pick(1, 9), {"a", "b"});
    REQUIRE(alpha_eq(parse_term(print_term(t)), t));
  }
}
