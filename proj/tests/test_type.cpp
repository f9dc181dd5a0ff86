#include <catch2/catch_amalgamated.hpp>

#include "f0kit/classify.hpp"
#include "f0kit/gen.hpp"
#include "f0kit/systems.hpp"
#include "f0kit/witnesses.hpp"

using namespace f0kit;

TEST_CASE("parse types") {
  REQUIRE(alpha_eq_type(parse_type("forall X. X -> X"), type_id()));
  REQUIRE(alpha_eq_type(parse_type("forall X. X -> (X -> X)"), type_bool()));
  REQUIRE(parse_type("O")->kind == Type::Kind::Atom);
  REQUIRE(parse_type("Q")->kind == Type::Kind::Var);  // undeclared name is a variable
  // arrow is right-associative
  TypePtr t = parse_type("X -> Y -> Z");
  REQUIRE(t->kind == Type::Kind::Arrow);
  REQUIRE(t->left->name == "X");
  REQUIRE(t->right->kind == Type::Kind::Arrow);
}

TEST_CASE("type sugar expands to the encodings") {
  REQUIRE(alpha_eq_type(parse_type("A /\\ B"), mk_product(tvar("A"), tvar("B"))));
  REQUIRE(alpha_eq_type(parse_type("A \\/ B"), mk_sum(tvar("A"), tvar("B"))));
  REQUIRE(alpha_eq_type(parse_type("List A"), mk_list(tvar("A"))));
  REQUIRE(alpha_eq_type(mk_product(tvar("A"), tvar("B")),
                        parse_type("forall X. (A -> (B -> X)) -> X")));
  REQUIRE(alpha_eq_type(mk_sum(tvar("A"), tvar("B")),
                        parse_type("forall X. (A -> X) -> ((B -> X) -> X)")));
  REQUIRE(alpha_eq_type(mk_list(tvar("A")),
                        parse_type("forall X. X -> ((A -> (X -> X)) -> X)")));
  // the quantified variable avoids the components
  TypePtr p = mk_product(tvar("X"), tvar("Y"));
  REQUIRE(p->name == "Z");
}

TEST_CASE("type substitution") {
  REQUIRE(alpha_eq_type(subst_type(tvar("X"), tvar("G"), "X"), tvar("G")));
  REQUIRE(alpha_eq_type(subst_type(parse_type("forall Y. Y -> X"), atom("O"), "X"),
                        parse_type("forall Y. Y -> O")));
  // bound occurrence untouched
  REQUIRE(alpha_eq_type(subst_type(type_id(), tvar("G"), "X"), type_id()));
  // capture avoidance
  TypePtr r = subst_type(parse_type("forall Y. Y -> X"), tvar("Y"), "X");
  REQUIRE(is_proper(r));
  REQUIRE(free_type_vars(r) == std::set<std::string>{"Y"});
}

TEST_CASE("proper and closed") {
  REQUIRE(is_proper(type_id()));
  REQUIRE(is_closed(type_id()));
  REQUIRE_FALSE(is_proper(parse_type("forall X. Y -> Y")));
  REQUIRE(is_proper(parse_type("forall Y. Y -> X")));
  REQUIRE_FALSE(is_closed(parse_type("forall Y. Y -> X")));
  // atoms do not count as free variables
  REQUIRE(is_closed(parse_type("O -> Bot")));
}

TEST_CASE("subst_type preserves properness") {
  Gen gen(5);
  for (int i = 0; i < 200; ++i) {
    TypePtr a = gen.proper_type_with_free("X", gen.pick(1, 8), {"Y"});
    TypePtr g = gen.proper_type(gen.pick(1, 5), {"Z", "W"});
    REQUIRE(is_proper(subst_type(a, g, "X")));
  }
}

TEST_CASE("polarity") {
  Polarity x = polarity(tvar("X"));
  REQUIRE(x.is_forall_positive);
  REQUIRE(x.is_forall_negative);
  REQUIRE(polarity(type_id()).is_forall_positive);
  REQUIRE(polarity(type_bool()).is_forall_positive);
  REQUIRE(polarity(type_nat()).is_forall_positive);
  REQUIRE_FALSE(polarity(type_d()).is_forall_positive);
  // a quantified type is never negative
  REQUIRE_FALSE(polarity(type_id()).is_forall_negative);
  // improper quantifier kills positivity
  REQUIRE_FALSE(polarity(parse_type("forall X. Y -> Y")).is_forall_positive);
}

TEST_CASE("positive polarity closed under the encodings") {
  Gen gen(17);
  std::vector<TypePtr> positives = {type_id(), type_bool(), type_nat()};
  for (int i = 0; i < 100; ++i) {
    TypePtr a = gen.choose(positives);
    TypePtr b = gen.choose(positives);
    REQUIRE(polarity(mk_product(a, b)).is_forall_positive);
    REQUIRE(polarity(mk_sum(a, b)).is_forall_positive);
    REQUIRE(polarity(mk_list(a)).is_forall_positive);
  }
}

TEST_CASE("ends_with") {
  REQUIRE(ends_with(atom("O"), "O"));
  REQUIRE(ends_with(parse_type("forall Y. Y -> O"), "O"));
  REQUIRE_FALSE(ends_with(type_id(), "O"));
  // quantifier stripping stops at a binder named K
  REQUIRE_FALSE(ends_with(type_id(), "X"));
  REQUIRE(ends_with(parse_type("forall Y. Y -> X"), "X"));
  REQUIRE(ends_with(parse_type("A -> (B -> K)"), "K"));
}

TEST_CASE("lg counts arrows") {
  REQUIRE(lg(atom("O")) == 0);
  REQUIRE(lg(type_bool()) == 2);
  REQUIRE(lg(type_nat()) == 3);
  REQUIRE(lg(arrow(type_nat(), type_nat())) == 7);
  REQUIRE(lg(type_d()) == 2);
}

TEST_CASE("double-negation translation") {
  REQUIRE(alpha_eq_type(godel_translate(tvar("X")), parse_type("X -> Bot")));
  REQUIRE(alpha_eq_type(godel_translate(parse_type("X -> Y")),
                        parse_type("(X -> Bot) -> (Y -> Bot)")));
  REQUIRE(alpha_eq_type(
      godel_translate(type_nat()),
      parse_type("forall X. (X -> Bot) -> (((X -> Bot) -> (X -> Bot)) -> (X -> Bot))")));
  REQUIRE_THROWS_AS(godel_translate(parse_type("Bot -> X")), std::invalid_argument);
}

namespace {
int leaf_count(const TypePtr& a) {
  switch (a->kind) {
    case Type::Kind::Var:
    case Type::Kind::Atom: return 1;
    case Type::Kind::Arrow: return leaf_count(a->left) + leaf_count(a->right);
    case Type::Kind::Forall: return leaf_count(a->right);
  }
  return 0;
}
}  // namespace

TEST_CASE("translation adds one arrow per leaf") {
  Gen gen(29);
  for (int i = 0; i < 200; ++i) {
    TypePtr a = gen.proper_type(gen.pick(1, 9), {"X", "Y"});
    REQUIRE(lg(godel_translate(a)) == lg(a) + leaf_count(a));
  }
}

TEST_CASE("circle wrapper") {
  REQUIRE(alpha_eq_type(circle(tvar("G")),
                        arrow(atom("O"), mk_product(tvar("G"), atom("O")))));
}

TEST_CASE("stock terms") {
  REQUIRE(alpha_eq(pn(0), parse_term("\\x. x")));
  REQUIRE(alpha_eq(pn(2), parse_term("\\x1. \\x2. \\x. x")));
  REQUIRE(alpha_eq(church_bool(true), parse_term("\\x. \\y. x")));
  REQUIRE(alpha_eq(church_bool(false), parse_term("\\x. \\y. y")));
  REQUIRE(alpha_eq(church_nat(0), parse_term("\\x. \\s. x")));
  REQUIRE(alpha_eq(church_nat(2), parse_term("\\x. \\s. (s) ((s) x)")));
}

TEST_CASE("projections type-check at their arrow chain") {
  for (int n = 0; n <= 5; ++n) {
    TermPtr p = pn(n);
    REQUIRE(is_normal(p));
    REQUIRE(free_term_vars(p).empty());
    TypePtr goal = type_id();
    for (int i = n; i >= 1; --i) goal = arrow(tvar("X" + std::to_string(i)), goal);
    REQUIRE(check_f0(Context{}, p, goal));
  }
}

TEST_CASE("numerals and booleans type-check") {
  for (int k = 0; k <= 5; ++k) REQUIRE(check_f0(Context{}, church_nat(k), type_nat()));
  REQUIRE(check_f0(Context{}, church_bool(true), type_bool()));
  REQUIRE(check_f0(Context{}, church_bool(false), type_bool()));
}

TEST_CASE("type print round-trips") {
  Gen gen(31);
  for (int i = 0; i < 200; ++i) {
    TypePtr a = gen.proper_type(gen.pick(1, 9), {"X", "Y"});
    REQUIRE(alpha_eq_type(parse_type(print_type(a)), a));
  }
  REQUIRE(alpha_eq_type(parse_type(print_type(type_d())), type_d()));
}
