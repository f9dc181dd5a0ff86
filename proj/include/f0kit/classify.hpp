#pragma once

// Syntactic type predicates and stock constructions: quantifier polarity,
// ends-with, arrow count, the double-negation translation, the O -> (G /\ O)
// wrapper, and Church data terms.

#include <stdexcept>
#include <string>

#include "f0kit/term.hpp"
#include "f0kit/type.hpp"

namespace f0kit {

struct Polarity {
  bool is_forall_positive = false;
  bool is_forall_negative = false;
};

// Atoms behave exactly like variables here.
inline Polarity polarity(const TypePtr& a) {
  switch (a->kind) {
    case Type::Kind::Var:
    case Type::Kind::Atom: return {true, true};
    case Type::Kind::Arrow: {
      Polarity l = polarity(a->left), r = polarity(a->right);
      return {l.is_forall_negative && r.is_forall_positive,
              l.is_forall_positive && r.is_forall_negative};
    }
    case Type::Kind::Forall: {
      Polarity b = polarity(a->right);
      bool bound_occurs = free_type_vars(a->right).count(a->name) != 0;
      return {b.is_forall_positive && bound_occurs, false};
    }
  }
  return {};
}

// A ends with K: K itself; B -> A; forall X. A with X != K.
inline bool ends_with(const TypePtr& a, const std::string& k) {
  switch (a->kind) {
    case Type::Kind::Var:
    case Type::Kind::Atom: return a->name == k;
    case Type::Kind::Arrow: return ends_with(a->right, k);
    case Type::Kind::Forall: return a->name != k && ends_with(a->right, k);
  }
  return false;
}

// Number of arrows in the type.
inline int lg(const TypePtr& a) {
  switch (a->kind) {
    case Type::Kind::Var:
    case Type::Kind::Atom: return 0;
    case Type::Kind::Arrow: return 1 + lg(a->left) + lg(a->right);
    case Type::Kind::Forall: return lg(a->right);
  }
  return 0;
}

inline TypePtr bottom() { return atom("Bot"); }
inline TypePtr neg_type(const TypePtr& a) { return arrow(a, bottom()); }

// Replaces every atomic leaf R by R -> Bot. Requires Bot absent.
inline TypePtr godel_translate(const TypePtr& a) {
  if (occurs_atom(a, "Bot"))
    throw std::invalid_argument("godel_translate: Bot already occurs in the type");
  struct Impl {
    static TypePtr go(const TypePtr& a) {
      switch (a->kind) {
        case Type::Kind::Var:
        case Type::Kind::Atom: return neg_type(a);
        case Type::Kind::Arrow: return arrow(go(a->left), go(a->right));
        case Type::Kind::Forall: return forall(a->name, go(a->right));
      }
      return a;
    }
  };
  return Impl::go(a);
}

// G^o = O -> (G /\ O)
inline TypePtr circle(const TypePtr& g) { return arrow(atom("O"), mk_product(g, atom("O"))); }

// p_n = \x1...\xn. \x. x
inline TermPtr pn(int n) {
  TermPtr t = abs("x", var("x"));
  for (int i = n; i >= 1; --i) t = abs("x" + std::to_string(i), t);
  return t;
}

// \x. \s. s (s ... (s x))
inline TermPtr church_nat(int k) {
  TermPtr body = var("x");
  for (int i = 0; i < k; ++i) body = app(var("s"), body);
  return abs("x", abs("s", body));
}

inline TermPtr church_bool(bool b) {
  return abs("x", abs("y", var(b ? "x" : "y")));
}

}  // namespace f0kit
