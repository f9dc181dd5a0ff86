#pragma once

// Polymorphic types: variables, atomic constants, arrows, quantifiers.
// Atom names and type-variable names are distinct node kinds, so the two
// namespaces cannot collide structurally; the parser decides membership
// from its atom set.

#include <memory>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "f0kit/term.hpp"  // Cursor, ParseError, fresh_name

namespace f0kit {

struct Type;
using TypePtr = std::shared_ptr<const Type>;

struct Type {
  enum class Kind { Var, Atom, Arrow, Forall };
  Kind kind;
  std::string name;  // Var/Atom name, Forall binder
  TypePtr left;      // Arrow left
  TypePtr right;     // Arrow right or Forall body
};

inline TypePtr tvar(std::string n) {
  return std::make_shared<Type>(Type{Type::Kind::Var, std::move(n), nullptr, nullptr});
}
inline TypePtr atom(std::string n) {
  return std::make_shared<Type>(Type{Type::Kind::Atom, std::move(n), nullptr, nullptr});
}
inline TypePtr arrow(TypePtr a, TypePtr b) {
  return std::make_shared<Type>(Type{Type::Kind::Arrow, {}, std::move(a), std::move(b)});
}
inline TypePtr forall(std::string x, TypePtr body) {
  return std::make_shared<Type>(Type{Type::Kind::Forall, std::move(x), nullptr, std::move(body)});
}

inline int type_size(const TypePtr& t) {
  switch (t->kind) {
    case Type::Kind::Var:
    case Type::Kind::Atom: return 1;
    case Type::Kind::Arrow: return 1 + type_size(t->left) + type_size(t->right);
    case Type::Kind::Forall: return 1 + type_size(t->right);
  }
  return 0;
}

namespace detail {
inline void collect_free_tvars(const TypePtr& t, std::vector<std::string>& bound,
                               std::set<std::string>& out) {
  switch (t->kind) {
    case Type::Kind::Var:
      for (auto it = bound.rbegin(); it != bound.rend(); ++it)
        if (*it == t->name) return;
      out.insert(t->name);
      return;
    case Type::Kind::Atom: return;
    case Type::Kind::Arrow:
      collect_free_tvars(t->left, bound, out);
      collect_free_tvars(t->right, bound, out);
      return;
    case Type::Kind::Forall:
      bound.push_back(t->name);
      collect_free_tvars(t->right, bound, out);
      bound.pop_back();
      return;
  }
}
}  // namespace detail

inline std::set<std::string> free_type_vars(const TypePtr& t) {
  std::set<std::string> out;
  std::vector<std::string> bound;
  detail::collect_free_tvars(t, bound, out);
  return out;
}

inline bool occurs_atom(const TypePtr& t, const std::string& name) {
  switch (t->kind) {
    case Type::Kind::Var: return false;
    case Type::Kind::Atom: return t->name == name;
    case Type::Kind::Arrow: return occurs_atom(t->left, name) || occurs_atom(t->right, name);
    case Type::Kind::Forall: return occurs_atom(t->right, name);
  }
  return false;
}

// Capture-avoiding A[G/X].
inline TypePtr subst_type(const TypePtr& a, const TypePtr& g, const std::string& x) {
  switch (a->kind) {
    case Type::Kind::Var: return a->name == x ? g : a;
    case Type::Kind::Atom: return a;
    case Type::Kind::Arrow: {
      auto l = subst_type(a->left, g, x);
      auto r = subst_type(a->right, g, x);
      if (l == a->left && r == a->right) return a;
      return arrow(l, r);
    }
    case Type::Kind::Forall: {
      if (a->name == x) return a;
      auto body_fv = free_type_vars(a->right);
      if (!body_fv.count(x)) return a;
      auto g_fv = free_type_vars(g);
      std::string binder = a->name;
      TypePtr body = a->right;
      if (g_fv.count(binder)) {
        std::set<std::string> avoid = g_fv;
        avoid.insert(body_fv.begin(), body_fv.end());
        avoid.insert(x);
        binder = fresh_name(a->name, avoid);
        body = subst_type(body, tvar(binder), a->name);
      }
      return forall(binder, subst_type(body, g, x));
    }
  }
  return a;
}

namespace detail {
inline bool alpha_eq_type_rec(const TypePtr& a, const TypePtr& b,
                              std::vector<std::string>& ea, std::vector<std::string>& eb) {
  if (a->kind != b->kind) return false;
  switch (a->kind) {
    case Type::Kind::Atom: return a->name == b->name;
    case Type::Kind::Var: {
      int la = -1, lb = -1;
      for (int i = (int)ea.size() - 1; i >= 0; --i)
        if (ea[i] == a->name) { la = i; break; }
      for (int i = (int)eb.size() - 1; i >= 0; --i)
        if (eb[i] == b->name) { lb = i; break; }
      if (la != lb) return false;
      return la >= 0 || a->name == b->name;
    }
    case Type::Kind::Arrow:
      return alpha_eq_type_rec(a->left, b->left, ea, eb) &&
             alpha_eq_type_rec(a->right, b->right, ea, eb);
    case Type::Kind::Forall: {
      ea.push_back(a->name);
      eb.push_back(b->name);
      bool r = alpha_eq_type_rec(a->right, b->right, ea, eb);
      ea.pop_back();
      eb.pop_back();
      return r;
    }
  }
  return false;
}
}  // namespace detail

inline bool alpha_eq_type(const TypePtr& a, const TypePtr& b) {
  std::vector<std::string> ea, eb;
  return detail::alpha_eq_type_rec(a, b, ea, eb);
}

// Every quantifier binds a variable occurring in its scope.
inline bool is_proper(const TypePtr& a) {
  switch (a->kind) {
    case Type::Kind::Var:
    case Type::Kind::Atom: return true;
    case Type::Kind::Arrow: return is_proper(a->left) && is_proper(a->right);
    case Type::Kind::Forall:
      return free_type_vars(a->right).count(a->name) && is_proper(a->right);
  }
  return false;
}

// No free type variables; atoms do not count.
inline bool is_closed(const TypePtr& a) { return free_type_vars(a).empty(); }

// ---------------------------------------------------------------------------
// Encodings: product, sum, list. The quantified variable is the first name in
// a fixed sequence not free in the components, so results are reproducible.

inline std::string pick_encoding_var(const std::vector<TypePtr>& parts) {
  std::set<std::string> avoid;
  for (auto& p : parts) {
    auto fv = free_type_vars(p);
    avoid.insert(fv.begin(), fv.end());
  }
  static const char* seq[] = {"X", "Y", "Z", "W"};
  for (auto* s : seq)
    if (!avoid.count(s)) return s;
  int i = 1;
  for (;;) {
    std::string n = "X" + std::to_string(i++);
    if (!avoid.count(n)) return n;
  }
}

// A /\ B = forall X. (A -> (B -> X)) -> X
inline TypePtr mk_product(const TypePtr& a, const TypePtr& b) {
  std::string x = pick_encoding_var({a, b});
  return forall(x, arrow(arrow(a, arrow(b, tvar(x))), tvar(x)));
}

// A \/ B = forall X. (A -> X) -> ((B -> X) -> X)
inline TypePtr mk_sum(const TypePtr& a, const TypePtr& b) {
  std::string x = pick_encoding_var({a, b});
  return forall(x, arrow(arrow(a, tvar(x)), arrow(arrow(b, tvar(x)), tvar(x))));
}

// List A = forall X. X -> ((A -> (X -> X)) -> X)
inline TypePtr mk_list(const TypePtr& a) {
  std::string x = pick_encoding_var({a});
  return forall(x, arrow(tvar(x), arrow(arrow(a, arrow(tvar(x), tvar(x))), tvar(x))));
}

// ---------------------------------------------------------------------------
// Printing: `forall X. A`, right-associative `->`.

namespace detail {
inline std::string print_type_rec(const TypePtr& t) {
  switch (t->kind) {
    case Type::Kind::Var:
    case Type::Kind::Atom: return t->name;
    case Type::Kind::Forall:
      return "forall " + t->name + ". " + print_type_rec(t->right);
    case Type::Kind::Arrow: {
      std::string l = t->left->kind == Type::Kind::Arrow || t->left->kind == Type::Kind::Forall
                          ? "(" + print_type_rec(t->left) + ")"
                          : print_type_rec(t->left);
      return l + " -> " + print_type_rec(t->right);
    }
  }
  return {};
}
}  // namespace detail

inline std::string print_type(const TypePtr& t) { return detail::print_type_rec(t); }

// ---------------------------------------------------------------------------
// Parsing. Grammar, loosest first:
//   type  := 'forall' X '.' type | sum [ '->' type ]
//   sum   := prod { '\/' prod }
//   prod  := app { '/\' app }
//   app   := 'List' app | ident | '(' type ')'
// `/\`, `\/` and `List` expand to the encodings above.

inline const std::set<std::string>& default_atoms() {
  static const std::set<std::string> atoms = {"O", "Bot"};
  return atoms;
}

namespace detail {
inline TypePtr parse_type_rec(Cursor& c, const std::set<std::string>& atoms);

inline TypePtr parse_type_app(Cursor& c, const std::set<std::string>& atoms) {
  if (c.eat('(')) {
    TypePtr t = parse_type_rec(c, atoms);
    c.expect(')', "closing type group");
    return t;
  }
  if (c.keyword("List")) return mk_list(parse_type_app(c, atoms));
  auto id = c.ident();
  if (!id) throw ParseError("expected a type", c.i);
  if (atoms.count(*id)) return atom(*id);
  return tvar(*id);
}

inline TypePtr parse_type_prod(Cursor& c, const std::set<std::string>& atoms) {
  TypePtr t = parse_type_app(c, atoms);
  for (;;) {
    c.skip_ws();
    if (c.i + 1 < c.s.size() && c.s[c.i] == '/' && c.s[c.i + 1] == '\\') {
      c.i += 2;
      t = mk_product(t, parse_type_app(c, atoms));
    } else {
      return t;
    }
  }
}

inline TypePtr parse_type_sum(Cursor& c, const std::set<std::string>& atoms) {
  TypePtr t = parse_type_prod(c, atoms);
  for (;;) {
    c.skip_ws();
    if (c.i + 1 < c.s.size() && c.s[c.i] == '\\' && c.s[c.i + 1] == '/') {
      c.i += 2;
      t = mk_sum(t, parse_type_prod(c, atoms));
    } else {
      return t;
    }
  }
}

inline TypePtr parse_type_rec(Cursor& c, const std::set<std::string>& atoms) {
  if (c.keyword("forall")) {
    auto x = c.ident();
    if (!x) throw ParseError("expected variable after 'forall'", c.i);
    c.expect('.', "quantifier body separator");
    return forall(*x, parse_type_rec(c, atoms));
  }
  TypePtr t = parse_type_sum(c, atoms);
  c.skip_ws();
  if (c.i + 1 < c.s.size() && c.s[c.i] == '-' && c.s[c.i + 1] == '>') {
    c.i += 2;
    return arrow(t, parse_type_rec(c, atoms));
  }
  return t;
}
}  // namespace detail

inline TypePtr parse_type(const std::string& text,
                          const std::set<std::string>& atoms = default_atoms()) {
  detail::Cursor c{text};
  TypePtr t = detail::parse_type_rec(c, atoms);
  if (!c.eof()) throw ParseError("trailing input after type", c.i);
  return t;
}

}  // namespace f0kit
