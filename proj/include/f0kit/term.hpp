#pragma once

// Untyped lambda terms: AST, free variables, simultaneous capture-avoiding
// substitution, alpha-equivalence, parser and canonical printer.

#include <initializer_list>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace f0kit {

struct Term;
using TermPtr = std::shared_ptr<const Term>;

struct Term {
  enum class Kind { Var, Abs, App };
  Kind kind;
  std::string name;  // Var name or Abs binder
  TermPtr sub;       // Abs body or App function
  TermPtr arg;       // App argument
};

inline TermPtr var(std::string n) {
  return std::make_shared<Term>(Term{Term::Kind::Var, std::move(n), nullptr, nullptr});
}
inline TermPtr abs(std::string binder, TermPtr body) {
  return std::make_shared<Term>(Term{Term::Kind::Abs, std::move(binder), std::move(body), nullptr});
}
inline TermPtr app(TermPtr f, TermPtr a) {
  return std::make_shared<Term>(Term{Term::Kind::App, {}, std::move(f), std::move(a)});
}
inline TermPtr app(TermPtr f, std::initializer_list<TermPtr> args) {
  for (auto& a : args) f = app(f, a);
  return f;
}
inline TermPtr app(TermPtr f, const std::vector<TermPtr>& args) {
  for (auto& a : args) f = app(f, a);
  return f;
}

inline int term_size(const TermPtr& t) {
  switch (t->kind) {
    case Term::Kind::Var: return 1;
    case Term::Kind::Abs: return 1 + term_size(t->sub);
    case Term::Kind::App: return 1 + term_size(t->sub) + term_size(t->arg);
  }
  return 0;
}

inline void collect_free_vars(const TermPtr& t, std::vector<std::string>& bound,
                              std::set<std::string>& out) {
  switch (t->kind) {
    case Term::Kind::Var:
      for (auto it = bound.rbegin(); it != bound.rend(); ++it)
        if (*it == t->name) return;
      out.insert(t->name);
      return;
    case Term::Kind::Abs:
      bound.push_back(t->name);
      collect_free_vars(t->sub, bound, out);
      bound.pop_back();
      return;
    case Term::Kind::App:
      collect_free_vars(t->sub, bound, out);
      collect_free_vars(t->arg, bound, out);
      return;
  }
}

inline std::set<std::string> free_term_vars(const TermPtr& t) {
  std::set<std::string> out;
  std::vector<std::string> bound;
  collect_free_vars(t, bound, out);
  return out;
}

// First name in base, base', base'', ... not present in avoid.
inline std::string fresh_name(const std::string& base, const std::set<std::string>& avoid) {
  std::string n = base;
  while (avoid.count(n)) n += '\'';
  return n;
}

// Simultaneous capture-avoiding substitution.
inline TermPtr subst_term(const TermPtr& t,
                          const std::vector<std::pair<std::string, TermPtr>>& pairs) {
  if (pairs.empty()) return t;
  switch (t->kind) {
    case Term::Kind::Var:
      for (auto& [x, u] : pairs)
        if (x == t->name) return u;
      return t;
    case Term::Kind::App: {
      auto f = subst_term(t->sub, pairs);
      auto a = subst_term(t->arg, pairs);
      if (f == t->sub && a == t->arg) return t;
      return app(f, a);
    }
    case Term::Kind::Abs: {
      std::vector<std::pair<std::string, TermPtr>> inner;
      for (auto& p : pairs)
        if (p.first != t->name) inner.push_back(p);
      if (inner.empty()) return t;
      std::set<std::string> body_fv = free_term_vars(t->sub);
      bool relevant = false;
      for (auto& p : inner)
        if (body_fv.count(p.first)) relevant = true;
      if (!relevant) return t;
      std::set<std::string> avoid;
      bool must_rename = false;
      for (auto& p : inner) {
        if (!body_fv.count(p.first)) continue;
        auto fv = free_term_vars(p.second);
        if (fv.count(t->name)) must_rename = true;
        avoid.insert(fv.begin(), fv.end());
      }
      std::string binder = t->name;
      TermPtr body = t->sub;
      if (must_rename) {
        avoid.insert(body_fv.begin(), body_fv.end());
        for (auto& p : inner) avoid.insert(p.first);
        binder = fresh_name(t->name, avoid);
        body = subst_term(body, {{t->name, var(binder)}});
      }
      return abs(binder, subst_term(body, inner));
    }
  }
  return t;
}

inline TermPtr subst_term(const TermPtr& t, const std::string& x, const TermPtr& u) {
  return subst_term(t, {{x, u}});
}

namespace detail {
inline bool alpha_eq_rec(const TermPtr& a, const TermPtr& b,
                         std::vector<std::string>& ea, std::vector<std::string>& eb) {
  if (a->kind != b->kind) return false;
  switch (a->kind) {
    case Term::Kind::Var: {
      int la = -1, lb = -1;
      for (int i = (int)ea.size() - 1; i >= 0; --i)
        if (ea[i] == a->name) { la = i; break; }
      for (int i = (int)eb.size() - 1; i >= 0; --i)
        if (eb[i] == b->name) { lb = i; break; }
      if (la != lb) return false;
      return la >= 0 || a->name == b->name;
    }
    case Term::Kind::Abs: {
      ea.push_back(a->name);
      eb.push_back(b->name);
      bool r = alpha_eq_rec(a->sub, b->sub, ea, eb);
      ea.pop_back();
      eb.pop_back();
      return r;
    }
    case Term::Kind::App:
      return alpha_eq_rec(a->sub, b->sub, ea, eb) && alpha_eq_rec(a->arg, b->arg, ea, eb);
  }
  return false;
}
}  // namespace detail

inline bool alpha_eq(const TermPtr& a, const TermPtr& b) {
  std::vector<std::string> ea, eb;
  return detail::alpha_eq_rec(a, b, ea, eb);
}

// Exact structural equality, names included.
inline bool term_eq(const TermPtr& a, const TermPtr& b) {
  if (a == b) return true;
  if (a->kind != b->kind) return false;
  switch (a->kind) {
    case Term::Kind::Var: return a->name == b->name;
    case Term::Kind::Abs: return a->name == b->name && term_eq(a->sub, b->sub);
    case Term::Kind::App: return term_eq(a->sub, b->sub) && term_eq(a->arg, b->arg);
  }
  return false;
}

// ---------------------------------------------------------------------------
// Printing. Binders are renamed so the canonical form never shadows.

namespace detail {
struct PrintEnv {
  std::vector<std::pair<std::string, std::string>> renames;  // source -> printed
  std::set<std::string> in_scope;                            // printed names
  std::set<std::string> globals;                             // free vars of whole term

  std::string lookup(const std::string& n) const {
    for (auto it = renames.rbegin(); it != renames.rend(); ++it)
      if (it->first == n) return it->second;
    return n;
  }
};

inline std::string print_rec(const TermPtr& t, PrintEnv& env);

inline std::string print_atomish(const TermPtr& t, PrintEnv& env) {
  if (t->kind == Term::Kind::Var) return print_rec(t, env);
  return "(" + print_rec(t, env) + ")";
}

inline std::string print_rec(const TermPtr& t, PrintEnv& env) {
  switch (t->kind) {
    case Term::Kind::Var:
      return env.lookup(t->name);
    case Term::Kind::Abs: {
      std::set<std::string> body_fv = free_term_vars(t->sub);
      std::string binder = t->name;
      auto clashes = [&](const std::string& n) {
        if (env.in_scope.count(n)) return true;
        if (n != t->name && (body_fv.count(n) || env.globals.count(n))) return true;
        return false;
      };
      while (clashes(binder)) binder += '\'';
      env.renames.emplace_back(t->name, binder);
      env.in_scope.insert(binder);
      std::string body = print_rec(t->sub, env);
      env.in_scope.erase(binder);
      env.renames.pop_back();
      return "\\" + binder + ". " + body;
    }
    case Term::Kind::App: {
      std::string f = t->sub->kind == Term::Kind::Abs ? print_atomish(t->sub, env)
                                                      : print_rec(t->sub, env);
      return f + " " + print_atomish(t->arg, env);
    }
  }
  return {};
}
}  // namespace detail

inline std::string print_term(const TermPtr& t) {
  detail::PrintEnv env;
  env.globals = free_term_vars(t);
  return detail::print_rec(t, env);
}

// ---------------------------------------------------------------------------
// Parsing.

struct ParseError : std::runtime_error {
  size_t pos;
  ParseError(const std::string& msg, size_t p)
      : std::runtime_error(msg + " at position " + std::to_string(p)), pos(p) {}
};

namespace detail {
struct Cursor {
  const std::string& s;
  size_t i = 0;

  void skip_ws() {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t' || s[i] == '\n' || s[i] == '\r')) ++i;
  }
  bool eof() {
    skip_ws();
    return i >= s.size();
  }
  char peek() {
    skip_ws();
    return i < s.size() ? s[i] : '\0';
  }
  bool eat(char c) {
    skip_ws();
    if (i < s.size() && s[i] == c) {
      ++i;
      return true;
    }
    return false;
  }
  void expect(char c, const char* what) {
    if (!eat(c)) throw ParseError(std::string("expected '") + c + "' (" + what + ")", i);
  }
  static bool ident_start(char c) {
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_';
  }
  static bool ident_char(char c) {
    return ident_start(c) || (c >= '0' && c <= '9') || c == '\'';
  }
  std::optional<std::string> ident() {
    skip_ws();
    if (i >= s.size() || !ident_start(s[i])) return std::nullopt;
    size_t j = i;
    while (j < s.size() && ident_char(s[j])) ++j;
    std::string out = s.substr(i, j - i);
    i = j;
    return out;
  }
  // Consumes the given keyword only when it stands as a full identifier.
  bool keyword(const std::string& kw) {
    skip_ws();
    size_t save = i;
    auto id = ident();
    if (id && *id == kw) return true;
    i = save;
    return false;
  }
};

inline TermPtr parse_term_rec(Cursor& c);

inline std::optional<TermPtr> parse_term_atom(Cursor& c) {
  if (c.eat('(')) {
    TermPtr t = parse_term_rec(c);
    c.expect(')', "closing application group");
    return t;
  }
  if (auto id = c.ident()) return var(*id);
  return std::nullopt;
}

inline TermPtr parse_term_rec(Cursor& c) {
  if (c.eat('\\')) {
    auto binder = c.ident();
    if (!binder) throw ParseError("expected binder name after '\\'", c.i);
    c.expect('.', "lambda body separator");
    return abs(*binder, parse_term_rec(c));
  }
  auto head = parse_term_atom(c);
  if (!head) throw ParseError("expected a term", c.i);
  TermPtr t = *head;
  for (;;) {
    if (c.peek() == '\\') {  // trailing lambda argument
      return app(t, parse_term_rec(c));
    }
    auto next = parse_term_atom(c);
    if (!next) return t;
    t = app(t, *next);
  }
}
}  // namespace detail

inline TermPtr parse_term(const std::string& text) {
  detail::Cursor c{text};
  TermPtr t = detail::parse_term_rec(c);
  if (!c.eof()) throw ParseError("trailing input after term", c.i);
  return t;
}

}  // namespace f0kit
