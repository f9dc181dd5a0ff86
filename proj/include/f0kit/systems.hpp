#pragma once

// The proof systems: decidable F0 checking for normal terms (with derivation
// emission), simple-system S checking, quantifier erasure, and validation of
// explicit derivations for full F and for the restricted variant F_F.

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "f0kit/classify.hpp"
#include "f0kit/derivation.hpp"

namespace f0kit {

struct NonNormalError : std::invalid_argument {
  explicit NonNormalError(const std::string& what) : std::invalid_argument(what) {}
};

struct QuantifierError : std::invalid_argument {
  explicit QuantifierError(const std::string& what) : std::invalid_argument(what) {}
};

// ---------------------------------------------------------------------------
// F0: System F without forall-elimination. Typability of normal terms is
// syntax-directed:
//   (i)   variables match their context entry up to alpha;
//   (ii)  a spine (x)t1...tn needs ctx(x) = B1 -> ... -> Bn -> A literally;
//   (iii) an abstraction needs A = forall X1...Xk. (B -> C), k >= 0.

namespace detail {
// Strips a maximal forall prefix, renaming the stripped variables away from
// `avoid` (the goal is up to alpha; the context fixes which names are taken).
struct StrippedForall {
  std::vector<std::string> vars;
  TypePtr body;
};

inline StrippedForall strip_forall_fresh(TypePtr a, std::set<std::string> avoid) {
  StrippedForall out;
  while (a->kind == Type::Kind::Forall) {
    std::string x = a->name;
    TypePtr body = a->right;
    if (avoid.count(x)) {
      auto body_avoid = free_type_vars(body);
      body_avoid.insert(avoid.begin(), avoid.end());
      x = fresh_name(x, body_avoid);
      body = subst_type(body, tvar(x), a->name);
    }
    avoid.insert(x);
    out.vars.push_back(x);
    a = body;
  }
  out.body = a;
  return out;
}

inline std::optional<Derivation> derive_f0_rec(const Context& ctx, const TermPtr& t,
                                               const TypePtr& a) {
  if (t->kind == Term::Kind::Abs) {
    auto avoid = ctx.free_type_vars();
    auto stripped = strip_forall_fresh(a, avoid);
    if (stripped.body->kind != Type::Kind::Arrow) return std::nullopt;
    std::string binder = t->name;
    TermPtr body = t->sub;
    if (ctx.contains(binder)) {
      auto fv = free_term_vars(body);
      for (auto& [n, ty] : ctx.entries()) fv.insert(n);
      binder = fresh_name(binder, fv);
      body = subst_term(body, t->name, var(binder));
    }
    auto sub = derive_f0_rec(ctx.extended(binder, stripped.body->left), body,
                             stripped.body->right);
    if (!sub) return std::nullopt;
    Derivation d = d_arrow_i(*sub);
    for (auto it = stripped.vars.rbegin(); it != stripped.vars.rend(); ++it)
      d = d_forall_i(d, *it);
    return d;
  }
  // Variable spine (x)t1...tn, n >= 0.
  auto [head, args] = head_decompose(t);
  if (head->kind != Term::Kind::Var) return std::nullopt;  // redex; callers pre-check
  const TypePtr* bp = ctx.lookup(head->name);
  if (!bp) return std::nullopt;
  TypePtr cur = *bp;
  std::vector<TypePtr> arg_types;
  for (size_t i = 0; i < args.size(); ++i) {
    if (cur->kind != Type::Kind::Arrow) return std::nullopt;
    arg_types.push_back(cur->left);
    cur = cur->right;
  }
  if (!alpha_eq_type(cur, a)) return std::nullopt;
  Derivation d = d_ax(ctx, head->name);
  for (size_t i = 0; i < args.size(); ++i) {
    auto sub = derive_f0_rec(ctx, args[i], arg_types[i]);
    if (!sub) return std::nullopt;
    d = d_arrow_e(d, *sub);
  }
  return d;
}
}  // namespace detail

// Emits an F0 derivation (Ax/ArrowI/ArrowE/ForallI only) or nullopt.
// Throws NonNormalError for non-normal subjects: the decision procedure is
// only stated for normal terms, and a silent false would conflate
// undecidability with rejection.
inline std::optional<Derivation> derive_f0(const Context& ctx, const TermPtr& t,
                                           const TypePtr& a) {
  if (!is_normal(t))
    throw NonNormalError("derive_f0: subject is not beta-normal: " + print_term(t));
  return detail::derive_f0_rec(ctx, t, a);
}

inline bool check_f0(const Context& ctx, const TermPtr& t, const TypePtr& a) {
  return derive_f0(ctx, t, a).has_value();
}

// ---------------------------------------------------------------------------
// S: the quantifier-free restriction. Derivability is decided by first-order
// unification, with declared type variables and atoms as rigid constants and
// metavariables (names starting with '?') for the unknowns.

namespace detail {
inline bool has_quantifier(const TypePtr& a) {
  switch (a->kind) {
    case Type::Kind::Var:
    case Type::Kind::Atom: return false;
    case Type::Kind::Arrow: return has_quantifier(a->left) || has_quantifier(a->right);
    case Type::Kind::Forall: return true;
  }
  return false;
}

struct Unifier {
  int next = 0;
  std::map<std::string, TypePtr> sol;

  TypePtr meta() { return tvar("?m" + std::to_string(next++)); }
  static bool is_meta(const TypePtr& t) {
    return t->kind == Type::Kind::Var && !t->name.empty() && t->name[0] == '?';
  }
  TypePtr walk(TypePtr t) {
    while (is_meta(t)) {
      auto it = sol.find(t->name);
      if (it == sol.end()) return t;
      t = it->second;
    }
    return t;
  }
  bool occurs(const std::string& m, TypePtr t) {
    t = walk(t);
    if (is_meta(t)) return t->name == m;
    if (t->kind == Type::Kind::Arrow) return occurs(m, t->left) || occurs(m, t->right);
    return false;
  }
  bool unify(TypePtr a, TypePtr b) {
    a = walk(a);
    b = walk(b);
    if (is_meta(a)) {
      if (is_meta(b) && b->name == a->name) return true;
      if (occurs(a->name, b)) return false;
      sol[a->name] = b;
      return true;
    }
    if (is_meta(b)) return unify(b, a);
    if (a->kind != b->kind) return false;
    if (a->kind == Type::Kind::Arrow)
      return unify(a->left, b->left) && unify(a->right, b->right);
    return a->name == b->name;  // rigid Var or Atom
  }
};

inline std::optional<TypePtr> infer_s(const TermPtr& t,
                                      std::vector<std::pair<std::string, TypePtr>>& env,
                                      Unifier& u) {
  switch (t->kind) {
    case Term::Kind::Var:
      for (auto it = env.rbegin(); it != env.rend(); ++it)
        if (it->first == t->name) return it->second;
      return std::nullopt;
    case Term::Kind::Abs: {
      TypePtr m = u.meta();
      env.emplace_back(t->name, m);
      auto body = infer_s(t->sub, env, u);
      env.pop_back();
      if (!body) return std::nullopt;
      return arrow(m, *body);
    }
    case Term::Kind::App: {
      auto f = infer_s(t->sub, env, u);
      auto a = infer_s(t->arg, env, u);
      if (!f || !a) return std::nullopt;
      TypePtr r = u.meta();
      if (!u.unify(*f, arrow(*a, r))) return std::nullopt;
      return r;
    }
  }
  return std::nullopt;
}
}  // namespace detail

// Throws QuantifierError when any involved type contains a quantifier.
inline bool check_s(const Context& ctx, const TermPtr& t, const TypePtr& a) {
  if (detail::has_quantifier(a))
    throw QuantifierError("check_s: goal type contains a quantifier");
  std::vector<std::pair<std::string, TypePtr>> env;
  for (auto& [n, ty] : ctx.entries()) {
    if (detail::has_quantifier(ty))
      throw QuantifierError("check_s: context type of " + n + " contains a quantifier");
    env.emplace_back(n, ty);
  }
  detail::Unifier u;
  auto inferred = detail::infer_s(t, env, u);
  return inferred && u.unify(*inferred, a);
}

// ---------------------------------------------------------------------------
// Quantifier erasure A^s and its pointwise extension to contexts.

inline TypePtr erase_type(const TypePtr& a) {
  switch (a->kind) {
    case Type::Kind::Var:
    case Type::Kind::Atom: return a;
    case Type::Kind::Arrow: return arrow(erase_type(a->left), erase_type(a->right));
    case Type::Kind::Forall: return erase_type(a->right);
  }
  return a;
}

inline Context erase_context(const Context& ctx) {
  Context out;
  for (auto& [n, t] : ctx.entries()) out.insert(n, erase_type(t));
  return out;
}

// (Γ, t, E) derivable in F0 maps to (Γ^s, t, E^s) derivable in S.
inline Judgment f0_to_s(const Context& ctx, const TermPtr& t, const TypePtr& e) {
  if (!check_f0(ctx, t, e))
    throw std::invalid_argument("f0_to_s: judgment is not F0-derivable");
  return {erase_context(ctx), t, erase_type(e), System::S};
}

// ---------------------------------------------------------------------------
// Derivation checking for F and F_F.

struct DerivCheck {
  enum class Failure { None, Malformed, SideCondition };
  bool ok = true;
  Failure failure = Failure::None;
  std::string path;  // premise indices from the root, e.g. "0.1"
  std::string message;

  explicit operator bool() const { return ok; }
};

namespace detail {
inline DerivCheck deriv_fail(DerivCheck::Failure f, const std::string& path,
                             const std::string& msg) {
  return {false, f, path, msg};
}

// The (forall_e)_F side condition: writing the quantified body as
// forall X0 (A1 -> forall X1 (A2 -> ... -> forall Xn-1 (An -> forall Xn Y)...)),
// either Y = X or some Ai ends with X. Prefix binders equal to X are renamed
// apart so shadowed occurrences are not mistaken for X.
inline bool ff_side_condition(const std::string& x, TypePtr body) {
  std::vector<TypePtr> arg_parts;
  for (;;) {
    while (body->kind == Type::Kind::Forall) {
      if (body->name == x) {
        auto avoid = free_type_vars(body->right);
        avoid.insert(x);
        std::string fresh = fresh_name(x, avoid);
        body = subst_type(body->right, tvar(fresh), x);
      } else {
        body = body->right;
      }
    }
    if (body->kind != Type::Kind::Arrow) break;
    arg_parts.push_back(body->left);
    body = body->right;
  }
  if (body->kind == Type::Kind::Var && body->name == x) return true;
  for (auto& a : arg_parts)
    if (ends_with(a, x)) return true;
  return false;
}

inline DerivCheck check_deriv_rec(const Derivation& d, bool restricted,
                                  const std::string& path) {
  auto at = [&](size_t i) { return path.empty() ? std::to_string(i) : path + "." + std::to_string(i); };
  auto bad = [&](const std::string& msg) {
    return deriv_fail(DerivCheck::Failure::Malformed, path, msg);
  };
  switch (d.rule) {
    case Rule::Ax: {
      if (!d.premises.empty()) return bad("ax node has premises");
      if (d.term->kind != Term::Kind::Var) return bad("ax subject is not a variable");
      const TypePtr* ty = d.ctx.lookup(d.term->name);
      if (!ty) return bad("ax variable not bound in context");
      if (!alpha_eq_type(*ty, d.type)) return bad("ax type differs from context entry");
      return {};
    }
    case Rule::ArrowI: {
      if (d.premises.size() != 1) return bad("arrow_i needs one premise");
      const Derivation& p = d.premises[0];
      if (d.term->kind != Term::Kind::Abs) return bad("arrow_i subject is not an abstraction");
      if (d.type->kind != Type::Kind::Arrow) return bad("arrow_i conclusion is not an arrow");
      if (p.ctx.empty()) return bad("arrow_i premise context is empty");
      auto [x, b] = p.ctx.entries().back();
      if (x != d.term->name) return bad("arrow_i binder does not match the premise context");
      if (!context_eq(p.ctx.without_last(), d.ctx))
        return bad("arrow_i contexts differ beyond the discharged binding");
      if (d.ctx.contains(x)) return bad("arrow_i binder rebinds a context variable");
      if (!term_eq(p.term, d.term->sub)) return bad("arrow_i premise subject mismatch");
      if (!alpha_eq_type(d.type->left, b) || !alpha_eq_type(d.type->right, p.type))
        return bad("arrow_i conclusion type mismatch");
      return check_deriv_rec(p, restricted, at(0));
    }
    case Rule::ArrowE: {
      if (d.premises.size() != 2) return bad("arrow_e needs two premises");
      const Derivation& f = d.premises[0];
      const Derivation& a = d.premises[1];
      if (d.term->kind != Term::Kind::App) return bad("arrow_e subject is not an application");
      if (!term_eq(f.term, d.term->sub) || !term_eq(a.term, d.term->arg))
        return bad("arrow_e premise subjects mismatch");
      if (!context_eq(f.ctx, d.ctx) || !context_eq(a.ctx, d.ctx))
        return bad("arrow_e premise contexts differ from conclusion");
      if (f.type->kind != Type::Kind::Arrow) return bad("arrow_e function premise is not an arrow");
      if (!alpha_eq_type(f.type->left, a.type)) return bad("arrow_e argument type mismatch");
      if (!alpha_eq_type(f.type->right, d.type)) return bad("arrow_e conclusion type mismatch");
      if (auto r = check_deriv_rec(f, restricted, at(0)); !r) return r;
      return check_deriv_rec(a, restricted, at(1));
    }
    case Rule::ForallI: {
      if (d.premises.size() != 1) return bad("forall_i needs one premise");
      const Derivation& p = d.premises[0];
      if (!term_eq(p.term, d.term)) return bad("forall_i premise subject mismatch");
      if (!context_eq(p.ctx, d.ctx)) return bad("forall_i premise context mismatch");
      if (d.var.empty()) return bad("forall_i node lacks its variable");
      if (d.ctx.free_type_vars().count(d.var))
        return bad("forall_i variable is free in the context");
      if (!alpha_eq_type(d.type, forall(d.var, p.type)))
        return bad("forall_i conclusion type mismatch");
      return check_deriv_rec(p, restricted, at(0));
    }
    case Rule::ForallE: {
      if (d.premises.size() != 1) return bad("forall_e needs one premise");
      const Derivation& p = d.premises[0];
      if (!d.inst) return bad("forall_e node lacks its instantiating type");
      if (!term_eq(p.term, d.term)) return bad("forall_e premise subject mismatch");
      if (!context_eq(p.ctx, d.ctx)) return bad("forall_e premise context mismatch");
      if (p.type->kind != Type::Kind::Forall) return bad("forall_e premise type is not quantified");
      if (!alpha_eq_type(d.type, subst_type(p.type->right, d.inst, p.type->name)))
        return bad("forall_e conclusion type mismatch");
      if (restricted && !ff_side_condition(p.type->name, p.type->right))
        return deriv_fail(DerivCheck::Failure::SideCondition, path,
                          "restricted forall_e: tail is not the eliminated variable and "
                          "no argument part ends with it");
      return check_deriv_rec(p, restricted, at(0));
    }
  }
  return bad("unknown rule");
}
}  // namespace detail

inline DerivCheck check_derivation_f(const Derivation& d) {
  return detail::check_deriv_rec(d, false, "");
}

inline DerivCheck check_derivation_ff(const Derivation& d) {
  return detail::check_deriv_rec(d, true, "");
}

}  // namespace f0kit
