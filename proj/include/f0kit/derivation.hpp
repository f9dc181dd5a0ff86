#pragma once

// Explicit proof trees for typing judgments. Builders compute conclusions
// from premises so machine-built derivations are correct by construction;
// the checkers in systems.hpp validate arbitrary (e.g. deserialized) trees.

#include <stdexcept>
#include <string>
#include <vector>

#include "f0kit/context.hpp"
#include "f0kit/reduce.hpp"

namespace f0kit {

enum class Rule { Ax, ArrowI, ArrowE, ForallI, ForallE };

inline std::string rule_name(Rule r) {
  switch (r) {
    case Rule::Ax: return "ax";
    case Rule::ArrowI: return "arrow_i";
    case Rule::ArrowE: return "arrow_e";
    case Rule::ForallI: return "forall_i";
    case Rule::ForallE: return "forall_e";
  }
  return {};
}

inline Rule rule_from_name(const std::string& n) {
  if (n == "ax") return Rule::Ax;
  if (n == "arrow_i") return Rule::ArrowI;
  if (n == "arrow_e") return Rule::ArrowE;
  if (n == "forall_i") return Rule::ForallI;
  if (n == "forall_e") return Rule::ForallE;
  throw std::invalid_argument("unknown rule name: " + n);
}

struct Derivation {
  Rule rule;
  Context ctx;
  TermPtr term;
  TypePtr type;
  std::string var;  // ForallI: generalized variable
  TypePtr inst;     // ForallE: instantiating type G
  std::vector<Derivation> premises;
};

// ---------------------------------------------------------------------------
// Builders. Each throws std::logic_error on misuse.

inline Derivation d_ax(const Context& ctx, const std::string& x) {
  const TypePtr* ty = ctx.lookup(x);
  if (!ty) throw std::logic_error("d_ax: variable not in context: " + x);
  return {Rule::Ax, ctx, var(x), *ty, {}, nullptr, {}};
}

// From Γ, x : B |- t : C (x the last context entry) to Γ |- \x.t : B -> C.
inline Derivation d_arrow_i(const Derivation& premise) {
  if (premise.ctx.empty()) throw std::logic_error("d_arrow_i: empty premise context");
  auto [x, b] = premise.ctx.entries().back();
  return {Rule::ArrowI, premise.ctx.without_last(), abs(x, premise.term),
          arrow(b, premise.type), {}, nullptr, {premise}};
}

inline Derivation d_arrow_e(const Derivation& fun, const Derivation& argd) {
  if (fun.type->kind != Type::Kind::Arrow)
    throw std::logic_error("d_arrow_e: function premise is not an arrow");
  if (!alpha_eq_type(fun.type->left, argd.type))
    throw std::logic_error("d_arrow_e: argument type mismatch");
  if (!context_eq(fun.ctx, argd.ctx))
    throw std::logic_error("d_arrow_e: premise contexts differ");
  return {Rule::ArrowE, fun.ctx, app(fun.term, argd.term), fun.type->right,
          {}, nullptr, {fun, argd}};
}

inline Derivation d_forall_i(const Derivation& premise, const std::string& x) {
  if (premise.ctx.free_type_vars().count(x))
    throw std::logic_error("d_forall_i: " + x + " is free in the context");
  return {Rule::ForallI, premise.ctx, premise.term, forall(x, premise.type),
          x, nullptr, {premise}};
}

inline Derivation d_forall_e(const Derivation& premise, const TypePtr& g) {
  if (premise.type->kind != Type::Kind::Forall)
    throw std::logic_error("d_forall_e: premise type is not quantified");
  return {Rule::ForallE, premise.ctx, premise.term,
          subst_type(premise.type->right, g, premise.type->name), {}, g, {premise}};
}

}  // namespace f0kit
