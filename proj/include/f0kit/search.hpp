#pragma once

// Goal-directed enumeration of F0 inhabitants, output-type probing, and the
// refuters that certify a type is not an input type.

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "f0kit/classify.hpp"
#include "f0kit/systems.hpp"

namespace f0kit {

struct SearchBudget {
  int max_depth = 6;
  long max_terms = 100000;
};

struct EnumResult {
  std::vector<TermPtr> terms;  // sorted by size, then canonical text
  bool complete = true;        // false when max_terms cut the search short
};

namespace detail {
struct EnumState {
  long remaining;
  bool complete = true;
  int size_cap;  // 0 = unlimited

  bool spend() {
    if (remaining <= 0) {
      complete = false;
      return false;
    }
    --remaining;
    return true;
  }
};

inline std::vector<TermPtr> enum_rec(const Context& ctx, const TypePtr& goal, int depth,
                                     EnumState& st) {
  std::vector<TermPtr> out;
  if (depth <= 0) return out;

  // Abstraction rule: goal = forall X1...Xk. (B -> C).
  auto stripped = strip_forall_fresh(goal, ctx.free_type_vars());
  if (stripped.body->kind == Type::Kind::Arrow) {
    std::set<std::string> taken;
    for (auto& [n, t] : ctx.entries()) taken.insert(n);
    std::string binder;
    static const char* seq[] = {"x", "y", "z", "u", "v", "w"};
    for (auto* s : seq)
      if (!taken.count(s)) { binder = s; break; }
    if (binder.empty()) binder = fresh_name("x1", taken);
    Context inner = ctx.extended(binder, stripped.body->left);
    for (auto& body : enum_rec(inner, stripped.body->right, depth - 1, st)) {
      if (!st.spend()) break;
      out.push_back(abs(binder, body));
    }
  }

  // Spine rule: (x)t1...tn with ctx(x) = B1 -> ... -> Bn -> goal literally.
  for (auto& [name, ty] : ctx.entries()) {
    TypePtr cur = ty;
    std::vector<TypePtr> arg_types;
    for (;;) {
      if (alpha_eq_type(cur, goal)) {
        std::vector<std::vector<TermPtr>> choices;
        bool feasible = true;
        for (auto& bt : arg_types) {
          choices.push_back(enum_rec(ctx, bt, depth - 1, st));
          if (choices.back().empty()) {
            feasible = false;
            break;
          }
        }
        if (feasible) {
          std::vector<size_t> idx(choices.size(), 0);
          for (;;) {
            TermPtr t = var(name);
            for (size_t i = 0; i < choices.size(); ++i) t = app(t, choices[i][idx[i]]);
            if (!st.spend()) break;
            out.push_back(t);
            size_t i = 0;
            for (; i < choices.size(); ++i) {
              if (++idx[i] < choices[i].size()) break;
              idx[i] = 0;
            }
            if (i == choices.size() || choices.empty()) break;
          }
        }
      }
      if (cur->kind != Type::Kind::Arrow) break;
      arg_types.push_back(cur->left);
      cur = cur->right;
    }
  }

  // Deduplicate up to alpha via the canonical printed form.
  std::map<std::string, TermPtr> uniq;
  for (auto& t : out) {
    if (st.size_cap > 0 && term_size(t) > st.size_cap) continue;
    uniq.emplace(print_term(t), t);
  }
  out.clear();
  for (auto& [k, t] : uniq) out.push_back(t);
  return out;
}
}  // namespace detail

// All beta-normal inhabitants of `a` under `ctx` with derivation height at
// most max_depth, up to alpha-equivalence.
inline EnumResult enumerate_f0(const Context& ctx, const TypePtr& a, SearchBudget budget,
                               int size_cap = 0) {
  detail::EnumState st{budget.max_terms, true, size_cap};
  auto terms = detail::enum_rec(ctx, a, budget.max_depth, st);
  std::sort(terms.begin(), terms.end(), [](const TermPtr& x, const TermPtr& y) {
    int sx = term_size(x), sy = term_size(y);
    if (sx != sy) return sx < sy;
    return print_term(x) < print_term(y);
  });
  return {std::move(terms), st.complete};
}

// ---------------------------------------------------------------------------
// Output-type probing. Searches F0 inhabitants under alpha : O; an inhabitant
// with alpha free is a genuine counterexample (F0 is a fragment of F), while
// absence is evidence only up to the budget.

struct ProbeVerdict {
  bool counterexample = false;
  TermPtr term;                        // set when counterexample
  std::optional<Derivation> evidence;  // validated F0 derivation of the witness
  SearchBudget budget;
  bool search_complete = true;
};

inline ProbeVerdict probe_output(const TypePtr& s, SearchBudget budget,
                                 const std::string& alpha = "alpha") {
  if (!is_closed(s))
    throw std::invalid_argument("probe_output: type must be closed");
  if (occurs_atom(s, "O"))
    throw std::invalid_argument("probe_output: the constant O must be fresh for the type");
  Context ctx({{alpha, atom("O")}});
  auto result = enumerate_f0(ctx, s, budget);
  for (auto& t : result.terms) {
    if (free_term_vars(t).count(alpha)) {
      ProbeVerdict v;
      v.counterexample = true;
      v.term = t;
      v.evidence = derive_f0(ctx, t, s);
      v.budget = budget;
      v.search_complete = result.complete;
      return v;
    }
  }
  return {false, nullptr, std::nullopt, budget, result.complete};
}

// Variant taking an explicitly supplied witness with its full derivation.
// Searching only the quantifier-elimination-free fragment cannot surface
// witnesses that need instantiation, so those arrive as proof trees; the
// verdict then carries the validated derivation as evidence.
inline ProbeVerdict probe_output_with_witness(const TypePtr& s, const TermPtr& t,
                                              const Derivation& d, SearchBudget budget,
                                              const std::string& alpha = "alpha") {
  if (!is_normal(t))
    throw NonNormalError("probe_output_with_witness: witness is not normal");
  if (!free_term_vars(t).count(alpha))
    throw std::invalid_argument("probe_output_with_witness: " + alpha +
                                " is not free in the witness");
  if (!check_derivation_f(d)) throw std::invalid_argument("invalid derivation");
  Context expected({{alpha, atom("O")}});
  if (!context_eq(d.ctx, expected) || !alpha_eq(d.term, t) || !alpha_eq_type(d.type, s))
    throw std::invalid_argument("derivation does not conclude " + alpha + " : O |- t : S");
  ProbeVerdict v;
  v.counterexample = true;
  v.term = t;
  v.evidence = d;
  v.budget = budget;
  return v;
}

// ---------------------------------------------------------------------------
// Input-type refuters.

// (t, d) witnesses that e is not an input type: d proves |- t : e in full F
// while the F0 procedure rejects the same judgment.
inline bool check_input_counterexample(const TypePtr& e, const TermPtr& t,
                                       const Derivation& d) {
  if (!is_normal(t))
    throw NonNormalError("check_input_counterexample: witness is not normal");
  if (!check_derivation_f(d)) throw std::invalid_argument("invalid derivation");
  if (!d.ctx.empty() || !alpha_eq(d.term, t) || !alpha_eq_type(d.type, e))
    throw std::invalid_argument("derivation does not conclude |- t : e");
  return !check_f0(Context{}, t, e);
}

struct RefutationResult {
  int n;          // arrow count of e, plus one
  TermPtr u;      // normal form of t with p_n substituted for alpha
  bool f0_rejects;
};

inline bool alpha_in_applied_position(const TermPtr& t, const std::string& alpha) {
  switch (t->kind) {
    case Term::Kind::Var: return false;
    case Term::Kind::Abs:
      return t->name != alpha && alpha_in_applied_position(t->sub, alpha);
    case Term::Kind::App:
      if (t->sub->kind == Term::Kind::Var && t->sub->name == alpha) return true;
      return alpha_in_applied_position(t->sub, alpha) ||
             alpha_in_applied_position(t->arg, alpha);
  }
  return false;
}

// Given alpha : O |- t : e (validated via d, with alpha free and never
// applied), substituting p_n for alpha with n = lg(e) + 1 yields a normal
// closed term the F0 procedure must reject, certifying e is not an input
// type.
inline RefutationResult refute_input_via_output(const TypePtr& e, const TermPtr& t,
                                                const Derivation& d,
                                                const std::string& alpha = "alpha") {
  if (!is_normal(t)) throw NonNormalError("refute_input_via_output: t is not normal");
  if (!free_term_vars(t).count(alpha))
    throw std::invalid_argument("refute_input_via_output: " + alpha + " is not free in t");
  if (alpha_in_applied_position(t, alpha))
    throw std::invalid_argument("refute_input_via_output: " + alpha +
                                " occurs in applied position");
  if (!is_closed(e) || occurs_atom(e, "O"))
    throw std::invalid_argument(
        "refute_input_via_output: e must be closed and free of the constant O");
  if (!check_derivation_f(d)) throw std::invalid_argument("invalid derivation");
  Context expected({{alpha, atom("O")}});
  if (!context_eq(d.ctx, expected) || !alpha_eq(d.term, t) || !alpha_eq_type(d.type, e))
    throw std::invalid_argument("derivation does not conclude alpha : O |- t : e");
  int n = lg(e) + 1;
  TermPtr u = subst_term(t, alpha, pn(n));
  if (!is_normal(u))
    throw std::logic_error("refute_input_via_output: substitution created a redex");
  return {n, u, !check_f0(Context{}, u, e)};
}

}  // namespace f0kit
