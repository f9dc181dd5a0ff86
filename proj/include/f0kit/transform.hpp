#pragma once

// Coercion-term generation between F[G/X] and F[G^o/X] (with G^o the
// O -> (G /\ O) wrapper), explicit typing derivations for both directions,
// and normal-form probes that track occurrences of the distinguished free
// variable.

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "f0kit/classify.hpp"
#include "f0kit/reduce.hpp"
#include "f0kit/systems.hpp"

namespace f0kit {

struct TransformerPair {
  TypePtr for_type;
  std::string wrt_var;
  TypePtr instantiation;
  TermPtr t_term;        // F[G/X] -> F[G^o/X] direction
  TermPtr t_prime_term;  // F[G^o/X] -> F[G/X] direction
};

namespace detail {
inline std::string fresh_binder(const std::string& base, const std::string& alpha) {
  // Binders must never capture the distinguished variable.
  return base == alpha ? base + "'" : base;
}

inline TermPtr gen_t(const TypePtr& f, const std::string& x, const std::string& alpha,
                     bool forward);

inline TermPtr gen_both(const TypePtr& f, const std::string& x, const std::string& alpha,
                        bool forward) {
  if (!free_type_vars(f).count(x)) {
    std::string b = fresh_binder("x", alpha);
    return abs(b, var(b));
  }
  return gen_t(f, x, alpha, forward);
}

inline TermPtr gen_t(const TypePtr& f, const std::string& x, const std::string& alpha,
                     bool forward) {
  std::string bx = fresh_binder("x", alpha);
  switch (f->kind) {
    case Type::Kind::Var: {  // f = X
      if (forward) {
        std::string bb = fresh_binder("beta", alpha);
        std::string bg = fresh_binder("g", alpha);
        return abs(bx, abs(bb, abs(bg, app(app(var(bg), var(bx)), var(alpha)))));
      }
      return abs(bx, app(app(var(bx), var(alpha)), church_bool(true)));
    }
    case Type::Kind::Arrow: {
      std::string by = fresh_binder("y", alpha);
      TermPtr inner = gen_both(f->left, x, alpha, !forward);
      TermPtr outer = gen_both(f->right, x, alpha, forward);
      return abs(bx, abs(by, app(outer, app(var(bx), app(inner, var(by))))));
    }
    case Type::Kind::Forall: {
      // The binder cannot equal x here: x is free in f.
      TermPtr body = gen_both(f->right, x, alpha, forward);
      return abs(bx, app(body, var(bx)));
    }
    case Type::Kind::Atom:
      break;  // unreachable: an atom never contains x free
  }
  throw std::logic_error("gen_t: unreachable type shape");
}
}  // namespace detail

// pre: f proper. The recursion treats X-free subtypes as identities.
inline TransformerPair gen_transformers(const TypePtr& f, const std::string& x,
                                        const TypePtr& g,
                                        const std::string& alpha = "alpha") {
  if (!is_proper(f)) throw std::invalid_argument("gen_transformers: type is not proper");
  return {f, x, g, detail::gen_both(f, x, alpha, true), detail::gen_both(f, x, alpha, false)};
}

// ---------------------------------------------------------------------------
// Typing derivations: ctx |- T_A : A[G/X] -> A[G^o/X] and
// ctx |- T'_A : A[G^o/X] -> A[G/X], for any ctx containing alpha : O.
// Binder names are chosen fresh per context, so the derivation subjects are
// alpha-equal (not identical) to the generated terms.

namespace detail {
struct CertEnv {
  std::string x;
  TypePtr g;
  TypePtr g_circle;
  std::string alpha;
};

inline std::string fresh_term_var(const std::string& base, const Context& ctx) {
  std::set<std::string> avoid;
  for (auto& [n, t] : ctx.entries()) avoid.insert(n);
  return fresh_name(base, avoid);
}

inline Derivation certify_rec(const TypePtr& a, bool forward, const Context& ctx,
                              const CertEnv& env) {
  const TypePtr from_inst = forward ? env.g : env.g_circle;
  const TypePtr to_inst = forward ? env.g_circle : env.g;
  const TypePtr from = subst_type(a, from_inst, env.x);
  const TypePtr to = subst_type(a, to_inst, env.x);

  if (!free_type_vars(a).count(env.x)) {
    std::string bx = fresh_term_var("x", ctx);
    return d_arrow_i(d_ax(ctx.extended(bx, from), bx));
  }

  switch (a->kind) {
    case Type::Kind::Var: {  // a = X
      TypePtr o = atom("O");
      // The product G /\ O with an explicit bound variable.
      std::set<std::string> avoid = free_type_vars(env.g);
      auto ctx_fv = ctx.free_type_vars();
      avoid.insert(ctx_fv.begin(), ctx_fv.end());
      std::string z = fresh_name("Z", avoid);
      TypePtr pair_body = arrow(arrow(env.g, arrow(o, tvar(z))), tvar(z));
      if (forward) {
        // \x. \beta. \g. (g) x alpha : G -> (O -> forall Z. (G -> O -> Z) -> Z)
        std::string bx = fresh_term_var("x", ctx);
        Context c1 = ctx.extended(bx, env.g);
        std::string bb = fresh_term_var("beta", c1);
        Context c2 = c1.extended(bb, o);
        std::string bg = fresh_term_var("g", c2);
        Context c3 = c2.extended(bg, arrow(env.g, arrow(o, tvar(z))));
        Derivation body =
            d_arrow_e(d_arrow_e(d_ax(c3, bg), d_ax(c3, bx)), d_ax(c3, env.alpha));
        return d_arrow_i(d_arrow_i(d_forall_i(d_arrow_i(body), z)));
      }
      // \x. (x) alpha (\a. \b. a) : G^o -> G
      std::string bx = fresh_term_var("x", ctx);
      Context c1 = ctx.extended(bx, arrow(o, forall(z, pair_body)));
      Derivation applied = d_arrow_e(d_ax(c1, bx), d_ax(c1, env.alpha));
      Derivation instantiated = d_forall_e(applied, env.g);  // (G -> O -> G) -> G
      std::string ba = fresh_term_var("x", c1);
      Context c2 = c1.extended(ba, env.g);
      std::string bb2 = fresh_term_var("y", c2);
      Context c3 = c2.extended(bb2, o);
      Derivation one = d_arrow_i(d_arrow_i(d_ax(c3, ba)));
      return d_arrow_i(d_arrow_e(instantiated, one));
    }
    case Type::Kind::Arrow: {
      const TypePtr& b = a->left;
      const TypePtr& c = a->right;
      std::string bx = fresh_term_var("x", ctx);
      Context c1 = ctx.extended(bx, from);
      std::string by = fresh_term_var("y", c1);
      Context c2 = c1.extended(by, subst_type(b, to_inst, env.x));
      Derivation inner = certify_rec(b, !forward, c2, env);
      Derivation arg = d_arrow_e(inner, d_ax(c2, by));
      Derivation applied = d_arrow_e(d_ax(c2, bx), arg);
      Derivation outer = certify_rec(c, forward, c2, env);
      return d_arrow_i(d_arrow_i(d_arrow_e(outer, applied)));
    }
    case Type::Kind::Forall: {
      // Rename the bound variable apart from the context and both targets.
      std::set<std::string> avoid = ctx.free_type_vars();
      auto add = [&](const TypePtr& t) {
        auto fv = free_type_vars(t);
        avoid.insert(fv.begin(), fv.end());
      };
      add(env.g);
      add(env.g_circle);
      add(a);
      avoid.insert(env.x);
      std::string y = fresh_name(a->name, avoid);
      TypePtr body = subst_type(a->right, tvar(y), a->name);
      std::string bx = fresh_term_var("x", ctx);
      Context c1 = ctx.extended(bx, forall(y, subst_type(body, from_inst, env.x)));
      Derivation instantiated = d_forall_e(d_ax(c1, bx), tvar(y));
      Derivation coerced =
          d_arrow_e(certify_rec(body, forward, c1, env), instantiated);
      return d_arrow_i(d_forall_i(coerced, y));
    }
    case Type::Kind::Atom:
      break;  // unreachable
  }
  throw std::logic_error("certify_rec: unreachable type shape");
}
}  // namespace detail

// Explicit F-derivations for both coercion directions, under alpha : O.
inline std::pair<Derivation, Derivation> certify_transformers(const TransformerPair& p,
                                                         const std::string& alpha = "alpha") {
  detail::CertEnv env{p.wrt_var, p.instantiation, circle(p.instantiation), alpha};
  Context base({{alpha, atom("O")}});
  return {detail::certify_rec(p.for_type, true, base, env),
          detail::certify_rec(p.for_type, false, base, env)};
}

// ---------------------------------------------------------------------------
// Normal-form probes: reduce (T'_A) delta t1...tr and report where the
// distinguished variable ends up.

struct AlphaProbe {
  struct Occurrence {
    std::string path;
    bool argument_of_head;  // inside an argument of a spine headed by delta's head
  };
  ReductionTrace trace;
  TermPtr nf;
  bool alpha_free_in_nf = false;
  bool fuel_exhausted = false;
  std::vector<Occurrence> positions;
};

namespace detail {
inline void scan_alpha(const TermPtr& t, const std::string& alpha, const std::string& head,
                       const std::string& path, bool in_arg, bool bound,
                       std::vector<AlphaProbe::Occurrence>& out) {
  switch (t->kind) {
    case Term::Kind::Var:
      if (t->name == alpha && !bound) out.push_back({path, in_arg});
      return;
    case Term::Kind::Abs:
      scan_alpha(t->sub, alpha, head, path + "B", in_arg, bound || t->name == alpha, out);
      return;
    case Term::Kind::App: {
      auto [h, args] = head_decompose(t);
      bool arg_flag = in_arg || (h->kind == Term::Kind::Var && h->name == head);
      // Walk the spine explicitly to keep paths exact.
      std::string p = path;
      std::vector<std::string> arg_paths(args.size());
      for (size_t i = args.size(); i-- > 0;) {
        arg_paths[i] = p + "R";
        p += "L";
      }
      if (h->kind != Term::Kind::Var)
        scan_alpha(h, alpha, head, p, in_arg, bound, out);
      else if (h->name == alpha && !bound)
        out.push_back({p, in_arg});
      for (size_t i = 0; i < args.size(); ++i)
        scan_alpha(args[i], alpha, head, arg_paths[i], arg_flag, bound, out);
      return;
    }
  }
}
}  // namespace detail

// pre: delta simple, x free in a.
inline AlphaProbe alpha_probe(const TypePtr& a, const std::string& x, const TypePtr& g,
                              const TermPtr& delta, const std::vector<TermPtr>& args,
                              const std::string& alpha = "alpha", long fuel = 10000) {
  if (!is_simple(delta))
    throw std::invalid_argument("alpha_probe: delta is not a simple term");
  if (!free_type_vars(a).count(x))
    throw std::invalid_argument("alpha_probe: " + x + " is not free in the type");
  TransformerPair p = gen_transformers(a, x, g, alpha);
  TermPtr subject = app(app(p.t_prime_term, delta), args);
  AlphaProbe probe;
  probe.trace = normalize(subject, fuel);
  probe.nf = probe.trace.final_term();
  probe.fuel_exhausted = probe.trace.status == TraceStatus::FuelExhausted;
  probe.alpha_free_in_nf = free_term_vars(probe.nf).count(alpha) != 0;
  std::string head = head_decompose(delta).first->name;
  detail::scan_alpha(probe.nf, alpha, head, "", false, false, probe.positions);
  return probe;
}

}  // namespace f0kit
