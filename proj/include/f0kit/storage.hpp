#pragma once

// Storage-operator execution harness: head-reduce (T) presentation f for
// every sampled presentation of every datum, extract the common result
// pattern by anti-unification, and check the pattern against the typed
// canonical data.

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "f0kit/reduce.hpp"
#include "f0kit/systems.hpp"

namespace f0kit {

struct ValueSpec {
  std::string label;
  TermPtr canonical;
  std::vector<TermPtr> presentations;
  TermPtr expected;  // expected output datum; defaults to canonical
};

struct StorageSpec {
  TypePtr data_type;                  // D, or S when paired with input_type
  std::optional<TypePtr> input_type;  // E for the pair (E, S) form
  std::vector<ValueSpec> values;
  std::string continuation = "f";
};

// D* -> ((D -> Bot) -> Bot); the pair form is E* -> ((S -> Bot) -> Bot).
inline TypePtr omm_type(const TypePtr& d) {
  return arrow(godel_translate(d), neg_type(neg_type(d)));
}
inline TypePtr omm_type_pair(const TypePtr& e, const TypePtr& s) {
  return arrow(godel_translate(e), neg_type(neg_type(s)));
}

// ---------------------------------------------------------------------------
// Beta-equivalent presentation generators: identity-wrapped and redex-padded
// variants of a canonical term. The definition quantifies over all
// beta-equivalent presentations; this is the documented sampled family.

inline std::vector<TermPtr> sample_presentations(const TermPtr& canonical) {
  auto fv = free_term_vars(canonical);
  std::string z = fresh_name("z", fv);
  std::string w = fresh_name("w", fv);
  std::vector<TermPtr> out;
  out.push_back(canonical);
  out.push_back(app(abs(z, var(z)), canonical));                    // (\z.z) t
  out.push_back(app(abs(z, canonical), abs(w, var(w))));            // (\z.t) (\w.w)
  if (canonical->kind == Term::Kind::Abs) {                         // eta-expanded body wrap
    out.push_back(abs(canonical->name,
                      app(abs(z, var(z)), canonical->sub)));        // \x. (\z.z) body
  }
  return out;
}

// ---------------------------------------------------------------------------
// Anti-unification (least general generalization) over alpha-canonicalized
// terms. Pattern variables are named _g0, _g1, ...; equal disagreement
// tuples share a variable.

namespace detail {
inline TermPtr canon_binders(const TermPtr& t, int depth,
                             std::vector<std::pair<std::string, std::string>>& env) {
  switch (t->kind) {
    case Term::Kind::Var:
      for (auto it = env.rbegin(); it != env.rend(); ++it)
        if (it->first == t->name) return var(it->second);
      return t;
    case Term::Kind::Abs: {
      std::string b = "_b" + std::to_string(depth);
      env.emplace_back(t->name, b);
      auto body = canon_binders(t->sub, depth + 1, env);
      env.pop_back();
      return abs(b, body);
    }
    case Term::Kind::App: {
      auto f = canon_binders(t->sub, depth, env);
      auto a = canon_binders(t->arg, depth, env);
      return app(f, a);
    }
  }
  return t;
}

inline TermPtr canon_binders(const TermPtr& t) {
  std::vector<std::pair<std::string, std::string>> env;
  return canon_binders(t, 0, env);
}

struct AntiUnifier {
  std::map<std::string, std::string> seen;  // disagreement key -> pattern var
  std::vector<std::map<std::string, TermPtr>> sigmas;
  int next = 0;

  explicit AntiUnifier(size_t n) : sigmas(n) {}

  TermPtr disagree(const std::vector<TermPtr>& ts) {
    std::string key;
    for (auto& t : ts) key += print_term(t) + "\x1f";
    auto it = seen.find(key);
    std::string name;
    if (it != seen.end()) {
      name = it->second;
    } else {
      name = "_g" + std::to_string(next++);
      seen.emplace(key, name);
      for (size_t i = 0; i < ts.size(); ++i) sigmas[i][name] = ts[i];
    }
    return var(name);
  }

  TermPtr lgg(const std::vector<TermPtr>& ts) {
    const TermPtr& first = ts[0];
    bool same_kind = true;
    for (auto& t : ts)
      if (t->kind != first->kind) same_kind = false;
    if (same_kind) {
      switch (first->kind) {
        case Term::Kind::Var: {
          bool all = true;
          for (auto& t : ts)
            if (t->name != first->name) all = false;
          if (all) return first;
          break;
        }
        case Term::Kind::Abs: {
          bool all = true;
          for (auto& t : ts)
            if (t->name != first->name) all = false;
          if (all) {
            std::vector<TermPtr> bodies;
            for (auto& t : ts) bodies.push_back(t->sub);
            return abs(first->name, lgg(bodies));
          }
          break;
        }
        case Term::Kind::App: {
          std::vector<TermPtr> fs, as;
          for (auto& t : ts) {
            fs.push_back(t->sub);
            as.push_back(t->arg);
          }
          return app(lgg(fs), lgg(as));
        }
      }
    }
    return disagree(ts);
  }
};
}  // namespace detail

struct AntiInstance {
  TermPtr pattern;
  std::vector<std::map<std::string, TermPtr>> sigmas;  // one per input
};

inline AntiInstance anti_unify(const std::vector<TermPtr>& terms) {
  if (terms.empty()) throw std::invalid_argument("anti_unify: no terms");
  std::vector<TermPtr> canon;
  for (auto& t : terms) canon.push_back(detail::canon_binders(t));
  detail::AntiUnifier au(canon.size());
  TermPtr pattern = au.lgg(canon);
  return {pattern, std::move(au.sigmas)};
}

// ---------------------------------------------------------------------------
// The harness proper.

enum class StorageOutcome { Match, HeadMismatch, FuelExhausted };

inline std::string storage_outcome_name(StorageOutcome o) {
  switch (o) {
    case StorageOutcome::Match: return "match";
    case StorageOutcome::HeadMismatch: return "head-mismatch";
    case StorageOutcome::FuelExhausted: return "fuel-exhausted";
  }
  return {};
}

struct PresentationRun {
  TermPtr presentation;
  ReductionTrace trace;
  StorageOutcome outcome = StorageOutcome::HeadMismatch;
  TermPtr residual;  // u in (f) u, when the head matched
};

struct ValueReport {
  std::string label;
  std::vector<PresentationRun> runs;
  TermPtr tau;                                         // anti-instance pattern
  std::vector<std::map<std::string, TermPtr>> sigmas;  // per presentation
  TermPtr tau_normal;
  bool tau_ok = false;  // tau's normal form is a typed canonical datum
  bool ok = false;
};

struct StorageReport {
  std::vector<ValueReport> values;
  bool is_omm = false;
};

namespace detail {
inline PresentationRun run_one(const TermPtr& op, const TermPtr& theta,
                               const std::string& cont, long fuel) {
  PresentationRun run;
  run.presentation = theta;
  run.trace = weak_head_reduce(app(app(op, theta), var(cont)), fuel);
  if (run.trace.status == TraceStatus::FuelExhausted) {
    run.outcome = StorageOutcome::FuelExhausted;
    return run;
  }
  TermPtr final_term = run.trace.final_term();
  // Required shape: (f) u, exactly one argument under the continuation.
  if (final_term->kind == Term::Kind::App &&
      final_term->sub->kind == Term::Kind::Var && final_term->sub->name == cont) {
    run.outcome = StorageOutcome::Match;
    run.residual = final_term->arg;
  }
  return run;
}
}  // namespace detail

// pre: T closed; the continuation name fresh for T and every presentation.
inline StorageReport run_storage_against(const TermPtr& op, const StorageSpec& spec,
                                         const TypePtr& output_type, long fuel) {
  if (!free_term_vars(op).empty())
    throw std::invalid_argument("run_storage: operator must be closed");
  StorageReport report;
  report.is_omm = true;
  for (auto& value : spec.values) {
    if (free_term_vars(value.canonical).count(spec.continuation))
      throw std::invalid_argument("run_storage: continuation not fresh for canonical term");
    ValueReport vr;
    vr.label = value.label;
    bool all_match = true;
    std::vector<TermPtr> residuals;
    for (auto& theta : value.presentations) {
      if (free_term_vars(theta).count(spec.continuation))
        throw std::invalid_argument("run_storage: continuation not fresh for presentation");
      vr.runs.push_back(detail::run_one(op, theta, spec.continuation, fuel));
      if (vr.runs.back().outcome != StorageOutcome::Match) all_match = false;
      else residuals.push_back(vr.runs.back().residual);
    }
    if (all_match && !residuals.empty()) {
      AntiInstance ai = anti_unify(residuals);
      vr.tau = ai.pattern;
      vr.sigmas = std::move(ai.sigmas);
      auto nf = normal_form(vr.tau, fuel);
      if (nf) {
        vr.tau_normal = *nf;
        TermPtr expected = value.expected ? value.expected : value.canonical;
        auto expected_nf = normal_form(expected, fuel);
        vr.tau_ok = expected_nf && alpha_eq(*expected_nf, vr.tau_normal) &&
                    check_f0(Context{}, *expected_nf, output_type);
      }
    }
    vr.ok = all_match && vr.tau_ok;
    if (!vr.ok) report.is_omm = false;
    report.values.push_back(std::move(vr));
  }
  return report;
}

inline StorageReport run_storage(const TermPtr& op, const StorageSpec& spec,
                                 long fuel = 50000) {
  return run_storage_against(op, spec, spec.data_type, fuel);
}

// Inputs typed at e, outputs required typed at s.
inline StorageReport run_storage_pair(const TermPtr& op, const TypePtr& e, const TypePtr& s,
                                      const StorageSpec& spec, long fuel = 50000) {
  (void)e;  // inputs are validated when the spec is authored
  return run_storage_against(op, spec, s, fuel);
}

}  // namespace f0kit
