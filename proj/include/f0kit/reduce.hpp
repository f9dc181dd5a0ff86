#pragma once

// Beta reduction under two strategies: leftmost-outermost normalization and
// weak head reduction. Every step records its redex path so traces replay.
// Paths are root-to-redex strings over L (function), R (argument), B (body).

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "f0kit/term.hpp"

namespace f0kit {

enum class Strategy { Full, WeakHead };
enum class TraceStatus { Normalized, WhnfReached, FuelExhausted };

inline std::string strategy_name(Strategy s) {
  return s == Strategy::Full ? "full" : "weak-head";
}
inline std::string status_name(TraceStatus s) {
  switch (s) {
    case TraceStatus::Normalized: return "normalized";
    case TraceStatus::WhnfReached: return "whnf-reached";
    case TraceStatus::FuelExhausted: return "fuel-exhausted";
  }
  return {};
}

struct TraceStep {
  Strategy strategy;
  std::string path;
  TermPtr result;
};

struct ReductionTrace {
  TermPtr initial;
  std::vector<TraceStep> steps;
  TraceStatus status = TraceStatus::Normalized;

  TermPtr final_term() const { return steps.empty() ? initial : steps.back().result; }
};

inline bool is_redex(const TermPtr& t) {
  return t->kind == Term::Kind::App && t->sub->kind == Term::Kind::Abs;
}

inline bool is_normal(const TermPtr& t) {
  switch (t->kind) {
    case Term::Kind::Var: return true;
    case Term::Kind::Abs: return is_normal(t->sub);
    case Term::Kind::App:
      return t->sub->kind != Term::Kind::Abs && is_normal(t->sub) && is_normal(t->arg);
  }
  return false;
}

// Leftmost-outermost redex path, if any.
inline std::optional<std::string> find_redex(const TermPtr& t) {
  if (is_redex(t)) return std::string{};
  switch (t->kind) {
    case Term::Kind::Var: return std::nullopt;
    case Term::Kind::Abs:
      if (auto p = find_redex(t->sub)) return "B" + *p;
      return std::nullopt;
    case Term::Kind::App:
      if (auto p = find_redex(t->sub)) return "L" + *p;
      if (auto p = find_redex(t->arg)) return "R" + *p;
      return std::nullopt;
  }
  return std::nullopt;
}

inline TermPtr subterm_at(const TermPtr& t, const std::string& path) {
  TermPtr cur = t;
  for (char c : path) {
    switch (c) {
      case 'L': cur = cur->sub; break;
      case 'R': cur = cur->arg; break;
      case 'B': cur = cur->sub; break;
      default: throw std::invalid_argument("bad redex path");
    }
  }
  return cur;
}

// Contracts the redex at `path`; throws if the path does not point at a redex.
inline TermPtr contract_at(const TermPtr& t, const std::string& path, size_t i = 0) {
  if (i == path.size()) {
    if (!is_redex(t)) throw std::invalid_argument("path does not point at a redex");
    return subst_term(t->sub->sub, t->sub->name, t->arg);
  }
  switch (path[i]) {
    case 'L': return app(contract_at(t->sub, path, i + 1), t->arg);
    case 'R': return app(t->sub, contract_at(t->arg, path, i + 1));
    case 'B': return abs(t->name, contract_at(t->sub, path, i + 1));
    default: throw std::invalid_argument("bad redex path");
  }
}

// Weak head redex of (\x u) v v1 ... vm; nullopt on weak head normal forms
// (variable spines and abstractions).
inline std::optional<std::string> find_weak_head_redex(const TermPtr& t) {
  if (t->kind != Term::Kind::App) return std::nullopt;
  if (t->sub->kind == Term::Kind::Abs) return std::string{};
  if (auto p = find_weak_head_redex(t->sub)) return "L" + *p;
  return std::nullopt;
}

inline std::optional<TermPtr> weak_head_step(const TermPtr& t) {
  if (auto p = find_weak_head_redex(t)) return contract_at(t, *p);
  return std::nullopt;
}

inline ReductionTrace weak_head_reduce(TermPtr t, long fuel = 1000) {
  ReductionTrace trace;
  trace.initial = t;
  for (;;) {
    auto path = find_weak_head_redex(t);
    if (!path) {
      trace.status = is_normal(t) ? TraceStatus::Normalized : TraceStatus::WhnfReached;
      return trace;
    }
    if (fuel-- <= 0) {
      trace.status = TraceStatus::FuelExhausted;
      return trace;
    }
    t = contract_at(t, *path);
    trace.steps.push_back({Strategy::WeakHead, *path, t});
  }
}

inline ReductionTrace normalize(TermPtr t, long fuel = 10000) {
  ReductionTrace trace;
  trace.initial = t;
  for (;;) {
    auto path = find_redex(t);
    if (!path) {
      trace.status = TraceStatus::Normalized;
      return trace;
    }
    if (fuel-- <= 0) {
      trace.status = TraceStatus::FuelExhausted;
      return trace;
    }
    t = contract_at(t, *path);
    trace.steps.push_back({Strategy::Full, *path, t});
  }
}

// Normal form or nullopt on fuel exhaustion.
inline std::optional<TermPtr> normal_form(const TermPtr& t, long fuel = 10000) {
  auto tr = normalize(t, fuel);
  if (tr.status != TraceStatus::Normalized) return std::nullopt;
  return tr.final_term();
}

// (head) u1 ... un with a maximal spine.
inline std::pair<TermPtr, std::vector<TermPtr>> head_decompose(const TermPtr& t) {
  std::vector<TermPtr> args;
  TermPtr cur = t;
  while (cur->kind == Term::Kind::App) {
    args.push_back(cur->arg);
    cur = cur->sub;
  }
  std::reverse(args.begin(), args.end());
  return {cur, args};
}

// A variable applied to zero or more normal arguments.
inline bool is_simple(const TermPtr& t) {
  auto [head, args] = head_decompose(t);
  if (head->kind != Term::Kind::Var) return false;
  for (auto& a : args)
    if (!is_normal(a)) return false;
  return true;
}

}  // namespace f0kit
