#pragma once

// Seeded random generators for property tests: normal terms, proper types,
// ends-with-X type families, quantifier-free types, simple terms, and a
// stream of machine-checked F0 judgments.

#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "f0kit/classify.hpp"
#include "f0kit/search.hpp"

namespace f0kit {

class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  int pick(int lo, int hi) {  // inclusive bounds
    return std::uniform_int_distribution<int>(lo, hi)(rng_);
  }
  bool coin(double p = 0.5) {
    return std::uniform_real_distribution<double>(0.0, 1.0)(rng_) < p;
  }
  template <typename T>
  const T& choose(const std::vector<T>& xs) {
    return xs[pick(0, static_cast<int>(xs.size()) - 1)];
  }

  // -------------------------------------------------------------------------
  // Terms. Never emits a redex: an application head is always drawn from the
  // variable pool, so the result is beta-normal by construction.

  TermPtr normal_term(int size, std::vector<std::string> pool) {
    if (size <= 1 || pool.empty()) {
      if (pool.empty() || coin(0.4)) {
        std::string b = binder_name(pool);
        pool.push_back(b);
        return abs(b, pool.empty() ? var(b) : var(choose(pool)));
      }
      return var(choose(pool));
    }
    switch (pool.empty() ? 0 : pick(0, 2)) {
      case 0: {
        std::string b = binder_name(pool);
        pool.push_back(b);
        return abs(b, normal_term(size - 1, pool));
      }
      case 1:
        return var(choose(pool));
      default: {
        TermPtr t = var(choose(pool));
        int n = pick(1, 2);
        for (int i = 0; i < n; ++i) t = app(t, normal_term((size - 1) / n, pool));
        return t;
      }
    }
  }

  // (x)u1...un with normal arguments.
  TermPtr simple_term(const std::vector<std::string>& pool, int max_args = 2,
                      int arg_size = 3) {
    TermPtr t = var(choose(pool));
    int n = pick(0, max_args);
    for (int i = 0; i < n; ++i) t = app(t, normal_term(arg_size, pool));
    return t;
  }

  // -------------------------------------------------------------------------
  // Types. Every forall is repaired to bind an occurring variable, so all
  // results are proper.

  TypePtr quantifier_free_type(int size, const std::vector<std::string>& pool) {
    if (size <= 1 || coin(0.3)) return tvar(choose(pool));
    return arrow(quantifier_free_type(size / 2, pool),
                 quantifier_free_type(size - size / 2, pool));
  }

  TypePtr proper_type(int size, std::vector<std::string> pool) {
    if (size <= 1) return tvar(choose(pool));
    switch (pick(0, 3)) {
      case 0:
        return tvar(choose(pool));
      case 1: {
        std::string x = tvar_name(pool);
        pool.push_back(x);
        TypePtr body = proper_type(size - 1, pool);
        if (!free_type_vars(body).count(x)) body = arrow(tvar(x), body);
        return forall(x, body);
      }
      default:
        return arrow(proper_type(size / 2, pool), proper_type(size - size / 2, pool));
    }
  }

  // Proper type with x guaranteed free.
  TypePtr proper_type_with_free(const std::string& x, int size,
                                std::vector<std::string> pool) {
    pool.push_back(x);
    TypePtr t = proper_type(size, pool);
    if (!free_type_vars(t).count(x)) t = arrow(t, tvar(x));
    return t;
  }

  // Built by the generation rules themselves: K; B -> A; forall Y. A, Y != K.
  TypePtr ends_with_type(const std::string& k, int steps,
                         std::vector<std::string> pool) {
    pool.push_back(k);  // never introduce a binder shadowing k
    TypePtr a = tvar(k);
    for (int i = 0; i < steps; ++i) {
      if (coin(0.7)) {
        a = arrow(proper_type(pick(1, 3), pool), a);
      } else {
        std::string y = tvar_name(pool);
        pool.push_back(y);
        // Keep the quantifier proper: bind a variable that occurs.
        a = forall(y, arrow(tvar(y), a));
      }
    }
    return a;
  }

  // A1 -> ... -> Ak -> Y where exactly one chosen Ai ends with x and the tail
  // Y avoids x: the quantified-decomposition family with an x-ending argument
  // part.
  TypePtr arg_ends_with_type(const std::string& x, int parts,
                             std::vector<std::string> pool) {
    if (parts < 1) parts = 1;
    int special = pick(0, parts - 1);
    TypePtr a = tvar(choose(pool));
    for (int i = parts - 1; i >= 0; --i) {
      TypePtr part = i == special ? ends_with_type(x, pick(0, 2), pool)
                                  : proper_type(pick(1, 3), pool);
      a = arrow(part, a);
    }
    return a;
  }

  // -------------------------------------------------------------------------
  // F0-accepted judgments: random context and goal, inhabitants found by the
  // goal-directed search. Every emitted judgment passes check_f0.

  // Bound type variables are renamed so alpha-equivalent quantified types
  // become syntactically identical across the context and the goal; without
  // this, quantifier erasure could send alpha-equal types to distinct
  // quantifier-free types and break erased derivability.
  std::vector<Judgment> f0_judgments(int count, SearchBudget budget = {4, 200}) {
    std::vector<Judgment> out;
    std::vector<std::string> tpool = {"X", "Y", "Z"};
    while (static_cast<int>(out.size()) < count) {
      std::map<std::string, int> classes;
      Context ctx;
      int nvars = pick(0, 2);
      static const char* names[] = {"a", "b"};
      for (int i = 0; i < nvars; ++i)
        ctx.insert(names[i], canon_quantifiers(proper_type(pick(1, 3), tpool), classes));
      TypePtr goal = canon_quantifiers(proper_type(pick(1, 5), tpool), classes);
      for (auto& t : enumerate_f0(ctx, goal, budget).terms) {
        out.push_back({ctx, t, goal, System::F0});
        if (static_cast<int>(out.size()) >= count) break;
      }
    }
    return out;
  }

 private:
  // Nameless key identifying the alpha-class of a type.
  static void db_key(const TypePtr& t, std::vector<std::string>& env, std::string& out) {
    switch (t->kind) {
      case Type::Kind::Var: {
        for (int i = static_cast<int>(env.size()) - 1; i >= 0; --i)
          if (env[i] == t->name) {
            out += "#" + std::to_string(env.size() - 1 - i);
            return;
          }
        out += t->name;
        return;
      }
      case Type::Kind::Atom:
        out += "@" + t->name;
        return;
      case Type::Kind::Arrow:
        out += "(";
        db_key(t->left, env, out);
        out += ">";
        db_key(t->right, env, out);
        out += ")";
        return;
      case Type::Kind::Forall:
        out += "!";
        env.push_back(t->name);
        db_key(t->right, env, out);
        env.pop_back();
        return;
    }
  }

  // Rename every quantifier binder to a name determined by the alpha-class of
  // its quantified subtype, so alpha-equal types print identically.
  static TypePtr canon_quantifiers(const TypePtr& t, std::map<std::string, int>& classes) {
    switch (t->kind) {
      case Type::Kind::Var:
      case Type::Kind::Atom:
        return t;
      case Type::Kind::Arrow:
        return arrow(canon_quantifiers(t->left, classes),
                     canon_quantifiers(t->right, classes));
      case Type::Kind::Forall: {
        TypePtr body = canon_quantifiers(t->right, classes);
        std::string key;
        std::vector<std::string> env = {t->name};
        db_key(body, env, key);
        auto it = classes.emplace("!" + key, static_cast<int>(classes.size())).first;
        std::string q = "Q" + std::to_string(it->second);
        return forall(q, subst_type(body, tvar(q), t->name));
      }
    }
    return t;
  }

  std::string binder_name(const std::vector<std::string>& pool) {
    static const char* names[] = {"x", "y", "z", "u", "v", "w"};
    std::set<std::string> taken(pool.begin(), pool.end());
    for (auto* n : names)
      if (!taken.count(n)) return n;
    return fresh_name("x", taken);
  }

  std::string tvar_name(const std::vector<std::string>& pool) {
    static const char* names[] = {"X", "Y", "Z", "W", "V", "U"};
    std::set<std::string> taken(pool.begin(), pool.end());
    for (auto* n : names)
      if (!taken.count(n)) return n;
    return fresh_name("X", taken);
  }

  std::mt19937_64 rng_;
};

}  // namespace f0kit
