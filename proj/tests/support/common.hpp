#pragma once

// Shared helpers for the test suite: data-dir access, corpus loading, and an
// independent brute-force enumerator used as the search oracle.

#include <fstream>
#include <map>
#include <string>
#include <vector>

#include "f0kit/reduce.hpp"
#include "f0kit/systems.hpp"

namespace testsupport {

inline std::string data_dir() { return F0KIT_DATA_DIR; }

inline std::vector<std::string> read_lines(const std::string& path) {
  std::ifstream in(path);
  std::vector<std::string> out;
  std::string line;
  while (std::getline(in, line))
    if (!line.empty()) out.push_back(line);
  return out;
}

inline std::vector<f0kit::Judgment> load_corpus() {
  std::vector<f0kit::Judgment> out;
  for (auto& line : read_lines(data_dir() + "/corpus.judgments"))
    out.push_back(f0kit::parse_judgment(line));
  return out;
}

// ---------------------------------------------------------------------------
// Brute-force enumeration of ALL beta-normal terms of a given size whose free
// variables come from `free_pool`; binders are named by de-Bruijn level, so
// alpha-distinct shapes appear exactly once. Entirely independent of the
// goal-directed search it cross-checks.

inline void brute_normal(int size, const std::vector<std::string>& env, int depth,
                         bool allow_abs, std::vector<f0kit::TermPtr>& out) {
  using namespace f0kit;
  if (size <= 0) return;
  if (size == 1) {
    for (auto& v : env) out.push_back(var(v));
    return;
  }
  if (allow_abs) {
    std::string b = "b" + std::to_string(depth);
    auto env2 = env;
    env2.push_back(b);
    std::vector<TermPtr> bodies;
    brute_normal(size - 1, env2, depth + 1, true, bodies);
    for (auto& t : bodies) out.push_back(abs(b, t));
  }
  // Applications: function part may not be an abstraction (no redexes).
  for (int ls = 1; ls < size - 1; ++ls) {
    std::vector<TermPtr> fs, as;
    brute_normal(ls, env, depth, false, fs);
    brute_normal(size - 1 - ls, env, depth, true, as);
    for (auto& f : fs)
      for (auto& a : as) out.push_back(app(f, a));
  }
}

inline std::vector<f0kit::TermPtr> all_normal_terms(int max_size,
                                                    const std::vector<std::string>& free_pool) {
  std::vector<f0kit::TermPtr> out;
  for (int s = 1; s <= max_size; ++s) brute_normal(s, free_pool, 0, true, out);
  return out;
}

// Deduplicated-by-alpha set of accepted inhabitants, keyed by canonical print.
inline std::map<std::string, f0kit::TermPtr> brute_inhabitants(
    const f0kit::Context& ctx, const f0kit::TypePtr& goal, int max_size) {
  std::vector<std::string> pool;
  for (auto& [n, t] : ctx.entries()) pool.push_back(n);
  std::map<std::string, f0kit::TermPtr> out;
  for (auto& t : all_normal_terms(max_size, pool))
    if (f0kit::check_f0(ctx, t, goal)) out.emplace(f0kit::print_term(t), t);
  return out;
}

}  // namespace testsupport
