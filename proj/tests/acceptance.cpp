// Acceptance gate: one self-contained check per shipped guarantee, each
// printing a single PASS/FAIL line. Exit status is nonzero iff any check
// fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "f0kit/gen.hpp"
#include "f0kit/json_io.hpp"
#include "f0kit/search.hpp"
#include "f0kit/storage.hpp"
#include "f0kit/transform.hpp"
#include "f0kit/witnesses.hpp"
#include "support/common.hpp"

using namespace f0kit;

namespace {

int failures = 0;

void report(const std::string& name, bool ok, const std::string& detail = "") {
  std::printf("%s %s%s%s\n", ok ? "PASS" : "FAIL", name.c_str(),
              detail.empty() ? "" : " — ", detail.c_str());
  if (!ok) ++failures;
}

double run_timed(const std::function<bool()>& body, bool& ok) {
  auto start = std::chrono::steady_clock::now();
  ok = body();
  std::chrono::duration<double> dt = std::chrono::steady_clock::now() - start;
  return dt.count();
}

bool contains_alpha_eq(const std::vector<TermPtr>& xs, const TermPtr& t) {
  for (auto& x : xs)
    if (alpha_eq(x, t)) return true;
  return false;
}

std::string secs(double s) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2fs", s);
  return buf;
}

}  // namespace

int main() {
  // 1. The booleans have exactly two normal inhabitants.
  try {
    bool ok = false;
    double t = run_timed(
        [&] {
          auto r = enumerate_f0(Context{}, type_bool(), {4, 100000});
          return r.complete && r.terms.size() == 2 &&
                 contains_alpha_eq(r.terms, parse_term("\\x. \\y. x")) &&
                 contains_alpha_eq(r.terms, parse_term("\\x. \\y. y"));
        },
        ok);
    report("boolean inhabitants: exactly the two projections", ok && t < 1.0, secs(t));
  } catch (const std::exception& e) {
    report("boolean inhabitants: exactly the two projections", false, e.what());
  }

  // 2. The shipped separation derivation splits full typing from the
  // elimination-free procedure.
  try {
    auto d = derivation_from_json(
        load_json_file(testsupport::data_dir() + "/derivations/d_separation.json"));
    bool ok = check_derivation_f(d) && !check_f0(Context{}, d_separation_term(), type_d()) &&
              check_input_counterexample(type_d(), d_separation_term(), d);
    report("separation witness for D validates and is rejected without elimination", ok);
  } catch (const std::exception& e) {
    report("separation witness for D validates and is rejected without elimination", false,
           e.what());
  }

  // 3. Closed inhabitants of Id, B, N never leak the distinguished variable.
  try {
    bool ok = true;
    long found = 0;
    for (auto& s : {type_id(), type_bool(), type_nat()}) {
      auto r = enumerate_f0(Context{}, s, {6, 200000});
      found += static_cast<long>(r.terms.size());
      for (auto& t : r.terms)
        if (!check_f0(Context{}, t, s)) ok = false;
      auto v = probe_output(s, {6, 200000});
      if (v.counterexample) ok = false;
    }
    report("Id, B, N inhabitants re-check and leak-free probes",
           ok && found > 0, std::to_string(found) + " terms");
  } catch (const std::exception& e) {
    report("Id, B, N inhabitants re-check and leak-free probes", false, e.what());
  }

  // 4. Erasure preserves derivability on >= 1000 generated judgments.
  try {
    Gen gen(101);
    auto judgments = gen.f0_judgments(1000);
    long bad = 0;
    for (auto& j : judgments)
      if (!check_s(erase_context(j.ctx), j.subject, erase_type(j.type))) ++bad;
    report("erased judgments stay derivable",
           judgments.size() >= 1000 && bad == 0,
           std::to_string(judgments.size()) + " judgments, " + std::to_string(bad) +
               " failures");
  } catch (const std::exception& e) {
    report("erased judgments stay derivable", false, e.what());
  }

  // 5. Coercion typings certify on >= 200 random proper types in < 30 s.
  try {
    bool ok = false;
    double t = run_timed(
        [&] {
          Gen gen(103);
          for (int i = 0; i < 200; ++i) {
            TypePtr a = gen.proper_type_with_free("X", gen.pick(1, 12), {"Y"});
            TypePtr g = gen.proper_type(gen.pick(1, 6), {"Z", "W"});
            auto p = gen_transformers(a, "X", g);
            auto [fwd, bwd] = certify_transformers(p);
            if (!check_derivation_f(fwd) || !check_derivation_f(bwd)) return false;
            if (!alpha_eq(fwd.term, p.t_term) || !alpha_eq(bwd.term, p.t_prime_term))
              return false;
          }
          return true;
        },
        ok);
    report("200 coercion typing certificates validate", ok && t < 30.0, secs(t));
  } catch (const std::exception& e) {
    report("200 coercion typing certificates validate", false, e.what());
  }

  // 6. Backward coercions expose the distinguished variable: >= 100 probes per
  // family, all within fuel.
  try {
    bool ok = true;
    for (int family = 0; family < 2; ++family) {
      Gen gen(107 + family);
      for (int i = 0; i < 100; ++i) {
        TypePtr a = family == 0 ? gen.ends_with_type("X", gen.pick(0, 3), {"Y", "Z"})
                                : gen.arg_ends_with_type("X", gen.pick(1, 3), {"Y", "Z"});
        TermPtr delta = gen.simple_term({"y", "z", "w"});
        std::vector<TermPtr> args;
        int r = gen.pick(0, 2);
        for (int j = 0; j < r; ++j) args.push_back(gen.normal_term(3, {"y", "z", "w"}));
        auto probe = alpha_probe(a, "X", type_id(), delta, args);
        if (probe.fuel_exhausted || !probe.alpha_free_in_nf) ok = false;
      }
    }
    report("100 leak probes per family, all terminating", ok);
  } catch (const std::exception& e) {
    report("100 leak probes per family, all terminating", false, e.what());
  }

  // 7. Projection refutations: N -> N at n = 8 and the D variant.
  try {
    auto r = refute_input_via_output(arrow(type_nat(), type_nat()), nn_witness_term(),
                                     nn_witness_derivation());
    TermPtr dt = abs("x", app(var("x"), var("alpha")));
    Context dc({{"alpha", atom("O")}, {"x", parse_type("forall Y. Y -> X")}});
    Derivation dd = d_forall_i(
        d_arrow_i(d_arrow_e(d_forall_e(d_ax(dc, "x"), atom("O")), d_ax(dc, "alpha"))), "X");
    auto r2 = refute_input_via_output(type_d(), dt, dd);
    report("projection refutations for N -> N (n = 8) and D",
           r.n == 8 && r.f0_rejects && r2.n == lg(type_d()) + 1 && r2.f0_rejects);
  } catch (const std::exception& e) {
    report("projection refutations for N -> N (n = 8) and D", false, e.what());
  }

  // 8. Storage positive control: numerals 0..5, >= 3 presentations each,
  // a validated operator typing, in < 5 s.
  try {
    bool ok = false;
    double t = run_timed(
        [&] {
          auto d = derivation_from_json(
              load_json_file(testsupport::data_dir() + "/derivations/storage_nat.json"));
          if (!check_derivation_f(d)) return false;
          if (!alpha_eq_type(d.type, omm_type(type_nat()))) return false;
          auto spec = storage_spec_from_json(
              load_json_file(testsupport::data_dir() + "/storage/nat_spec.json"));
          if (spec.values.size() < 6) return false;
          for (auto& v : spec.values)
            if (v.presentations.size() < 3) return false;
          auto rep = run_storage(storage_nat_operator(), spec);
          if (!rep.is_omm) return false;
          for (auto& vr : rep.values)
            for (auto& sigma : vr.sigmas)
              if (!sigma.empty()) return false;  // presentation-insensitive pattern
          return true;
        },
        ok);
    report("storage positive control on numerals 0..5", ok && t < 5.0, secs(t));
  } catch (const std::exception& e) {
    report("storage positive control on numerals 0..5", false, e.what());
  }

  // 9. Storage negative control: the swap operator varies its pattern.
  try {
    auto spec = storage_spec_from_json(
        load_json_file(testsupport::data_dir() + "/storage/neg_spec.json"));
    auto rep = run_storage(parse_term("\\x. \\y. (y) x"), spec);
    bool varied = false;
    for (auto& vr : rep.values)
      for (auto& sigma : vr.sigmas)
        if (!sigma.empty()) varied = true;
    report("storage negative control fails presentation insensitivity",
           !rep.is_omm && varied);
  } catch (const std::exception& e) {
    report("storage negative control fails presentation insensitivity", false, e.what());
  }

  // 10. Every corpus term normalizes within default fuel.
  try {
    bool ok = true;
    long count = 0;
    for (auto& j : testsupport::load_corpus()) {
      ++count;
      if (!check_f0(j.ctx, j.subject, j.type)) ok = false;
      auto tr = normalize(j.subject, 10000);
      if (tr.status != TraceStatus::Normalized) ok = false;
    }
    report("accepted corpus terms all normalize", ok && count > 0,
           std::to_string(count) + " terms");
  } catch (const std::exception& e) {
    report("accepted corpus terms all normalize", false, e.what());
  }

  // 11. The goal-directed search matches an independent brute-force oracle.
  try {
    struct Goal {
      Context ctx;
      TypePtr type;
    };
    std::vector<Goal> goals = {{Context{}, type_id()},
                               {Context{}, type_bool()},
                               {Context({{"alpha", atom("O")}}), atom("O")}};
    bool ok = true;
    for (auto& g : goals) {
      auto brute = testsupport::brute_inhabitants(g.ctx, g.type, 7);
      auto fast = enumerate_f0(g.ctx, g.type, {8, 500000}, 7);
      if (!fast.complete || brute.size() != fast.terms.size()) ok = false;
      for (auto& [key, t] : brute)
        if (!contains_alpha_eq(fast.terms, t)) ok = false;
    }
    report("search agrees with the brute-force oracle at size <= 7", ok);
  } catch (const std::exception& e) {
    report("search agrees with the brute-force oracle at size <= 7", false, e.what());
  }

  return failures == 0 ? 0 : 1;
}
