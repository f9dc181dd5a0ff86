#include <catch2/catch_amalgamated.hpp>

#include "f0kit/json_io.hpp"
#include "f0kit/witnesses.hpp"
#include "support/common.hpp"

using namespace f0kit;

namespace {
bool deriv_eq(const Derivation& a, const Derivation& b) {
  if (a.rule != b.rule) return false;
  if (!context_eq(a.ctx, b.ctx)) return false;
  if (!term_eq(a.term, b.term)) return false;
  if (print_type(a.type) != print_type(b.type)) return false;
  if (a.rule == Rule::ForallI && a.var != b.var) return false;
  if (a.rule == Rule::ForallE && print_type(a.inst) != print_type(b.inst)) return false;
  if (a.premises.size() != b.premises.size()) return false;
  for (size_t i = 0; i < a.premises.size(); ++i)
    if (!deriv_eq(a.premises[i], b.premises[i])) return false;
  return true;
}
}  // namespace

TEST_CASE("shipped derivations load, validate and match the builders") {
  struct Entry {
    std::string file;
    Derivation built;
  };
  std::vector<Entry> entries = {{"d_separation.json", d_separation_derivation()},
                                {"nn_witness.json", nn_witness_derivation()},
                                {"storage_nat.json", storage_nat_derivation()}};
  for (auto& e : entries) {
    auto d = derivation_from_json(
        load_json_file(testsupport::data_dir() + "/derivations/" + e.file));
    REQUIRE(check_derivation_f(d));
    REQUIRE(deriv_eq(d, e.built));
  }
}

TEST_CASE("derivation JSON round-trips") {
  for (auto& d : {d_separation_derivation(), nn_witness_derivation(),
                  storage_nat_derivation(), suc_derivation(), zero_derivation()}) {
    auto j = derivation_to_json(d);
    auto back = derivation_from_json(j);
    REQUIRE(deriv_eq(back, d));
    REQUIRE(check_derivation_f(back));
  }
}

TEST_CASE("derivation JSON schema") {
  auto j = derivation_to_json(d_separation_derivation());
  REQUIRE(j.at("rule") == "forall_i");
  REQUIRE(j.at("var") == "X");
  REQUIRE(j.at("conclusion").at("ctx") == "");
  REQUIRE(j.at("conclusion").at("term").get<std::string>() == print_term(d_separation_term()));
  REQUIRE(j.at("conclusion").at("type").get<std::string>() == print_type(type_d()));
  REQUIRE(j.at("premises").is_array());
  // the instantiation step records its witness type
  const json* cur = &j;
  bool found = false;
  std::vector<const json*> stack = {&j};
  while (!stack.empty()) {
    cur = stack.back();
    stack.pop_back();
    if (cur->at("rule") == "forall_e") {
      REQUIRE(cur->contains("instantiation"));
      found = true;
    }
    for (auto& p : cur->at("premises")) stack.push_back(&p);
  }
  REQUIRE(found);
}

TEST_CASE("trace JSON schema") {
  TermPtr start = parse_term("(\\x. (x) x) \\y. y");
  auto tr = normalize(start, 100);
  auto j = trace_to_json(tr);
  REQUIRE(j.at("initial").get<std::string>() == print_term(start));
  REQUIRE(j.at("status") == "normalized");
  REQUIRE(j.at("steps").is_array());
  REQUIRE(j.at("steps").size() == tr.steps.size());
  for (auto& s : j.at("steps")) {
    REQUIRE(s.contains("strategy"));
    REQUIRE(s.contains("path"));
    REQUIRE(s.contains("result"));
  }
  REQUIRE(j.at("steps").back().at("result") == "\\y. y");
}

TEST_CASE("classification JSON schema") {
  auto j = classify_to_json(type_nat());
  REQUIRE(j.at("proper") == true);
  REQUIRE(j.at("closed") == true);
  REQUIRE(j.at("forall_positive") == true);
  REQUIRE(j.at("lg") == 3);
  REQUIRE(j.at("ends_with").contains("O"));
  REQUIRE(j.at("ends_with").at("O") == false);

  // free variables of the type get their own ends_with entries
  auto j2 = classify_to_json(parse_type("Y -> X"));
  REQUIRE(j2.at("closed") == false);
  REQUIRE(j2.at("ends_with").at("X") == true);
  REQUIRE(j2.at("ends_with").at("Y") == false);
}

TEST_CASE("probe verdict JSON") {
  auto v = probe_output(type_bool(), {4, 1000});
  auto j = probe_verdict_to_json(v);
  REQUIRE(j.at("counterexample") == false);
  REQUIRE(j.at("budget").at("max_depth") == 4);
  REQUIRE_FALSE(j.contains("term"));

  auto vw = probe_output_with_witness(arrow(type_nat(), type_nat()), nn_witness_term(),
                                      nn_witness_derivation(), {4, 1000});
  auto jw = probe_verdict_to_json(vw);
  REQUIRE(jw.at("counterexample") == true);
  REQUIRE(jw.at("term").get<std::string>() == print_term(nn_witness_term()));
  REQUIRE(jw.contains("evidence"));
  REQUIRE(check_derivation_f(derivation_from_json(jw.at("evidence"))));
}

TEST_CASE("refutation JSON") {
  auto r = refute_input_via_output(arrow(type_nat(), type_nat()), nn_witness_term(),
                                   nn_witness_derivation());
  auto j = refutation_to_json(r);
  REQUIRE(j.at("n") == 8);
  REQUIRE(j.at("f0_rejects") == true);
  REQUIRE(alpha_eq(parse_term(j.at("u").get<std::string>()), r.u));
}

TEST_CASE("storage report JSON") {
  auto spec = storage_spec_from_json(
      load_json_file(testsupport::data_dir() + "/storage/nat_spec.json"));
  spec.values.resize(2);  // keep the test quick
  auto report = run_storage(storage_nat_operator(), spec);
  auto j = storage_report_to_json(report);
  REQUIRE(j.at("is_omm") == true);
  REQUIRE(j.at("values").size() == 2);
  for (auto& v : j.at("values")) {
    REQUIRE(v.at("ok") == true);
    REQUIRE(v.contains("tau"));
    REQUIRE(v.contains("tau_normal"));
    for (auto& run : v.at("runs")) REQUIRE(run.at("outcome") == "match");
  }
  REQUIRE(alpha_eq(parse_term(j.at("values")[1].at("tau_normal").get<std::string>()),
                   church_nat(1)));
}

TEST_CASE("shipped type files parse to the stock types") {
  struct Entry {
    std::string file;
    TypePtr ty;
  };
  for (auto& e : std::vector<Entry>{{"Id.ty", type_id()},
                                    {"B.ty", type_bool()},
                                    {"N.ty", type_nat()},
                                    {"D.ty", type_d()}}) {
    auto text = load_text_file(testsupport::data_dir() + "/types/" + e.file);
    REQUIRE(alpha_eq_type(parse_type(text), e.ty));
  }
}
