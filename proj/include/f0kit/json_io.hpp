#pragma once

// JSON (de)serialization for every externally visible record. Terms, types
// and contexts travel as their canonical printed strings.

#include <fstream>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "f0kit/derivation.hpp"
#include "f0kit/search.hpp"
#include "f0kit/storage.hpp"
#include "f0kit/systems.hpp"
#include "f0kit/transform.hpp"

namespace f0kit {

using json = nlohmann::json;

// ---------------------------------------------------------------------------
// Derivations: {rule, conclusion:{ctx, term, type}, var?, instantiation?,
// premises:[...]}.

inline json derivation_to_json(const Derivation& d) {
  json node;
  node["rule"] = rule_name(d.rule);
  node["conclusion"] = {{"ctx", print_context(d.ctx)},
                        {"term", print_term(d.term)},
                        {"type", print_type(d.type)}};
  if (d.rule == Rule::ForallI) node["var"] = d.var;
  if (d.rule == Rule::ForallE) node["instantiation"] = print_type(d.inst);
  node["premises"] = json::array();
  for (auto& p : d.premises) node["premises"].push_back(derivation_to_json(p));
  return node;
}

inline Derivation derivation_from_json(const json& node,
                                       const std::set<std::string>& atoms = default_atoms()) {
  Derivation d;
  d.rule = rule_from_name(node.at("rule").get<std::string>());
  const json& c = node.at("conclusion");
  d.ctx = parse_context(c.at("ctx").get<std::string>(), atoms);
  d.term = parse_term(c.at("term").get<std::string>());
  d.type = parse_type(c.at("type").get<std::string>(), atoms);
  if (node.contains("var")) d.var = node.at("var").get<std::string>();
  if (node.contains("instantiation"))
    d.inst = parse_type(node.at("instantiation").get<std::string>(), atoms);
  if (node.contains("premises"))
    for (auto& p : node.at("premises")) d.premises.push_back(derivation_from_json(p, atoms));
  return d;
}

// ---------------------------------------------------------------------------
// Reduction traces.

inline json trace_to_json(const ReductionTrace& t) {
  json steps = json::array();
  for (auto& s : t.steps)
    steps.push_back({{"strategy", strategy_name(s.strategy)},
                     {"path", s.path},
                     {"result", print_term(s.result)}});
  return {{"initial", print_term(t.initial)},
          {"steps", steps},
          {"status", status_name(t.status)}};
}

// ---------------------------------------------------------------------------
// Classification record. ends_with is reported for every declared atom and
// every free variable of the type.

inline json classify_to_json(const TypePtr& a,
                             const std::set<std::string>& atoms = default_atoms()) {
  Polarity p = polarity(a);
  json ew = json::object();
  std::set<std::string> keys = atoms;
  auto fv = free_type_vars(a);
  keys.insert(fv.begin(), fv.end());
  for (auto& k : keys) ew[k] = ends_with(a, k);
  return {{"proper", is_proper(a)},
          {"closed", is_closed(a)},
          {"forall_positive", p.is_forall_positive},
          {"forall_negative", p.is_forall_negative},
          {"lg", lg(a)},
          {"ends_with", ew}};
}

// ---------------------------------------------------------------------------
// Probe records.

inline json probe_verdict_to_json(const ProbeVerdict& v) {
  json out = {{"counterexample", v.counterexample},
              {"budget", {{"max_depth", v.budget.max_depth}, {"max_terms", v.budget.max_terms}}},
              {"search_complete", v.search_complete}};
  if (v.counterexample) {
    out["term"] = print_term(v.term);
    if (v.evidence) out["evidence"] = derivation_to_json(*v.evidence);
  }
  return out;
}

inline json alpha_probe_to_json(const AlphaProbe& p) {
  json occ = json::array();
  for (auto& o : p.positions)
    occ.push_back({{"path", o.path}, {"argument_of_head", o.argument_of_head}});
  return {{"nf", print_term(p.nf)},
          {"alpha_free_in_nf", p.alpha_free_in_nf},
          {"fuel_exhausted", p.fuel_exhausted},
          {"alpha_positions", occ}};
}

inline json refutation_to_json(const RefutationResult& r) {
  return {{"n", r.n}, {"u", print_term(r.u)}, {"f0_rejects", r.f0_rejects}};
}

// ---------------------------------------------------------------------------
// Storage specs and reports.

inline json storage_spec_to_json(const StorageSpec& s) {
  json values = json::array();
  for (auto& v : s.values) {
    json pres = json::array();
    for (auto& p : v.presentations) pres.push_back(print_term(p));
    json item = {{"label", v.label},
                 {"canonical", print_term(v.canonical)},
                 {"presentations", pres}};
    if (v.expected) item["expected"] = print_term(v.expected);
    values.push_back(item);
  }
  json out = {{"data_type", print_type(s.data_type)},
              {"values", values},
              {"continuation", s.continuation}};
  if (s.input_type) out["input_type"] = print_type(*s.input_type);
  return out;
}

inline StorageSpec storage_spec_from_json(const json& node,
                                          const std::set<std::string>& atoms = default_atoms()) {
  StorageSpec s;
  s.data_type = parse_type(node.at("data_type").get<std::string>(), atoms);
  if (node.contains("input_type"))
    s.input_type = parse_type(node.at("input_type").get<std::string>(), atoms);
  if (node.contains("continuation")) s.continuation = node.at("continuation").get<std::string>();
  for (auto& v : node.at("values")) {
    ValueSpec vs;
    vs.label = v.at("label").get<std::string>();
    vs.canonical = parse_term(v.at("canonical").get<std::string>());
    for (auto& p : v.at("presentations")) vs.presentations.push_back(parse_term(p.get<std::string>()));
    if (v.contains("expected")) vs.expected = parse_term(v.at("expected").get<std::string>());
    s.values.push_back(std::move(vs));
  }
  return s;
}

inline json storage_report_to_json(const StorageReport& r) {
  json values = json::array();
  for (auto& v : r.values) {
    json runs = json::array();
    for (auto& run : v.runs) {
      json rec = {{"presentation", print_term(run.presentation)},
                  {"outcome", storage_outcome_name(run.outcome)},
                  {"steps", run.trace.steps.size()},
                  {"final", print_term(run.trace.final_term())}};
      if (run.residual) rec["residual"] = print_term(run.residual);
      runs.push_back(rec);
    }
    json item = {{"label", v.label}, {"ok", v.ok}, {"runs", runs}};
    if (v.tau) {
      item["tau"] = print_term(v.tau);
      json sigmas = json::array();
      for (auto& sigma : v.sigmas) {
        json m = json::object();
        for (auto& [name, t] : sigma) m[name] = print_term(t);
        sigmas.push_back(m);
      }
      item["sigmas"] = sigmas;
    }
    if (v.tau_normal) item["tau_normal"] = print_term(v.tau_normal);
    values.push_back(item);
  }
  return {{"is_omm", r.is_omm}, {"values", values}};
}

// ---------------------------------------------------------------------------
// File helpers.

inline json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  json j;
  in >> j;
  return j;
}

inline std::string load_text_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::string s((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  return s;
}

}  // namespace f0kit
