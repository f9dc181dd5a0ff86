// Command-line surface: one subcommand per library operation, text or JSON
// output. Exit codes: 0 accept/success, 1 reject/counterexample, 2 usage or
// internal error.

#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "f0kit/gen.hpp"
#include "f0kit/json_io.hpp"
#include "f0kit/witnesses.hpp"

using namespace f0kit;

namespace {

constexpr int kAccept = 0;
constexpr int kReject = 1;
constexpr int kUsage = 2;

std::string read_stdin() {
  std::stringstream ss;
  ss << std::cin.rdbuf();
  return ss.str();
}

std::string strip(const std::string& s) {
  size_t b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  size_t e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

// Inline string wins, then file, then stdin.
std::string resolve_input(const std::string& inline_text, const std::string& file) {
  if (!inline_text.empty()) return inline_text;
  if (!file.empty()) return strip(load_text_file(file));
  return strip(read_stdin());
}

struct Common {
  std::string term, term_file;
  std::string type, type_file;
  std::string ctx;
  std::string alpha = "alpha";
  long fuel = 10000;
  int depth = 6;
  long max_terms = 100000;
  bool json_out = false;
  std::uint64_t seed = 1;
};

void add_term_opts(CLI::App* cmd, Common& c) {
  cmd->add_option("--term", c.term, "term text");
  cmd->add_option("--term-file", c.term_file, "file containing a term");
}
void add_type_opts(CLI::App* cmd, Common& c) {
  cmd->add_option("--type", c.type, "type text");
  cmd->add_option("--type-file", c.type_file, "file containing a type");
}

TermPtr get_term(const Common& c) { return parse_term(resolve_input(c.term, c.term_file)); }
TypePtr get_type(const Common& c) { return parse_type(resolve_input(c.type, c.type_file)); }
Context get_ctx(const Common& c) { return parse_context(c.ctx); }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"toolkit for polymorphic lambda calculus type systems"};
  app.require_subcommand(1);
  Common c;

  // ---- parse --------------------------------------------------------------
  auto* cmd_parse = app.add_subcommand("parse", "parse a term or type, print canonical form");
  add_term_opts(cmd_parse, c);
  add_type_opts(cmd_parse, c);

  // ---- normalize / whnf ---------------------------------------------------
  auto* cmd_norm = app.add_subcommand("normalize", "beta-normalize a term");
  add_term_opts(cmd_norm, c);
  cmd_norm->add_option("--fuel", c.fuel, "step budget");
  cmd_norm->add_flag("--json", c.json_out, "emit the full trace as JSON");

  auto* cmd_whnf = app.add_subcommand("whnf", "weak-head reduce a term");
  add_term_opts(cmd_whnf, c);
  cmd_whnf->add_option("--fuel", c.fuel, "step budget");
  cmd_whnf->add_flag("--json", c.json_out, "emit the full trace as JSON");

  // ---- checkers -----------------------------------------------------------
  auto* cmd_f0 = app.add_subcommand("check-f0",
                                    "decide typability of a normal term without "
                                    "quantifier elimination");
  add_term_opts(cmd_f0, c);
  add_type_opts(cmd_f0, c);
  cmd_f0->add_option("--ctx", c.ctx, "context, e.g. \"x : X, y : X -> X\"");
  cmd_f0->add_flag("--json", c.json_out, "emit the emitted derivation as JSON");

  auto* cmd_s = app.add_subcommand("check-s", "decide typability in the quantifier-free system");
  add_term_opts(cmd_s, c);
  add_type_opts(cmd_s, c);
  cmd_s->add_option("--ctx", c.ctx, "context");

  std::string deriv_file;
  auto* cmd_cd = app.add_subcommand("check-deriv", "validate an explicit derivation");
  cmd_cd->add_option("--deriv", deriv_file, "derivation JSON file");
  auto* cmd_cdff = app.add_subcommand("check-deriv-ff",
                                      "validate a derivation under the restricted "
                                      "quantifier-elimination side condition");
  cmd_cdff->add_option("--deriv", deriv_file, "derivation JSON file");

  // ---- type utilities -----------------------------------------------------
  auto* cmd_erase = app.add_subcommand("erase", "strip all quantifiers from a type");
  add_type_opts(cmd_erase, c);
  cmd_erase->add_option("--ctx", c.ctx, "also erase this context");

  auto* cmd_classify = app.add_subcommand("classify", "report syntactic type predicates");
  add_type_opts(cmd_classify, c);

  auto* cmd_godel = app.add_subcommand("godel", "double-negation translation of a type");
  add_type_opts(cmd_godel, c);

  // ---- transformers -------------------------------------------------------
  std::string tvar_flag, inst_flag, delta_flag;
  std::vector<std::string> args_flag;
  auto* cmd_gent = app.add_subcommand("gen-T", "generate the forward coercion term");
  add_type_opts(cmd_gent, c);
  cmd_gent->add_option("--var", tvar_flag, "distinguished type variable X")->required();
  cmd_gent->add_option("--inst", inst_flag, "instantiation type G")->required();
  cmd_gent->add_option("--alpha-var", c.alpha, "name of the distinguished term variable");
  cmd_gent->add_flag("--json", c.json_out, "also emit the typing derivation");

  auto* cmd_gentp = app.add_subcommand("gen-Tprime", "generate the backward coercion term");
  add_type_opts(cmd_gentp, c);
  cmd_gentp->add_option("--var", tvar_flag, "distinguished type variable X")->required();
  cmd_gentp->add_option("--inst", inst_flag, "instantiation type G")->required();
  cmd_gentp->add_option("--alpha-var", c.alpha, "name of the distinguished term variable");
  cmd_gentp->add_flag("--json", c.json_out, "also emit the typing derivation");

  auto* cmd_probe = app.add_subcommand("alpha-probe",
                                       "normalize the backward coercion applied to a "
                                       "simple term and locate the distinguished variable");
  add_type_opts(cmd_probe, c);
  cmd_probe->add_option("--var", tvar_flag, "distinguished type variable X")->required();
  cmd_probe->add_option("--inst", inst_flag, "instantiation type G")->required();
  cmd_probe->add_option("--delta", delta_flag, "simple term")->required();
  cmd_probe->add_option("--args", args_flag, "extra applied arguments");
  cmd_probe->add_option("--alpha-var", c.alpha, "name of the distinguished term variable");
  cmd_probe->add_option("--fuel", c.fuel, "step budget");

  // ---- search -------------------------------------------------------------
  int size_cap = 0;
  auto* cmd_enum = app.add_subcommand("enumerate", "list normal inhabitants of a type");
  add_type_opts(cmd_enum, c);
  cmd_enum->add_option("--ctx", c.ctx, "context");
  cmd_enum->add_option("--depth", c.depth, "derivation height bound");
  cmd_enum->add_option("--max-terms", c.max_terms, "search budget");
  cmd_enum->add_option("--size-cap", size_cap, "drop terms larger than this");

  auto* cmd_po = app.add_subcommand("probe-output",
                                    "search for an inhabitant leaking the distinguished "
                                    "variable (exit 1 when found)");
  std::string witness_term, witness_deriv;
  add_type_opts(cmd_po, c);
  cmd_po->add_option("--depth", c.depth, "derivation height bound");
  cmd_po->add_option("--max-terms", c.max_terms, "search budget");
  cmd_po->add_option("--alpha-var", c.alpha, "name of the distinguished term variable");
  cmd_po->add_option("--witness-term", witness_term,
                     "explicit counterexample term (validated, skips the search)");
  cmd_po->add_option("--witness-deriv", witness_deriv,
                     "derivation JSON file typing the explicit witness");

  auto* cmd_ri = app.add_subcommand("refute-input",
                                    "substitute a projection for the distinguished "
                                    "variable and re-check (exit 0 when rejected)");
  add_type_opts(cmd_ri, c);
  add_term_opts(cmd_ri, c);
  cmd_ri->add_option("--deriv", deriv_file, "derivation JSON file")->required();
  cmd_ri->add_option("--alpha-var", c.alpha, "name of the distinguished term variable");

  // ---- storage ------------------------------------------------------------
  std::string op_file, spec_file;
  long storage_fuel = 50000;
  auto* cmd_storage = app.add_subcommand("storage-check",
                                         "run a candidate storage operator against a spec "
                                         "(exit 0 iff every value matches)");
  cmd_storage->add_option("--operator", op_file, "file containing the operator term")->required();
  cmd_storage->add_option("--spec", spec_file, "spec JSON file")->required();
  cmd_storage->add_option("--fuel", storage_fuel, "head-reduction budget per run");

  CLI11_PARSE(app, argc, argv);

  try {
    if (cmd_parse->parsed()) {
      if (!c.type.empty() || !c.type_file.empty()) {
        std::cout << print_type(get_type(c)) << "\n";
      } else {
        std::cout << print_term(get_term(c)) << "\n";
      }
      return kAccept;
    }
    if (cmd_norm->parsed() || cmd_whnf->parsed()) {
      TermPtr t = get_term(c);
      ReductionTrace tr = cmd_norm->parsed() ? normalize(t, c.fuel)
                                             : weak_head_reduce(t, c.fuel);
      if (c.json_out) std::cout << trace_to_json(tr).dump(2) << "\n";
      else std::cout << print_term(tr.final_term()) << "\n";
      return tr.status == TraceStatus::FuelExhausted ? kReject : kAccept;
    }
    if (cmd_f0->parsed()) {
      auto d = derive_f0(get_ctx(c), get_term(c), get_type(c));
      if (d && c.json_out) std::cout << derivation_to_json(*d).dump(2) << "\n";
      return d ? kAccept : kReject;
    }
    if (cmd_s->parsed()) {
      return check_s(get_ctx(c), get_term(c), get_type(c)) ? kAccept : kReject;
    }
    if (cmd_cd->parsed() || cmd_cdff->parsed()) {
      Derivation d = derivation_from_json(load_json_file(deriv_file));
      DerivCheck r = cmd_cd->parsed() ? check_derivation_f(d) : check_derivation_ff(d);
      if (!r) std::cerr << "invalid at [" << r.path << "]: " << r.message << "\n";
      return r ? kAccept : kReject;
    }
    if (cmd_erase->parsed()) {
      if (!c.ctx.empty()) std::cout << print_context(erase_context(get_ctx(c))) << " |- \n";
      std::cout << print_type(erase_type(get_type(c))) << "\n";
      return kAccept;
    }
    if (cmd_classify->parsed()) {
      std::cout << classify_to_json(get_type(c)).dump(2) << "\n";
      return kAccept;
    }
    if (cmd_godel->parsed()) {
      std::cout << print_type(godel_translate(get_type(c))) << "\n";
      return kAccept;
    }
    if (cmd_gent->parsed() || cmd_gentp->parsed()) {
      TransformerPair p = gen_transformers(get_type(c), tvar_flag,
                                           parse_type(inst_flag), c.alpha);
      TermPtr t = cmd_gent->parsed() ? p.t_term : p.t_prime_term;
      if (c.json_out) {
        auto [fwd, bwd] = certify_transformers(p, c.alpha);
        const Derivation& d = cmd_gent->parsed() ? fwd : bwd;
        std::cout << json{{"term", print_term(t)}, {"derivation", derivation_to_json(d)}}
                         .dump(2)
                  << "\n";
      } else {
        std::cout << print_term(t) << "\n";
      }
      return kAccept;
    }
    if (cmd_probe->parsed()) {
      std::vector<TermPtr> extra;
      for (auto& a : args_flag) extra.push_back(parse_term(a));
      AlphaProbe p = alpha_probe(get_type(c), tvar_flag, parse_type(inst_flag),
                                 parse_term(delta_flag), extra, c.alpha, c.fuel);
      std::cout << alpha_probe_to_json(p).dump(2) << "\n";
      return kAccept;
    }
    if (cmd_enum->parsed()) {
      auto r = enumerate_f0(get_ctx(c), get_type(c), {c.depth, c.max_terms}, size_cap);
      for (auto& t : r.terms) std::cout << print_term(t) << "\n";
      if (!r.complete) std::cerr << "warning: budget exhausted, list incomplete\n";
      return kAccept;
    }
    if (cmd_po->parsed()) {
      if (witness_term.empty() != witness_deriv.empty()) {
        std::cerr << "error: --witness-term and --witness-deriv must be given together\n";
        return kUsage;
      }
      ProbeVerdict v =
          witness_term.empty()
              ? probe_output(get_type(c), {c.depth, c.max_terms}, c.alpha)
              : probe_output_with_witness(get_type(c), parse_term(witness_term),
                                          derivation_from_json(load_json_file(witness_deriv)),
                                          {c.depth, c.max_terms}, c.alpha);
      std::cout << probe_verdict_to_json(v).dump(2) << "\n";
      return v.counterexample ? kReject : kAccept;
    }
    if (cmd_ri->parsed()) {
      Derivation d = derivation_from_json(load_json_file(deriv_file));
      RefutationResult r = refute_input_via_output(get_type(c), get_term(c), d, c.alpha);
      std::cout << refutation_to_json(r).dump(2) << "\n";
      return r.f0_rejects ? kAccept : kReject;
    }
    if (cmd_storage->parsed()) {
      TermPtr op = parse_term(strip(load_text_file(op_file)));
      StorageSpec spec = storage_spec_from_json(load_json_file(spec_file));
      StorageReport report =
          spec.input_type
              ? run_storage_pair(op, *spec.input_type, spec.data_type, spec, storage_fuel)
              : run_storage(op, spec, storage_fuel);
      std::cout << storage_report_to_json(report).dump(2) << "\n";
      return report.is_omm ? kAccept : kReject;
    }
  } catch (const ParseError& e) {
    std::cerr << "syntax error at " << e.pos << ": " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
