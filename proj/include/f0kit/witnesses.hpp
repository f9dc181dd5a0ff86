#pragma once

// Stock types and hand-built witness terms with their explicit typing
// derivations: the separation example for D, the open inhabitant of N -> N,
// and a storage operator for Church numerals with its full F-derivation.

#include <utility>

#include "f0kit/classify.hpp"
#include "f0kit/derivation.hpp"
#include "f0kit/systems.hpp"

namespace f0kit {

// Id = forall X. X -> X
inline TypePtr type_id() { return forall("X", arrow(tvar("X"), tvar("X"))); }

// B = forall X. X -> (X -> X)
inline TypePtr type_bool() {
  return forall("X", arrow(tvar("X"), arrow(tvar("X"), tvar("X"))));
}

// N = forall X. X -> ((X -> X) -> X)
inline TypePtr type_nat() {
  return forall("X",
                arrow(tvar("X"), arrow(arrow(tvar("X"), tvar("X")), tvar("X"))));
}

// D = forall X. (forall Y. Y -> X) -> X
inline TypePtr type_d() {
  return forall("X", arrow(forall("Y", arrow(tvar("Y"), tvar("X"))), tvar("X")));
}

// ---------------------------------------------------------------------------
// |- \x. (x) \y. y : D, via forall-elimination at Y := X -> X. The same
// judgment is rejected by the quantifier-elimination-free procedure, which
// separates the two systems.

inline TermPtr d_separation_term() { return abs("x", app(var("x"), abs("y", var("y")))); }

inline Derivation d_separation_derivation() {
  TypePtr xx = arrow(tvar("X"), tvar("X"));
  Context c1({{"x", forall("Y", arrow(tvar("Y"), tvar("X")))}});
  Derivation fun = d_forall_e(d_ax(c1, "x"), xx);  // x : (X -> X) -> X
  Derivation id = d_arrow_i(d_ax(c1.extended("y", tvar("X")), "y"));
  Derivation body = d_arrow_e(fun, id);
  return d_forall_i(d_arrow_i(body), "X");
}

// ---------------------------------------------------------------------------
// alpha : O |- \n.\x.\z. (((n) \y.x) \u.u) alpha : N -> N. The numeral
// argument is instantiated at X := O -> X, which lets the head swallow alpha.

inline TermPtr nn_witness_term() {
  return abs("n", abs("x", abs("z", app(app(app(var("n"), abs("y", var("x"))),
                                            abs("u", var("u"))),
                                        var("alpha")))));
}

// Derived under `ambient + n : N + ...`; the default ambient is alpha : O.
inline Derivation nn_witness_derivation_under(const Context& ambient,
                                              const std::string& alpha = "alpha") {
  TypePtr o = atom("O");
  TypePtr ox = arrow(o, tvar("X"));
  Context c = ambient.extended("n", type_nat())
                  .extended("x", tvar("X"))
                  .extended("z", arrow(tvar("X"), tvar("X")));
  Derivation dn = d_forall_e(d_ax(c, "n"), ox);  // n : (O->X) -> (((O->X)->(O->X)) -> (O->X))
  Derivation dyx = d_arrow_i(d_ax(c.extended("y", o), "x"));          // \y.x : O -> X
  Derivation did = d_arrow_i(d_ax(c.extended("u", ox), "u"));         // \u.u : (O->X) -> (O->X)
  Derivation dapp = d_arrow_e(d_arrow_e(dn, dyx), did);               // : O -> X
  Derivation body = d_arrow_e(dapp, d_ax(c, alpha));                  // : X
  Derivation inner = d_forall_i(d_arrow_i(d_arrow_i(body)), "X");     // : N
  return d_arrow_i(inner);                                            // : N -> N
}

inline Derivation nn_witness_derivation(const std::string& alpha = "alpha") {
  return nn_witness_derivation_under(Context({{alpha, atom("O")}}), alpha);
}

// ---------------------------------------------------------------------------
// Successor on Church numerals: \m.\x.\s. (s) (((m) x) s) : N -> N.

inline TermPtr suc_term(const std::string& binder = "m") {
  return abs(binder,
             abs("x", abs("s", app(var("s"), app(app(var(binder), var("x")), var("s"))))));
}

// |- suc : N -> N under any ambient context (the binder is renamed apart).
inline Derivation suc_derivation(const Context& ambient = Context{}) {
  std::set<std::string> taken;
  for (auto& [n, t] : ambient.entries()) taken.insert(n);
  std::string m = fresh_name("m", taken);
  TypePtr x = tvar("X");
  Context c1 = ambient.extended(m, type_nat());
  Context c2 = c1.extended("x", x);
  Context c3 = c2.extended("s", arrow(x, x));
  Derivation dm = d_forall_e(d_ax(c3, m), x);  // m : X -> ((X -> X) -> X)
  Derivation dmx = d_arrow_e(d_arrow_e(dm, d_ax(c3, "x")), d_ax(c3, "s"));  // : X
  Derivation body = d_arrow_e(d_ax(c3, "s"), dmx);                          // : X
  Derivation nat = d_forall_i(d_arrow_i(d_arrow_i(body)), "X");             // : N
  return d_arrow_i(nat);
}

// |- zero : N under any ambient context.
inline Derivation zero_derivation(const Context& ambient = Context{}) {
  TypePtr x = tvar("X");
  Context c2 = ambient.extended("x", x).extended("s", arrow(x, x));
  return d_forall_i(d_arrow_i(d_arrow_i(d_ax(c2, "x"))), "X");
}

// ---------------------------------------------------------------------------
// Storage operator for Church numerals:
//   T = \n.\f. (((n) f) \h.\m'.(h) (suc) m') zero
// Head-reducing (T) theta f on any presentation theta of k rebuilds the
// numeral as (f) (suc)^k zero. Its typing |- T : N* -> ((N -> Bot) -> Bot)
// instantiates the translated numeral at X := N.

inline TermPtr storage_nat_operator() {
  std::string m = "m'";  // apart from the suc binder
  TermPtr b = abs("h", abs(m, app(var("h"), app(suc_term(), var(m)))));
  return abs("n", abs("f", app(app(app(var("n"), var("f")), b), church_nat(0))));
}

inline Derivation storage_nat_derivation() {
  TypePtr n = type_nat();
  TypePtr nstar = godel_translate(n);
  TypePtr notn = neg_type(n);
  Context c2({{"n", nstar}, {"f", notn}});
  Derivation dn = d_forall_e(d_ax(c2, "n"), n);  // n : !N -> ((!N -> !N) -> !N)
  Derivation dnf = d_arrow_e(dn, d_ax(c2, "f"));
  Context c3 = c2.extended("h", notn);
  Context c4 = c3.extended("m'", n);
  Derivation dsm = d_arrow_e(suc_derivation(c4), d_ax(c4, "m'"));  // : N
  Derivation db = d_arrow_i(d_arrow_i(d_arrow_e(d_ax(c4, "h"), dsm)));  // : !N -> !N
  Derivation dnb = d_arrow_e(dnf, db);                                  // : !N
  Derivation body = d_arrow_e(dnb, zero_derivation(c2));                // : Bot
  return d_arrow_i(d_arrow_i(body));
}

}  // namespace f0kit
