#pragma once
// Object-level truth for Λ_n: the valuation term val, the satisfaction
// formulas Sat″_n, Sat′_n, Sat_n, diagonalization and the interpretation 𝓕
// of fixpoint predicates with almost negative operators into HAP.
//
// Conventions: the environment is v0 and the formula code is v1. An
// environment is a term e with e·⌜v_j⌝ the value of v_j.

#include "fixkit/syntax.hpp"

#include <map>

namespace fixkit {

class SatisfactionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct ValPackage {
  Term val;                             // closed; val·e·⌜c⌝ evaluates the term coded by ⌜c⌝ under e
  std::map<std::string, Term> syntax;   // the code predicates and operations Sat uses
};

const ValPackage& build_val();

// id updated at ⌜v_j⌝ to v_j for j < k
Term env_term(unsigned k);
// e updated at ⌜v_j⌝ to the numeral values[j]
Term env_of(std::span<const Nat> values);

struct SatFamily {
  unsigned n = 0;
  Formula sat_raw;  // Sat″_n
  Formula sat_nf;   // Sat′_n, in Λnf_n
  Formula sat;      // Sat_n(e, F) = Sat′_n(e, λ_n·F)
};

// cached; safe to call from several threads
SatFamily build_sat(unsigned n);

// f with v0 := e and v1 := F simultaneously
Formula instantiate_sat(const Formula& f, const Term& e, const Term& F);

// ψ with ψ(v⃗) ↔ φ(v⃗, ⌜ψ⌝). φ has free variables exactly v_0..v_k and
// level ≤ n; the slot is v_k.
Formula diagonalize(const Formula& phi, unsigned n);
// same with an explicit slot; FV(φ) ⊆ {v_0..v_slot}
Formula diagonalize_at(const Formula& phi, unsigned n, unsigned slot);

// The diagonal formula standing for I_Φ(v_0..v_{k-1}); ⊥ when Φ is not
// almost negative.
Formula interpret_fixpoint(const RelSym& I);
// replaces every fixpoint atom; L_HAP is left alone
Formula interpret_F(const Formula& phi);

struct SatObligation {
  std::string name;
  Formula statement;  // closed
};
// The compositionality clauses at level n: conjunction, environment
// relevance and substitution. Statements only, not proofs.
std::vector<SatObligation> sat_obligations(unsigned n);

}  // namespace fixkit
