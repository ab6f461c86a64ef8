#pragma once
// Realizer extraction from checked derivations. The hypotheses Γ = γ_1..γ_m
// are realized by one package variable holding a right nested tuple.

#include "fixkit/kernel.hpp"
#include "fixkit/realizability.hpp"

namespace fixkit {

struct ExtractionResult {
  Term realizer;                    // free variables within FV(conclusion) ∪ {package}
  Var package;                      // the hypotheses package variable
  Formula obligation;               // ∀h (h r Γ → τ↓ ∧ τ r φ)
  std::vector<Term> line_realizers;
};

// h r Γ, or 0 = 0 when Γ is empty
Formula realize_context(const Term& h, std::span<const Formula> gamma, const RealizabilityConfig& cfg = standard_config());

// a realizer of any true formula built from =, ⊥, ∧, → and ∀
Term trivial_realizer(const Formula& f);

// throws KernelError when d does not check
ExtractionResult extract(const Derivation& d, const RealizabilityConfig& cfg = standard_config());

}  // namespace fixkit
