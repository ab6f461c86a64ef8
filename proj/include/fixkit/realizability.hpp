#pragma once
// Realizability: the r-translation τ r φ, its clauses for the parameter
// predicates P_n and the fixpoint predicates I_Φ, and the realizer of the
// fixpoint axioms.

#include "fixkit/syntax.hpp"

#include <functional>
#include <optional>

namespace fixkit {

class RealizabilityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// r R for each relation symbol R; the image has arity one more than R.
struct RealizabilityConfig {
  std::function<std::optional<RelSym>(const RelSym&)> clause;
};

// P_n ↦ P_{n+1}, I_Φ ↦ I_{v_n r Φ}, Defined(tag) ↦ Defined("r" + tag)
RealizabilityConfig standard_config();

// throws RealizabilityError for a relation outside cfg
RelSym realize_relation(const RelSym& R, const RealizabilityConfig& cfg);
Formula realize(const Term& tau, const Formula& phi, const RealizabilityConfig& cfg = standard_config());

// ∃x (x r φ), x the least variable not free in φ
Formula self_realize(const Formula& phi, const RealizabilityConfig& cfg = standard_config());

// (τ r φ)(u/σ) α-equals (τ(u/σ)) r (φ(u/σ))
bool check_readist(const Formula& phi, const Term& tau, std::span<const Var> us, std::span<const Term> sigmas,
                   const RealizabilityConfig& cfg = standard_config());

// v_n r Φ for Φ in POS_{P_n}; an operator form in P_{n+1}
Formula rea_operator(const Formula& Phi, unsigned n);

// λy_0..y_{n-1}. p id id
Term fixpoint_realizer(unsigned n);

}  // namespace fixkit
