#pragma once
// Syntax predicates and operations on codes. Each exists once here and once
// as an @-primitive of the evaluator (see prims.cpp); predicates answer 0 for
// yes and 1 for no, matching their use as equations `P·x = 0`.

#include "fixkit/goedel.hpp"

namespace fixkit::codes {

bool is_seq(const Nat& s);
Nat lh(const Nat& s);              // 0 off sequences
Nat nth(const Nat& s, const Nat& i);  // 0 off range
bool is_var(const Nat& x);
bool is_term(const Nat& t);
bool is_formula(const Nat& f);
bool fv(const Nat& F, const Nat& x);  // x codes a variable free in term or formula F
bool bv(const Nat& F, const Nat& x);  // x codes a variable bound in formula F
Nat sub(const Nat& F, const Nat& x, const Nat& s);  // F unchanged when arguments are ill formed
Nat numc(const Nat& n);            // code of the numeral n
bool nf(const Nat& F, unsigned n);
bool lam(const Nat& F, unsigned n);
Nat norm(const Nat& F, unsigned n);  // code of λ_n(F); F itself off Λ_n
Nat conjs(const Nat& s);             // conjs(<e>) = e, conjs(<h,t..>) = conjs(t..) ∧ h
Nat mkall(const Nat& v, const Nat& G);
Nat mkimp(const Nat& g, const Nat& f);
Nat mkconj(const Nat& a, const Nat& b);

// Σ-equation destructors: F = [∃v (s = t)]
bool is_sigma(const Nat& F);
Nat ex_var(const Nat& F);
Nat ex_lhs(const Nat& F);
Nat ex_rhs(const Nat& F);

// term destructors used by val
enum class TermTag : unsigned { var = 0, atom = 1, succ = 2, add = 3, mul = 4, app = 5, other = 6 };
TermTag term_tag(const Nat& c);
Nat term_left(const Nat& c);
Nat term_right(const Nat& c);

}  // namespace fixkit::codes
