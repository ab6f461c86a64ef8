#pragma once
// Random terms and formulas for the property tests. Everything is driven by
// an explicit seed so failures reproduce.

#include "fixkit/hierarchy.hpp"
#include "fixkit/syntax.hpp"

#include <random>

namespace gen {

using namespace fixkit;
using Rng = std::mt19937_64;

inline unsigned pick(Rng& r, unsigned n) { return std::uniform_int_distribution<unsigned>(0, n - 1)(r); }
inline bool coin(Rng& r, double p = 0.5) { return std::bernoulli_distribution(p)(r); }

// terms over 0, S, +, × and the variables in vs
inline Term ha_term(Rng& r, unsigned depth, std::span<const Var> vs) {
  if (depth == 0 || coin(r, 0.35)) {
    unsigned k = pick(r, vs.empty() ? 2 : 4);
    if (k == 0) return constant(Sym::zero);
    if (k == 1) return numeral(pick(r, 3));
    return var(vs[pick(r, vs.size())]);
  }
  switch (pick(r, 3)) {
    case 0: return succ(ha_term(r, depth - 1, vs));
    case 1: return add(ha_term(r, depth - 1, vs), ha_term(r, depth - 1, vs));
    default: return mul(ha_term(r, depth - 1, vs), ha_term(r, depth - 1, vs));
  }
}

inline std::vector<Var> first_vars(unsigned n) {
  std::vector<Var> vs;
  for (unsigned i = 0; i < n; ++i) vs.push_back(Var{i});
  return vs;
}

// ∃b (s = t), b among the variables above the free ones
inline Formula sigma(Rng& r, unsigned nfree, unsigned depth = 2) {
  Var b{nfree + pick(r, 2)};
  auto vs = first_vars(nfree);
  vs.push_back(b);
  return ex(b, eq(ha_term(r, depth, vs), ha_term(r, depth, vs)));
}

// Λ_0: conjunctions of equations and Σ-equations, ⊥ rarely
inline Formula lambda0(Rng& r, unsigned nfree, unsigned parts = 0) {
  if (parts == 0) parts = 1 + pick(r, 2);
  std::vector<Formula> cs;
  auto vs = first_vars(nfree);
  for (unsigned i = 0; i < parts; ++i) {
    unsigned k = pick(r, 10);
    if (k == 0) cs.push_back(bot());
    else if (k < 5) cs.push_back(eq(ha_term(r, 2, vs), ha_term(r, 2, vs)));
    else cs.push_back(sigma(r, nfree));
  }
  return conj_all(cs);
}

// almost negative of level ≤ n, over free variables v0..v_{nfree-1}
inline Formula lambda_n(Rng& r, unsigned n, unsigned nfree, unsigned depth = 4) {
  if (n == 0 || depth == 0 || coin(r, 0.25)) return lambda0(r, nfree);
  switch (pick(r, 3)) {
    case 0: return conj(lambda_n(r, n, nfree, depth - 1), lambda_n(r, n, nfree, depth - 1));
    case 1: {
      Var x{nfree};
      return all(x, lambda_n(r, n, nfree + 1, depth - 1));
    }
    default: return imp(lambda_n(r, n - 1, nfree, depth - 1), lambda_n(r, n, nfree, depth - 1));
  }
}

// formulas in L_HAP(P_k): every connective, relation atoms P_k over terms
inline Formula any_formula(Rng& r, unsigned depth, unsigned nfree, unsigned k = 1) {
  auto vs = first_vars(nfree);
  if (depth == 0 || coin(r, 0.25)) {
    switch (pick(r, 4)) {
      case 0: return bot();
      case 1: {
        std::vector<Term> args;
        for (unsigned i = 0; i < k; ++i) args.push_back(ha_term(r, 1, vs));
        return rel(RelSym::param(k), std::move(args));
      }
      default: return eq(ha_term(r, 1, vs), ha_term(r, 1, vs));
    }
  }
  switch (pick(r, 6)) {
    case 0: return conj(any_formula(r, depth - 1, nfree, k), any_formula(r, depth - 1, nfree, k));
    case 1: return disj(any_formula(r, depth - 1, nfree, k), any_formula(r, depth - 1, nfree, k));
    case 2: return imp(any_formula(r, depth - 1, nfree, k), any_formula(r, depth - 1, nfree, k));
    case 3: return all(Var{nfree}, any_formula(r, depth - 1, nfree + 1, k));
    case 4: return ex(Var{nfree}, any_formula(r, depth - 1, nfree + 1, k));
    default: return any_formula(r, depth - 1, nfree, k);
  }
}

// P_n occurring only strictly positively; FV exactly v0..v_{n-1}.
// With almost_negative, no ∨ and every ∃ fronts an equation.
inline Formula strictly_positive(Rng& r, unsigned depth, unsigned nfree, unsigned n, bool almost_negative) {
  auto vs = first_vars(nfree);
  auto atom = [&] {
    std::vector<Term> args;
    for (unsigned i = 0; i < n; ++i) args.push_back(ha_term(r, 1, vs));
    return rel(RelSym::param(n), std::move(args));
  };
  if (depth == 0 || coin(r, 0.3)) return coin(r) ? atom() : eq(ha_term(r, 1, vs), ha_term(r, 1, vs));
  unsigned choices = almost_negative ? 4 : 6;
  switch (pick(r, choices)) {
    case 0: return conj(strictly_positive(r, depth - 1, nfree, n, almost_negative),
                        strictly_positive(r, depth - 1, nfree, n, almost_negative));
    case 1: {
      // antecedents carry no relation symbols at all
      Formula side = almost_negative ? lambda0(r, nfree, 1) : any_formula(r, 1, nfree, n);
      if (!relations(side).empty()) side = lambda0(r, nfree, 1);
      return imp(side, strictly_positive(r, depth - 1, nfree, n, almost_negative));
    }
    case 2: return all(Var{nfree}, strictly_positive(r, depth - 1, nfree + 1, n, almost_negative));
    case 3: return almost_negative ? sigma(r, nfree) : atom();
    case 4: return disj(strictly_positive(r, depth - 1, nfree, n, almost_negative),
                        strictly_positive(r, depth - 1, nfree, n, almost_negative));
    default: return ex(Var{nfree}, strictly_positive(r, depth - 1, nfree + 1, n, almost_negative));
  }
}

inline Formula operator_form(Rng& r, unsigned n, bool almost_negative = false, unsigned depth = 3) {
  Formula f = strictly_positive(r, depth, n, n, almost_negative);
  std::vector<Formula> cs{f};
  if (relations(f).empty()) {
    std::vector<Term> args;
    for (unsigned i = 0; i < n; ++i) args.push_back(var(i));
    cs.push_back(rel(RelSym::param(n), std::move(args)));
  }
  VarSet fv = free_vars(conj_all(cs));
  for (unsigned i = 0; i < n; ++i)
    if (!fv.contains(Var{i})) cs.push_back(down(var(i)));
  return conj_all(cs);
}

// combinatory terms over k, s, p, pl, pr, succ, small numerals and vs
inline Term comb_term(Rng& r, unsigned depth, std::span<const Var> vs) {
  if (depth == 0 || coin(r, 0.3)) {
    unsigned k = pick(r, vs.empty() ? 8 : 10);
    switch (k) {
      case 0: return constant(Sym::k);
      case 1: return constant(Sym::s);
      case 2: return constant(Sym::p);
      case 3: return constant(Sym::pl);
      case 4: return constant(Sym::pr);
      case 5: return constant(Sym::succ);
      case 6: return constant(Sym::zero);
      case 7: return num(Nat(1 + pick(r, 4)));
      default: return var(vs[pick(r, vs.size())]);
    }
  }
  return app(comb_term(r, depth - 1, vs), comb_term(r, depth - 1, vs));
}

}  // namespace gen
