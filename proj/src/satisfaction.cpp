#include "fixkit/satisfaction.hpp"

#include "fixkit/combinatory.hpp"
#include "fixkit/goedel.hpp"
#include "fixkit/hierarchy.hpp"

#include <mutex>

namespace fixkit {

namespace {

Term P(std::string_view name) { return prim(std::string(name)); }
Term P(std::string_view name, std::initializer_list<Term> args) { return app(prim(std::string(name)), args); }
Term zero() { return constant(Sym::zero); }
Term pair(Term a, Term b) { return app(constant(Sym::p), {std::move(a), std::move(b)}); }
Term level_prim(const char* stem, unsigned n) { return prim(stem + std::to_string(n)); }

Term make_val() {
  const Var self{0}, e{1}, c{2}, w{3};
  auto rec = [&](Term arg) { return app(var(self), {var(e), std::move(arg)}); };
  Term l = P("tleft", {var(c)}), r = P("tright", {var(c)});
  // branch per term tag, in the order of codes::TermTag
  std::vector<Term> branches = {
      app(var(e), var(c)),
      P("tconst", {var(c)}),
      app(constant(Sym::succ), rec(l)),
      add(rec(l), rec(r)),
      mul(rec(l), rec(r)),
      app(rec(l), rec(r)),
  };
  Term tag = P("ttag", {var(c)});
  Term next = lambda_abstract(w, zero());
  for (std::size_t k = branches.size(); k-- > 0;) {
    Term F = lambda_abstract(w, branches[k]);
    next = lambda_abstract(w, app(constant(Sym::d), {tag, num(Nat(k)), F, next, var(w)}));
  }
  std::array<Var, 3> xs{self, e, c};
  Term V = lambda_abstract(xs, app(next, zero()));
  return app(builtin("fix"), V);
}

}  // namespace

const ValPackage& build_val() {
  static const ValPackage pkg = [] {
    ValPackage p;
    p.val = make_val();
    for (const char* n : {"seq", "lh", "nth", "var", "fv", "bv", "term", "sub", "numc", "conjs", "mkall", "mkimp",
                          "mkconj", "issigma", "exvar", "exlhs", "exrhs"})
      p.syntax.emplace(n, P(n));
    for (unsigned k = 0; k < 4; ++k)
      for (const char* stem : {"nf", "lam", "norm"}) {
        Term t = level_prim(stem, k);
        p.syntax.emplace(t->name, t);
      }
    return p;
  }();
  return pkg;
}

Term env_term(unsigned k) {
  Term e = builtin("id");
  for (unsigned j = 0; j < k; ++j) e = update_term(e, num(encode(Var{j}).value), var(j));
  return e;
}

Term env_of(std::span<const Nat> values) {
  Term e = builtin("id");
  for (std::size_t j = 0; j < values.size(); ++j)
    e = update_term(e, num(encode(Var{static_cast<std::uint32_t>(j)}).value), num(values[j]));
  return e;
}

Formula instantiate_sat(const Formula& f, const Term& e, const Term& F) {
  std::array<Var, 2> xs{Var{0}, Var{1}};
  std::array<Term, 2> ts{e, F};
  return subst_term(f, xs, ts);
}

namespace {

Term val_app(const Term& e, const Term& c) { return app(build_val().val, {e, c}); }

Formula sat_raw_zero() {
  const Term e = var(0), F = var(1);
  Term U = update_term(e, P("exvar", {F}), var(2));
  Term lhs = pair(P("issigma", {F}), val_app(U, P("exlhs", {F})));
  Term rhs = pair(zero(), val_app(U, P("exrhs", {F})));
  return ex(Var{2}, eq(lhs, rhs));
}

Formula sat_raw_succ(unsigned n, const Formula& sat_nf_n, const Formula& sat_nf_0) {
  const Term e = var(0), F = var(1), x = var(2), v = var(3), G = var(4), s = var(5), i = var(6), f = var(7),
             g = var(8);
  Term U = update_term(e, v, x);
  Term si = P("nth", {s, i});
  Term lh = P("lh", {s});
  std::array<Formula, 5> outer = {
      eq(P("var", {v}), zero()), eq(F, P("mkall", {v, G})), eq(P("seq", {s}), zero()), less(zero(), lh, Var{9}),
      eq(G, P("conjs", {s})),
  };
  std::array<Formula, 5> inner = {
      less(f, si, Var{11}), less(g, si, Var{12}), eq(si, P("mkimp", {g, f})),
      eq(app(level_prim("nf", n), g), zero()), eq(app(level_prim("nf", 0), f), zero()),
  };
  Formula step = imp(instantiate_sat(sat_nf_n, U, g), instantiate_sat(sat_nf_0, U, f));
  Formula body = all(Var{7}, all(Var{8}, imp(conj_all(inner), step)));
  body = all(Var{6}, imp(less(i, lh, Var{10}), body));
  body = all(Var{2}, all(Var{3}, all(Var{4}, all(Var{5}, imp(conj_all(outer), body)))));
  return conj(eq(app(level_prim("nf", n + 1), F), zero()), body);
}

}  // namespace

SatFamily build_sat(unsigned n) {
  static std::mutex mu;
  static std::map<unsigned, SatFamily> cache;
  {
    std::lock_guard lock(mu);
    if (auto it = cache.find(n); it != cache.end()) return it->second;
  }
  SatFamily out;
  out.n = n;
  if (n == 0) {
    out.sat_raw = sat_raw_zero();
  } else {
    SatFamily prev = build_sat(n - 1);
    SatFamily base = build_sat(0);
    out.sat_raw = sat_raw_succ(n - 1, prev.sat_nf, base.sat_nf);
  }
  out.sat_nf = normalize(out.sat_raw, n);
  out.sat = subst_term(out.sat_nf, Var{1}, app(level_prim("norm", n), var(1)));
  std::lock_guard lock(mu);
  return cache.emplace(n, out).first->second;
}

Formula diagonalize_at(const Formula& phi, unsigned n, unsigned slot) {
  if (!in_level(phi, n)) throw SatisfactionError("diagonalize: formula is not in Λ_" + std::to_string(n));
  for (Var x : free_vars(phi))
    if (x.index > slot) throw SatisfactionError("diagonalize: free variable v" + std::to_string(x.index) + " above the slot");
  const Var k{slot};
  Term probe = P("sub", {var(k), num(encode(k).value), P("numc", {var(k)})});
  Formula theta = subst_term(phi, k, probe);
  return subst_term(theta, k, num(encode(theta).value));
}

Formula diagonalize(const Formula& phi, unsigned n) {
  VarSet fv = free_vars(phi);
  if (fv.empty()) throw SatisfactionError("diagonalize: formula has no free variable");
  unsigned k = fv.rbegin()->index;
  if (fv.size() != k + 1) throw SatisfactionError("diagonalize: free variables are not v0..v" + std::to_string(k));
  return diagonalize_at(phi, n, k);
}

Formula interpret_fixpoint(const RelSym& I) {
  if (I.kind != RelSym::Kind::fix) throw SatisfactionError("interpret: not a fixpoint symbol");
  if (!is_almost_negative(I.body)) return bot();
  const unsigned k = I.arity;
  Formula Phi = interpret_F(I.body);
  unsigned n = classify(Phi).value_or(0);
  Formula S = instantiate_sat(build_sat(n).sat, env_term(k), var(k));
  std::vector<Var> xs;
  for (unsigned j = 0; j < k; ++j) xs.push_back(Var{j});
  Formula theta = subst_relation(Phi, RelSym::param(k), xs, S);
  return diagonalize_at(theta, n, k);
}

Formula interpret_F(const Formula& phi) {
  switch (phi->kind) {
    case FKind::bot:
    case FKind::eq: return phi;
    case FKind::rel: {
      if (phi->rel.kind != RelSym::Kind::fix) return phi;
      Formula psi = interpret_fixpoint(phi->rel);
      std::vector<Var> xs;
      for (unsigned j = 0; j < phi->rel.arity; ++j) xs.push_back(Var{j});
      return subst_term(psi, xs, phi->args);
    }
    case FKind::conj: return conj(interpret_F(phi->a), interpret_F(phi->b));
    case FKind::disj: return disj(interpret_F(phi->a), interpret_F(phi->b));
    case FKind::imp: return imp(interpret_F(phi->a), interpret_F(phi->b));
    case FKind::all: return all(phi->bound, interpret_F(phi->a));
    case FKind::ex: return ex(phi->bound, interpret_F(phi->a));
  }
  return phi;
}

std::vector<SatObligation> sat_obligations(unsigned n) {
  SatFamily S = build_sat(n);
  const Term e = var(0), F = var(1);
  auto nf = [&](const Term& t) { return eq(app(level_prim("nf", n), t), zero()); };
  auto sat = [&](const Term& env, const Term& code) { return instantiate_sat(S.sat_nf, env, code); };
  auto close = [](Formula f) {
    VarSet fv = free_vars(f);
    for (auto it = fv.rbegin(); it != fv.rend(); ++it) f = all(*it, f);
    return f;
  };
  std::vector<SatObligation> out;
  {
    // conjunction: G = v2
    Term G = var(2);
    Formula conj_code = instantiate_sat(S.sat, e, P("mkconj", {F, G}));
    out.push_back({"conjunction", close(imp(conj(nf(F), nf(G)), iff(conj_code, conj(sat(e, F), sat(e, G)))))});
  }
  {
    // environment relevance: f = v2, x = v3
    Term f = var(2), x = var(3);
    Formula agree = all(Var{3}, imp(less(x, F, Var{4}), imp(eq(P("fv", {F, x}), zero()), eq(app(e, x), app(f, x)))));
    out.push_back({"environment", close(imp(conj(nf(F), agree), iff(sat(e, F), sat(f, F))))});
  }
  {
    // substitution: x = v2, s = v3, y = v4
    Term x = var(2), s = var(3), y = var(4);
    Formula clash = conj(eq(P("bv", {F, y}), zero()), eq(P("fv", {s, y}), zero()));
    Formula apart = all(Var{4}, imp(less(y, F, Var{5}), neg(clash)));
    Formula pre = conj_all(std::array<Formula, 4>{nf(F), eq(P("var", {x}), zero()), eq(P("term", {s}), zero()), apart});
    Term e2 = update_term(e, x, val_app(e, s));
    out.push_back({"substitution", close(imp(pre, iff(sat(e, P("sub", {F, x, s})), sat(e2, F))))});
  }
  return out;
}

}  // namespace fixkit
