// The proof builder and the deduction theorem. Every derived step expands to
// primitive LPT lines, and every appended line is checked on the spot.

#include "fixkit/kernel.hpp"

namespace fixkit {

namespace {

Formula lhs_of(const Formula& f) {
  if (f->kind != FKind::imp) throw KernelError("expected an implication: " + to_string(f));
  return f->a;
}

Formula rhs_of(const Formula& f) {
  if (f->kind != FKind::imp) throw KernelError("expected an implication: " + to_string(f));
  return f->b;
}

}  // namespace

ProofBuilder::ProofBuilder(const std::string& theory, std::vector<Formula> hypotheses) : spec_(theory_spec(theory)) {
  d_.theory = theory;
  d_.hypotheses = std::move(hypotheses);
}

ProofBuilder::ProofBuilder(Derivation d) : d_(std::move(d)), spec_(theory_spec(d_.theory)) {
  if (auto r = check(d_, spec_); !r.ok && !d_.lines.empty())
    throw KernelError("builder seeded with a derivation failing at line " + std::to_string(r.line + 1) + ": " + r.reason);
}

std::size_t ProofBuilder::add(const Formula& f, Justification j) {
  d_.lines.push_back({f, std::move(j)});
  if (auto e = check_line(d_, d_.lines.size() - 1, spec_)) {
    d_.lines.pop_back();
    throw KernelError("cannot add " + to_string(f) + ": " + *e);
  }
  return last();
}

std::size_t ProofBuilder::hyp(std::size_t i) {
  return add(d_.hypotheses.at(i), {Justification::Kind::hypothesis, static_cast<unsigned>(i), {}});
}

std::size_t ProofBuilder::axiom(const Formula& f) {
  using K = Justification::Kind;
  if (auto m = match_lpt_axiom(f)) return add(f, {K::lpt_axiom, m->id, {}});
  if (auto m = match_hap_axiom(f, spec_)) return add(f, {K::hap_axiom, m->id, {}});
  if (match_fixpoint_axiom(f, spec_)) return add(f, {K::fixpoint_axiom, 0, {}});
  throw KernelError("not an axiom of " + spec_.name + ": " + to_string(f));
}

std::size_t ProofBuilder::rule(unsigned id, std::vector<std::size_t> premises, const Formula& f) {
  return add(f, {Justification::Kind::rule, id, std::move(premises)});
}

std::size_t ProofBuilder::mp(std::size_t a, std::size_t ab) { return rule(2, {a, ab}, rhs_of(formula(ab))); }

std::size_t ProofBuilder::trans(std::size_t ab, std::size_t bc) {
  return rule(3, {ab, bc}, imp(lhs_of(formula(ab)), rhs_of(formula(bc))));
}

std::size_t ProofBuilder::con(std::size_t ab, std::size_t ac) {
  return rule(5, {ab, ac}, imp(lhs_of(formula(ab)), conj(rhs_of(formula(ab)), rhs_of(formula(ac)))));
}

std::size_t ProofBuilder::dis(std::size_t ac, std::size_t bc) {
  return rule(7, {ac, bc}, imp(disj(lhs_of(formula(ac)), lhs_of(formula(bc))), rhs_of(formula(ac))));
}

std::size_t ProofBuilder::curry(std::size_t a) {
  Formula g = formula(a);
  Formula ab = lhs_of(g);
  if (ab->kind != FKind::conj) throw KernelError("curry: antecedent is not a conjunction");
  return rule(8, {a}, imp(ab->a, imp(ab->b, g->b)));
}

std::size_t ProofBuilder::uncurry(std::size_t a) {
  Formula g = formula(a);
  Formula bc = rhs_of(g);
  return rule(9, {a}, imp(conj(g->a, lhs_of(bc)), bc->b));
}

std::size_t ProofBuilder::gen_all(std::size_t a, Var x) {
  Formula g = formula(a);
  return rule(11, {a}, imp(lhs_of(g), all(x, g->b)));
}

std::size_t ProofBuilder::gen_ex(std::size_t a, Var x) {
  Formula g = formula(a);
  return rule(13, {a}, imp(ex(x, lhs_of(g)), g->b));
}

std::size_t ProofBuilder::truth() {
  if (!truth_) truth_ = axiom(top());
  return *truth_;
}

std::size_t ProofBuilder::weaken(std::size_t a, const Formula& phi) {
  Formula A = formula(a);
  std::size_t k = axiom(imp(conj(A, phi), A));
  return mp(a, curry(k));
}

std::size_t ProofBuilder::conj_intro(std::size_t a, std::size_t b) {
  std::size_t t = truth();
  std::size_t ta = weaken(a, top()), tb = weaken(b, top());
  return mp(t, con(ta, tb));
}

std::size_t ProofBuilder::conj_left(std::size_t a) {
  Formula g = formula(a);
  if (g->kind != FKind::conj) throw KernelError("conj_left: not a conjunction");
  return mp(a, axiom(imp(g, g->a)));
}

std::size_t ProofBuilder::conj_right(std::size_t a) {
  Formula g = formula(a);
  if (g->kind != FKind::conj) throw KernelError("conj_right: not a conjunction");
  return mp(a, axiom(imp(g, g->b)));
}

std::size_t ProofBuilder::exchange(std::size_t a) {
  Formula g = formula(a);
  Formula P = g->a, Q = lhs_of(rhs_of(g));
  std::size_t u = uncurry(a);  // P∧Q → R
  Formula qp = conj(Q, P);
  std::size_t sw = con(axiom(imp(qp, P)), axiom(imp(qp, Q)));  // Q∧P → P∧Q
  return curry(trans(sw, u));
}

std::size_t ProofBuilder::assoc_left(const Formula& p, const Formula& q, const Formula& r) {
  Formula X = conj(p, conj(q, r));
  std::size_t xp = axiom(imp(X, p));
  std::size_t xqr = axiom(imp(X, conj(q, r)));
  std::size_t xq = trans(xqr, axiom(imp(conj(q, r), q)));
  std::size_t xr = trans(xqr, axiom(imp(conj(q, r), r)));
  return con(con(xp, xq), xr);
}

std::size_t ProofBuilder::assoc_right(const Formula& p, const Formula& q, const Formula& r) {
  Formula X = conj(conj(p, q), r);
  std::size_t xpq = axiom(imp(X, conj(p, q)));
  std::size_t xp = trans(xpq, axiom(imp(conj(p, q), p)));
  std::size_t xq = trans(xpq, axiom(imp(conj(p, q), q)));
  std::size_t xr = axiom(imp(X, r));
  return con(xp, con(xq, xr));
}

std::size_t ProofBuilder::forall_intro(std::size_t a, Var x) {
  std::size_t w = weaken(a, top());
  return mp(truth(), gen_all(w, x));
}

std::size_t ProofBuilder::inst(std::size_t all_line, const Term& t, std::size_t down_line) {
  Formula g = formula(all_line);
  if (g->kind != FKind::all) throw KernelError("inst: not a universal formula");
  std::size_t ax = axiom(imp(conj(g, down(t)), subst_term(g->a, g->bound, t)));
  return mp(conj_intro(all_line, down_line), ax);
}

std::size_t ProofBuilder::inst(std::size_t all_line, const Term& t) { return inst(all_line, t, prove_down(t)); }

std::size_t ProofBuilder::instantiate(std::size_t a, std::span<const Var> xs, std::span<const Term> ts) {
  if (xs.size() != ts.size()) throw KernelError("instantiate: length mismatch");
  std::size_t cur = a;
  for (auto it = xs.rbegin(); it != xs.rend(); ++it) cur = forall_intro(cur, *it);
  for (const auto& t : ts) cur = inst(cur, t);
  return cur;
}

std::size_t ProofBuilder::hap(unsigned group, unsigned clause, std::span<const Term> ts) {
  std::size_t a = axiom(hap_axiom(group, clause));
  VarSet fv = free_vars(formula(a));
  std::vector<Var> xs;
  std::vector<Term> used;
  for (std::uint32_t i = 0; i < ts.size(); ++i)
    if (fv.contains(Var{i})) {
      xs.push_back(Var{i});
      used.push_back(ts[i]);
    }
  return instantiate(a, xs, used);
}

std::size_t ProofBuilder::prove_down(const Term& t) {
  switch (t->kind) {
    case TermKind::var:
    case TermKind::constant:
    case TermKind::numeral:
    case TermKind::prim: return axiom(down(t));
    case TermKind::succ: {
      std::size_t a = axiom(hap_axiom(1, 0));
      std::array<Var, 1> xs{Var{0}};
      std::array<Term, 1> ts{t->args[0]};
      return instantiate(a, xs, ts);
    }
    case TermKind::add:
    case TermKind::mul: {
      std::size_t a = axiom(hap_axiom(1, t->kind == TermKind::add ? 1 : 2));
      std::array<Var, 2> xs{Var{0}, Var{1}};
      std::array<Term, 2> ts{t->args[0], t->args[1]};
      return instantiate(a, xs, ts);
    }
    default: throw KernelError("prove_down: no strictness proof for " + to_string(t));
  }
}

namespace {

// fresh variables for an equality axiom instantiated at ts
std::vector<Var> fresh_vars(std::size_t n, std::span<const Term> ts) {
  VarSet avoid;
  for (const auto& t : ts) collect_vars(t, avoid);
  std::vector<Var> out;
  for (std::size_t i = 0; i < n; ++i) {
    Var v = fresh(avoid);
    avoid.insert(v);
    out.push_back(v);
  }
  return out;
}

Formula alls(std::span<const Var> vs, Formula body) {
  for (auto it = vs.rbegin(); it != vs.rend(); ++it) body = all(*it, body);
  return body;
}

}  // namespace

std::size_t ProofBuilder::eq_symm(std::size_t a) {
  Formula g = formula(a);
  if (g->kind != FKind::eq) throw KernelError("eq_symm: not an equation");
  std::array<Term, 2> ts{g->lhs, g->rhs};
  auto v = fresh_vars(2, ts);
  std::size_t ax = axiom(alls(v, imp(eq(var(v[0]), var(v[1])), eq(var(v[1]), var(v[0])))));
  std::size_t both = mp(a, axiom(imp(g, conj(down(g->lhs), down(g->rhs)))));
  std::size_t i1 = inst(ax, g->lhs, conj_left(both));
  std::size_t i2 = inst(i1, g->rhs, conj_right(both));
  return mp(a, i2);
}

std::size_t ProofBuilder::eq_trans(std::size_t a, std::size_t b) {
  Formula ga = formula(a), gb = formula(b);
  if (ga->kind != FKind::eq || gb->kind != FKind::eq) throw KernelError("eq_trans: not equations");
  std::array<Term, 3> ts{ga->lhs, ga->rhs, gb->rhs};
  auto v = fresh_vars(3, ts);
  Term x = var(v[0]), y = var(v[1]), z = var(v[2]);
  std::size_t ax = axiom(alls(v, imp(conj(eq(x, y), eq(y, z)), eq(x, z))));
  std::size_t da = mp(a, axiom(imp(ga, conj(down(ga->lhs), down(ga->rhs)))));
  std::size_t db = mp(b, axiom(imp(gb, conj(down(gb->lhs), down(gb->rhs)))));
  std::size_t i1 = inst(ax, ga->lhs, conj_left(da));
  std::size_t i2 = inst(i1, ga->rhs, conj_right(da));
  std::size_t i3 = inst(i2, gb->rhs, conj_right(db));
  return mp(conj_intro(a, b), i3);
}

std::size_t ProofBuilder::cong_succ(std::size_t a) {
  Formula g = formula(a);
  if (g->kind != FKind::eq) throw KernelError("cong_succ: not an equation");
  std::array<Term, 2> ts{g->lhs, g->rhs};
  auto v = fresh_vars(2, ts);
  Term x = var(v[0]), y = var(v[1]);
  std::size_t ax = axiom(alls(v, imp(conj(eq(x, y), down(succ(x))), eq(succ(x), succ(y)))));
  std::size_t both = mp(a, axiom(imp(g, conj(down(g->lhs), down(g->rhs)))));
  std::size_t i1 = inst(ax, g->lhs, conj_left(both));
  std::size_t i2 = inst(i1, g->rhs, conj_right(both));
  // S(s)↓ from s↓ by HAP1
  std::size_t sd = axiom(hap_axiom(1, 0));
  std::size_t sdall = forall_intro(sd, Var{0});
  std::size_t sdown = inst(sdall, g->lhs, conj_left(both));
  return mp(conj_intro(a, sdown), i2);
}

// --------------------------------------------------------------- deduction

Derivation deduction(const Derivation& d, std::size_t k) {
  if (k >= d.hypotheses.size()) throw KernelError("deduction: no hypothesis " + std::to_string(k + 1));
  if (auto r = check(d); !r.ok)
    throw KernelError("deduction: input fails at line " + std::to_string(r.line + 1) + ": " + r.reason);
  const Formula psi = d.hypotheses[k];
  std::vector<Formula> rest;
  for (std::size_t i = 0; i < d.hypotheses.size(); ++i)
    if (i != k) rest.push_back(d.hypotheses[i]);
  ProofBuilder b(d.theory, rest);
  std::vector<std::size_t> out(d.lines.size());  // line i of d ↦ line proving ψ → φ_i
  using K = Justification::Kind;
  auto id_psi = [&] { return b.axiom(imp(psi, psi)); };

  for (std::size_t i = 0; i < d.lines.size(); ++i) {
    const Line& line = d.lines[i];
    const Formula& phi = line.formula;
    const auto& j = line.just;
    if (j.kind == K::hypothesis && j.id == k) {
      out[i] = id_psi();
      continue;
    }
    if (j.kind != K::rule) {
      Justification nj = j;
      if (j.kind == K::hypothesis && j.id > k) --nj.id;
      out[i] = b.weaken(b.add(phi, nj), psi);
      continue;
    }
    auto P = [&](std::size_t n) { return out[j.premises[n]]; };
    auto F = [&](std::size_t n) { return d.lines[j.premises[n]].formula; };
    switch (j.id) {
      case 2: {
        // premises in either order: find the one that is the implication
        std::size_t ia = 0, iab = 1;
        if (!(F(1)->kind == FKind::imp && alpha_equal(F(1)->a, F(0)) && alpha_equal(F(1)->b, phi))) std::swap(ia, iab);
        std::size_t u = b.uncurry(P(iab));  // ψ∧A → B
        std::size_t c = b.con(id_psi(), P(ia));  // ψ → ψ∧A
        out[i] = b.trans(c, u);
        break;
      }
      case 3: {
        Formula A = F(0)->a;
        std::size_t u1 = b.uncurry(P(0));                                     // ψ∧A → B
        std::size_t t = b.trans(b.axiom(imp(conj(psi, A), psi)), P(1));        // ψ∧A → (B→C)
        std::size_t u2 = b.uncurry(t);                                        // (ψ∧A)∧B → C
        std::size_t c = b.con(b.axiom(imp(conj(psi, A), conj(psi, A))), u1);  // ψ∧A → (ψ∧A)∧B
        out[i] = b.curry(b.trans(c, u2));
        break;
      }
      case 5: out[i] = b.curry(b.con(b.uncurry(P(0)), b.uncurry(P(1)))); break;
      case 7: out[i] = b.exchange(b.dis(b.exchange(P(0)), b.exchange(P(1)))); break;
      case 9: {
        Formula A = F(0)->a, B = F(0)->b->a;
        std::size_t u = b.uncurry(b.uncurry(P(0)));  // (ψ∧A)∧B → C
        out[i] = b.curry(b.trans(b.assoc_left(psi, A, B), u));
        break;
      }
      case 8: {
        Formula A = F(0)->a->a, B = F(0)->a->b;
        std::size_t u = b.uncurry(P(0));  // ψ∧(A∧B) → C
        out[i] = b.curry(b.curry(b.trans(b.assoc_right(psi, A, B), u)));
        break;
      }
      case 11: out[i] = b.curry(b.gen_all(b.uncurry(P(0)), phi->b->bound)); break;
      case 13: out[i] = b.exchange(b.gen_ex(b.exchange(P(0)), phi->a->bound)); break;
      default: throw KernelError("deduction: unknown rule LPT" + std::to_string(j.id));
    }
  }
  return b.derivation();
}

}  // namespace fixkit
