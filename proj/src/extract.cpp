#include "fixkit/extract.hpp"

#include "fixkit/combinatory.hpp"
#include "fixkit/hierarchy.hpp"

namespace fixkit {

namespace {

Term pl(Term t) { return app(constant(Sym::pl), std::move(t)); }
Term pr(Term t) { return app(constant(Sym::pr), std::move(t)); }
Term pair(Term a, Term b) { return app(constant(Sym::p), {std::move(a), std::move(b)}); }
Term zero() { return constant(Sym::zero); }
Term kconst(Term t) { return app(constant(Sym::k), std::move(t)); }

class Extractor {
 public:
  Extractor(const Derivation& d, const RealizabilityConfig& cfg) : d_(d), cfg_(cfg) {
    for (const auto& h : d.hypotheses) all_vars(h, used_);
    for (const auto& l : d.lines) all_vars(l.formula, used_);
    h_ = used_.contains(Var{0}) ? fresh(used_) : Var{0};
    used_.insert(h_);
    y_ = fresh(used_);
    z_ = fresh(used_, y_.index + 1);
  }

  ExtractionResult run() {
    auto spec = theory_spec(d_.theory);
    if (auto r = check(d_, spec); !r.ok)
      throw KernelError("extract: line " + std::to_string(r.line + 1) + ": " + r.reason);
    std::vector<Term> out;
    for (std::size_t i = 0; i < d_.lines.size(); ++i) out.push_back(line(i, out, spec));

    const Formula& phi = d_.conclusion();
    Term tau = out.back();
    // variables left over from eliminated instances carry no information
    VarSet keep = free_vars(phi);
    keep.insert(h_);
    std::vector<Var> stray;
    std::vector<Term> zeros;
    for (Var v : free_vars(tau))
      if (!keep.contains(v)) {
        stray.push_back(v);
        zeros.push_back(zero());
      }
    if (!stray.empty()) tau = subst(tau, stray, zeros);

    Term h = var(h_);
    Formula ob = all(h_, imp(realize_context(h, d_.hypotheses, cfg_), conj(down(tau), realize(tau, phi, cfg_))));
    return {tau, h_, ob, std::move(out)};
  }

 private:
  const Derivation& d_;
  const RealizabilityConfig& cfg_;
  VarSet used_;
  Var h_, y_, z_;

  // premise realizers denote by soundness, so they may sit under K as they are
  Term lam(Var x, const Term& t) const { return lambda_abstract_denoting(x, t); }

  Term lpt_axiom(const Formula& f, unsigned id) const {
    const Term y = var(y_);
    AxiomMatch m;
    bool found = false;
    for (auto& r : match_lpt_axioms(f))
      if (r.id == id) {
        m = r;
        found = true;
        break;
      }
    if (!found) throw KernelError("extract: no LPT" + std::to_string(id) + " reading");
    switch (id) {
      case 1: return builtin("id");
      case 4: return constant(m.clause == 0 ? Sym::pl : Sym::pr);
      case 6: return lam(y_, pair(m.clause == 0 ? zero() : numeral(1), y));
      case 10: return kconst(zero());
      case 12: return lam(y_, app(pl(y), m.terms.at(0)));
      case 14: return lam(y_, pair(m.terms.at(0), pl(y)));
      case 19: {
        // ∀x⃗y⃗ (R(x⃗) ∧ x⃗ = y⃗ → R(y⃗)): the realizer of R(x⃗) carries over
        std::vector<Var> vs;
        Formula body = f;
        while (body->kind == FKind::all) {
          vs.push_back(body->bound);
          body = body->a;
        }
        return lambda_abstract(vs, lam(y_, pl(y)));
      }
      default: return trivial_realizer(f);
    }
  }

  Term line(std::size_t i, const std::vector<Term>& out, const TheorySpec& spec) const {
    using K = Justification::Kind;
    const Line& l = d_.lines[i];
    const Formula& f = l.formula;
    const auto& ps = l.just.premises;
    auto P = [&](std::size_t k) { return d_.lines[ps[k]].formula; };
    auto R = [&](std::size_t k) { return out[ps[k]]; };
    const Term y = var(y_), z = var(z_);
    switch (l.just.kind) {
      case K::hypothesis: return tuple_proj(var(h_), l.just.id, d_.hypotheses.size());
      case K::lpt_axiom: return lpt_axiom(f, l.just.id);
      case K::hap_axiom: {
        if (l.just.id == 8) return constant(Sym::r);
        return trivial_realizer(f);
      }
      case K::fixpoint_axiom: {
        auto I = match_fixpoint_axiom(f, spec);
        if (!I) throw KernelError("extract: line " + std::to_string(i + 1) + " is not a fixpoint axiom");
        return fixpoint_realizer(I->arity);
      }
      case K::rule: break;
    }
    switch (l.just.id) {
      case 2: {
        // either premise order is accepted by the checker
        Formula ab = P(1);
        if (ab->kind == FKind::imp && alpha_equal(ab->a, P(0)) && alpha_equal(ab->b, f)) return app(R(1), R(0));
        return app(R(0), R(1));
      }
      case 3: return lam(y_, app(R(1), app(R(0), y)));
      case 5: return lam(y_, pair(app(R(0), y), app(R(1), y)));
      case 7: return lam(y_, app(constant(Sym::d), {pl(y), zero(), R(0), R(1), pr(y)}));
      case 8: return lam(y_, lam(z_, app(R(0), pair(y, z))));
      case 9: return lam(y_, app(R(0), {pl(y), pr(y)}));
      case 11: return lam(y_, lam(f->b->bound, app(R(0), y)));
      case 13: return lam(y_, app(lam(f->a->bound, R(0)), {pl(y), pr(y)}));
    }
    throw KernelError("extract: unknown rule LPT" + std::to_string(l.just.id));
  }
};

}  // namespace

Formula realize_context(const Term& h, std::span<const Formula> gamma, const RealizabilityConfig& cfg) {
  std::vector<Formula> parts;
  for (std::size_t i = 0; i < gamma.size(); ++i) parts.push_back(realize(tuple_proj(h, i, gamma.size()), gamma[i], cfg));
  return conj_all(parts);
}

Term trivial_realizer(const Formula& f) {
  switch (f->kind) {
    case FKind::bot:
    case FKind::eq:
    case FKind::rel: return zero();
    case FKind::conj: return pair(trivial_realizer(f->a), trivial_realizer(f->b));
    case FKind::disj: return pair(zero(), trivial_realizer(f->a));
    case FKind::imp: return kconst(trivial_realizer(f->b));
    case FKind::all: return kconst(trivial_realizer(f->a));
    case FKind::ex: return pair(zero(), trivial_realizer(f->a));
  }
  return zero();
}

ExtractionResult extract(const Derivation& d, const RealizabilityConfig& cfg) { return Extractor(d, cfg).run(); }

}  // namespace fixkit
